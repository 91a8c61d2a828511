#pragma once

#include "group.hpp"
#include "modrep.hpp"
#include "projectives.hpp"

namespace kani {

enum class CoverSource { OrdinaryFormula, UserSupplied };

// An etale H-cover Y -> X presented by the data the decision engine needs:
// base genus and the delta table, keyed by the canonical simple order over
// the minimal splitting field. The engine never sees a curve; a user table
// asserts the cover exists.
struct CoverDatum {
  GroupPtr H;
  uint32_t p = 0;
  Field field;
  uint32_t g_X = 0;
  SimpleSet simples;
  std::vector<uint32_t> delta;
  CoverSource source = CoverSource::OrdinaryFormula;
  std::vector<std::string> notes;

  std::string to_text() const;
};

// dim V (g_X - 1) - h1 + h0; a negative value means no ordinary cover with
// these parameters exists and raises errc::domain
uint32_t delta_ordinary(const GModule& V, uint32_t g_X, const Options& opt = Options());

CoverDatum ordinary_cover(const GroupPtr& H, uint32_t p, uint32_t g_X,
                          const Options& opt = Options());
CoverDatum user_cover(const GroupPtr& H, uint32_t p, uint32_t g_X,
                      const std::vector<uint32_t>& delta, const Options& opt = Options());

// delta table of the dominating cover Z -> X along 1 -> P -> G -> H -> 1:
// delta_Z(q*V) = delta_Y(V) + h1(H,V) - h1(G,q*V), indexed by the simples of
// G through the (verified) inflation bijection
CoverDatum transfer_delta_along_quotient(const CoverDatum& y, const ExtensionData& e,
                                         const Options& opt = Options());

bool is_V_ordinary(const CoverDatum& y, uint32_t index, const Options& opt = Options());
bool is_ordinary(const CoverDatum& y, const Options& opt = Options());

// etale Hurwitz: n (g_X - 1) + 1
uint32_t genus_of_cover(uint32_t g_X, uint32_t n);

// Hasse-Witt invariant of the total space: dim Omega^2 k + sum dim P(V) delta_V
uint32_t gamma_from_table(const CoverDatum& y, const ProjectiveTable& t);
uint32_t gamma_from_table(const CoverDatum& y, const Options& opt = Options());

}  // namespace kani
