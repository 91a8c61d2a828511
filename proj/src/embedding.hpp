#pragma once

#include "cohomology.hpp"
#include "hasse_witt.hpp"

namespace kani {

// the data of the relative embedding problem: an H-cover presented by its
// delta table and an extension of H by a p-group
struct EmbeddingProblem {
  CoverDatum cover;
  ExtensionData extension;
};
EmbeddingProblem make_problem(CoverDatum cover, ExtensionData extension);

struct SlackRow {
  uint32_t simple_index = 0;
  uint32_t dim_V = 0;
  uint32_t h1_G = 0;
  uint32_t h1_H = 0;
  uint32_t delta = 0;
  int64_t slack = 0;  // delta - h1_G + h1_H
};
std::vector<SlackRow> kani_check(const EmbeddingProblem& pb, const Options& opt = Options());

struct ReductionStep {
  enum class Kind { FrattiniQuotient, SimpleQuotient };
  Kind kind = Kind::FrattiniQuotient;
  uint32_t collapsed_order = 1;  // |O|
  uint32_t child_order = 1;      // |G/O|
  std::vector<SlackRow> child_slack;
};

struct BaseCase {
  uint32_t kernel_dim = 0;  // over F_p
  bool class_trivial = false;
  bool solvable = false;
  std::string rationale;
};

struct Verdict {
  bool solvable = false;
  std::vector<SlackRow> slack;
  std::vector<ReductionStep> trace;
  std::vector<BaseCase> base_cases;
  uint64_t seed = 0;
  std::string field_desc;
  std::vector<std::string> notes;

  std::string to_text() const;
};

// Decision by the slack criterion, with the reduction route (Frattini and
// simple-quotient collapses down to classified base cases) run alongside as
// an independent certificate; divergence raises errc::anomaly.
Verdict decide_strong_solvability(const EmbeddingProblem& pb, const Options& opt = Options());

std::vector<ReductionStep> reduction_trace(const EmbeddingProblem& pb,
                                           const Options& opt = Options());

// classification of a reduced problem (elementary abelian kernel, simple as
// a conjugation module): nontrivial class means solvable outright, trivial
// class needs delta > 0 at the dividing simples
BaseCase classify_base_case(const EmbeddingProblem& pb, const Options& opt = Options());

// the counting identity dim Hom_H(pi_1^ab(Y), P) = deg P (h^2(H,V) + delta_{Y,V});
// all cross-summand agreements are verified before returning
struct HomCount {
  uint32_t deg = 0;        // summand count of the base change
  uint32_t hom_dim = 0;    // deg (h2 + delta)
  uint32_t h2_side = 0;    // deg h2 = dim_{F_p} H^2(H, P)
};
HomCount hom_count(const CoverDatum& y, const GModule& P_mod, const Options& opt = Options());

// the p'-route: dim_{F_p} H^1(P x| H, V) <= deg V * delta_{Y,V} for every
// F_p[H]-simple V, with the semidirect product built from the given action
bool decide_pprime_profinite(const GroupPtr& P, const CoverDatum& y,
                             const std::vector<std::vector<uint16_t>>& action_on_gens,
                             const Options& opt = Options());

struct RouteReport {
  bool solvable = false;
  Verdict strong;
  bool pprime = false;
};
RouteReport cross_check_routes(const GroupPtr& P, const CoverDatum& y,
                               const std::vector<std::vector<uint16_t>>& action_on_gens,
                               const Options& opt = Options());

}  // namespace kani
