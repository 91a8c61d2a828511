#include "hasse_witt.hpp"

#include <cstdio>

#include "cohomology.hpp"

namespace kani {

namespace {

CoverDatum cover_shell(const GroupPtr& H, uint32_t p, uint32_t g_X, const Options& opt) {
  require(is_prime_u32(p), errc::domain, "p must be prime");
  require(H->n == 1 || g_X >= 1, errc::domain, "a nontrivial unramified quotient needs base genus at least 1");
  CoverDatum y;
  y.H = H;
  y.p = p;
  y.g_X = g_X;
  uint32_t m = splitting_field_degree(H, p, opt.field_cap, opt.seed);
  y.field = m == 1 ? FieldParams::prime(p) : FieldParams::make(p, m);
  y.simples = simple_modules(H, y.field, opt.seed);
  if (g_X == 1 && !H->is_abelian())
    y.notes.push_back("base genus 1 cannot carry a nonabelian unramified quotient; data taken as stated");
  return y;
}

}  // namespace

uint32_t delta_ordinary(const GModule& V, uint32_t g_X, const Options& opt) {
  require(V.group->n == 1 || g_X >= 1, errc::domain, "a nontrivial unramified quotient needs base genus at least 1");
  int64_t val = int64_t(V.dim) * (int64_t(g_X) - 1) - int64_t(h1(V, opt)) + int64_t(h0(V));
  require(val >= 0, errc::domain, "inconsistent cover data: no ordinary cover with these parameters");
  return uint32_t(val);
}

CoverDatum ordinary_cover(const GroupPtr& H, uint32_t p, uint32_t g_X, const Options& opt) {
  CoverDatum y = cover_shell(H, p, g_X, opt);
  for (const GModule& V : y.simples.simples) y.delta.push_back(delta_ordinary(V, g_X, opt));
  y.source = CoverSource::OrdinaryFormula;
  return y;
}

CoverDatum user_cover(const GroupPtr& H, uint32_t p, uint32_t g_X,
                      const std::vector<uint32_t>& delta, const Options& opt) {
  CoverDatum y = cover_shell(H, p, g_X, opt);
  require(delta.size() == y.simples.simples.size(), errc::domain,
          "delta table length does not match the simple count");
  y.delta = delta;
  y.source = CoverSource::UserSupplied;
  return y;
}

CoverDatum transfer_delta_along_quotient(const CoverDatum& y, const ExtensionData& e,
                                         const Options& opt) {
  require(e.H.get() == y.H.get(), errc::domain, "extension does not target the cover's group");
  uint32_t kn = e.kernel.order();
  while (kn % y.p == 0) kn /= y.p;
  require(kn == 1, errc::domain, "kernel is not a p-group for the cover's p");

  // with a p-group kernel every simple of G is inflated, over the same field
  uint32_t mG = splitting_field_degree(e.G, y.p, opt.field_cap, opt.seed);
  require(y.field->m % mG == 0, errc::anomaly, "inflation did not preserve the splitting degree");

  CoverDatum z;
  z.H = e.G;
  z.p = y.p;
  z.field = y.field;
  z.g_X = y.g_X;
  z.simples = simple_modules(e.G, y.field, opt.seed);
  z.source = CoverSource::UserSupplied;
  z.notes = y.notes;
  require(z.simples.size() == y.simples.size(), errc::anomaly,
          "Clifford bijection failed: simple counts differ");

  std::vector<bool> hit(y.simples.size(), false);
  z.delta.resize(z.simples.size());
  for (uint32_t u = 0; u < z.simples.size(); ++u) {
    const GModule& U = z.simples.simples[u];
    for (uint16_t w : e.kernel.members)
      require(w == 0 || element_matrix(U, w) == FqMatrix::identity(y.field, U.dim), errc::anomaly,
              "Clifford bijection failed: kernel acts nontrivially on a simple");
    std::vector<FqMatrix> vmats;
    for (uint16_t hg : y.H->gens) {
      uint16_t pre = 0xffff;
      for (uint32_t a = 0; a < e.G->n; ++a)
        if (e.q.images[a] == hg) {
          pre = uint16_t(a);
          break;
        }
      require(pre != 0xffff, errc::internal, "quotient misses a generator");
      vmats.push_back(element_matrix(U, pre));
    }
    GModule V = GModule::make(y.H, y.field, U.dim, vmats);
    uint32_t v = y.simples.index_of(V, opt.seed);
    require(!hit[v], errc::anomaly, "Clifford bijection failed: two simples inflate the same way");
    hit[v] = true;

    int64_t val = int64_t(y.delta[v]) + int64_t(h1(V, opt)) - int64_t(h1(U, opt));
    require(val >= 0, errc::domain, "no such dominating cover: transfer produced a negative coefficient");
    z.delta[u] = uint32_t(val);
  }
  return z;
}

bool is_V_ordinary(const CoverDatum& y, uint32_t index, const Options& opt) {
  require(index < y.delta.size(), errc::domain, "no such simple");
  const GModule& V = y.simples.simples[index];
  int64_t val = int64_t(V.dim) * (int64_t(y.g_X) - 1) - int64_t(h1(V, opt)) + int64_t(h0(V));
  return val >= 0 && uint32_t(val) == y.delta[index];
}

bool is_ordinary(const CoverDatum& y, const Options& opt) {
  for (uint32_t s = 0; s < y.delta.size(); ++s)
    if (!is_V_ordinary(y, s, opt)) return false;
  return true;
}

uint32_t genus_of_cover(uint32_t g_X, uint32_t n) {
  require(g_X >= 1 || n == 1, errc::domain, "an etale cover of the projective line is trivial");
  return n * (g_X - 1) + 1;
}

uint32_t gamma_from_table(const CoverDatum& y, const ProjectiveTable& t) {
  require(t.group.get() == y.H.get() && t.field->same(*y.field), errc::domain,
          "projective table computed for different data");
  require(t.simples.canonical_keys == y.simples.canonical_keys, errc::anomaly,
          "delta table keyed by a different simple set");
  uint64_t gamma = t.omega2_dim;
  for (uint32_t s = 0; s < y.delta.size(); ++s)
    gamma += uint64_t(t.proj_dims[s]) * y.delta[s];
  return uint32_t(gamma);
}

uint32_t gamma_from_table(const CoverDatum& y, const Options& opt) {
  return gamma_from_table(y, projective_table(y.H, y.field, opt));
}

std::string CoverDatum::to_text() const {
  char line[128];
  std::snprintf(line, sizeof line, "cover group order %u, p=%u, g_X=%u, %s\n", H->n, p, g_X,
                source == CoverSource::OrdinaryFormula ? "ordinary" : "user table");
  std::string out = line;
  for (uint32_t s = 0; s < delta.size(); ++s) {
    std::snprintf(line, sizeof line, "  V%u dim=%u delta=%u\n", s, simples.simples[s].dim,
                  delta[s]);
    out += line;
  }
  for (const auto& n : notes) out += "  note: " + n + "\n";
  return out;
}

}  // namespace kani
