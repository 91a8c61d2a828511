#include "selftest.hpp"

#include <cstdio>
#include <set>

#include "embedding.hpp"

namespace kani {
namespace {

struct Ctx {
  Options opt;
  uint32_t checks = 0;
  std::string fail;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && fail.empty()) fail = what;
  }
};

std::string place(const char* what, const std::string& where) { return std::string(what) + " at " + where; }

ExtensionData onto_trivial(const GroupPtr& g, const GroupPtr& one, uint32_t p) {
  std::vector<uint16_t> zeros(g->gens.size(), 0);
  return make_extension(g, one, make_hom(g, one, zeros), p);
}

ExtensionData quotient_ext(const GroupPtr& g, const Subgroup& k, uint32_t p) {
  auto qr = quotient_group(g, k);
  return make_extension(g, qr.quotient, qr.proj, p);
}

Subgroup span_of_order(const GroupPtr& g, uint32_t ord) {
  for (uint16_t x = 1; x < g->n; ++x) {
    if (g->element_order(x) != ord) continue;
    bool central = true;
    for (uint16_t y = 0; y < g->n && central; ++y)
      if (g->mulv(x, y) != g->mulv(y, x)) central = false;
    if (central) return subgroup_generated(g, {x});
  }
  fail(errc::internal, "battery group lost a central element order");
}

Subgroup involution_closure(const GroupPtr& g) {
  std::vector<uint16_t> xs;
  for (uint16_t x = 1; x < g->n; ++x)
    if (g->element_order(x) == 2) xs.push_back(x);
  return subgroup_generated(g, xs);
}

GroupPtr elem9() { return from_permutations({{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}}); }

struct NamedExt {
  std::string name;
  uint32_t p;
  ExtensionData e;
};

std::vector<NamedExt> extension_battery() {
  GroupPtr one = trivial_group();
  GroupPtr c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  GroupPtr c6 = cyclic_group(6), c9 = cyclic_group(9);
  GroupPtr v4 = klein4(), d4 = dihedral8(), q8 = quaternion8(), a4 = alternating4();
  std::vector<NamedExt> out;
  out.push_back({"C2/1", 2, make_extension(c2, one, make_hom(c2, one, {0}), 2)});
  out.push_back({"C4/1", 2, make_extension(c4, one, make_hom(c4, one, {0}), 2)});
  out.push_back({"C4/C2", 2, make_extension(c4, c2, make_hom(c4, c2, {c2->gens[0]}), 2)});
  out.push_back({"V4/C2", 2, make_extension(v4, c2, make_hom(v4, c2, {c2->gens[0], 0}), 2)});
  out.push_back({"D4/V4", 2, quotient_ext(d4, span_of_order(d4, 2), 2)});
  out.push_back({"Q8/V4", 2, quotient_ext(q8, span_of_order(q8, 2), 2)});
  out.push_back({"A4/C3", 2, quotient_ext(a4, involution_closure(a4), 2)});
  out.push_back({"C6/C3", 2, quotient_ext(c6, span_of_order(c6, 2), 2)});
  out.push_back({"C6/C2", 3, quotient_ext(c6, span_of_order(c6, 3), 3)});
  out.push_back({"C9/C3", 3, quotient_ext(c9, span_of_order(c9, 3), 3)});
  return out;
}

// 1. ordinary covers close the etale genus count, with the known empty cases
void crit1(Ctx& c) {
  struct Case {
    const char* label;
    GroupPtr g;
  };
  std::vector<Case> gs = {{"C2", cyclic_group(2)}, {"C3", cyclic_group(3)},
                          {"C4", cyclic_group(4)}, {"V4", klein4()},
                          {"S3", symmetric_group(3)}, {"A4", alternating4()}};
  auto skipped = [](const std::string& l, uint32_t p, uint32_t gx) {
    return (l == "V4" && p == 2 && gx == 1) || (l == "S3" && p == 3 && gx == 1) ||
           (l == "A4" && p == 2 && gx == 1);
  };
  for (const auto& gc : gs)
    for (uint32_t p : {2u, 3u, 5u})
      for (uint32_t gx : {1u, 2u, 3u}) {
        char at[48];
        std::snprintf(at, sizeof at, "%s p=%u g=%u", gc.label, p, gx);
        bool threw = false;
        try {
          CoverDatum y = ordinary_cover(gc.g, p, gx, c.opt);
          c.check(gamma_from_table(y, c.opt) == genus_of_cover(gx, gc.g->n),
                  place("genus count", at));
        } catch (const error& e) {
          if (e.code() != errc::domain) throw;
          threw = true;
        }
        c.check(threw == skipped(gc.label, p, gx), place("ordinary existence", at));
      }
}

// 2. transferring an ordinary table up a quotient lands on the ordinary table
void crit2(Ctx& c) {
  for (const auto& ne : extension_battery())
    for (uint32_t gx : {1u, 2u, 3u}) {
      std::string at = ne.name + " g=" + std::to_string(gx);
      CoverDatum yh;
      try {
        yh = ordinary_cover(ne.e.H, ne.p, gx, c.opt);
      } catch (const error& e) {
        if (e.code() != errc::domain) throw;
        continue;
      }
      bool no_g = false, no_t = false;
      CoverDatum yg, zt;
      try {
        yg = ordinary_cover(ne.e.G, ne.p, gx, c.opt);
      } catch (const error& e) {
        if (e.code() != errc::domain) throw;
        no_g = true;
      }
      try {
        zt = transfer_delta_along_quotient(yh, ne.e, c.opt);
      } catch (const error& e) {
        if (e.code() != errc::domain) throw;
        no_t = true;
      }
      c.check(no_g == no_t, place("transfer existence", at));
      if (no_g || no_t) continue;
      c.check(zt.field->q == yg.field->q, place("transfer field", at));
      c.check(zt.simples.canonical_keys == yg.simples.canonical_keys, place("transfer order", at));
      c.check(zt.delta == yg.delta, place("transfer table", at));
    }

  // cyclic towers: two transfers against the one-step table
  for (uint32_t p : {2u, 3u}) {
    GroupPtr one = trivial_group();
    GroupPtr cp = cyclic_group(p), cpp = cyclic_group(p * p);
    ExtensionData ea = make_extension(cp, one, make_hom(cp, one, {0}), p);
    ExtensionData eb = make_extension(cpp, cp, make_hom(cpp, cp, {cp->gens[0]}), p);
    for (uint32_t gx : {1u, 2u, 3u}) {
      std::string at = "tower p=" + std::to_string(p) + " g=" + std::to_string(gx);
      CoverDatum y1 = transfer_delta_along_quotient(ordinary_cover(one, p, gx, c.opt), ea, c.opt);
      c.check(y1.delta == ordinary_cover(cp, p, gx, c.opt).delta, place("first step", at));
      CoverDatum y2 = transfer_delta_along_quotient(y1, eb, c.opt);
      c.check(y2.delta == ordinary_cover(cpp, p, gx, c.opt).delta, place("second step", at));
    }
  }
}

// 3. split one-step extensions add exactly one h1 dimension per dividing simple
void crit3(Ctx& c) {
  struct HP {
    GroupPtr h;
    uint32_t p;
  };
  std::vector<HP> hps = {{cyclic_group(3), 2},
                         {cyclic_group(2), 3},
                         {cyclic_group(5), 2},
                         {symmetric_group(3), 2},
                         {symmetric_group(3), 3}};
  for (const auto& hp : hps) {
    Field fp = FieldParams::prime(hp.p);
    uint32_t m = splitting_field_degree(hp.h, hp.p, c.opt.field_cap, c.opt.seed);
    Field k = FieldParams::make(hp.p, m);
    SimpleSet sims = simple_modules(hp.h, fp, c.opt.seed);
    for (uint32_t i = 0; i < sims.size(); ++i) {
      const GModule& V = sims.simples[i];
      ExtensionData e = extension_from_cocycle(zero_cocycle(V), c.opt);
      char at[48];
      std::snprintf(at, sizeof at, "|H|=%u p=%u simple %u", hp.h->n, hp.p, i);
      for (const GModule& W : decompose_over_extension(V, k, c.opt.seed))
        c.check(h1(inflate(W, e.q), c.opt) == h1(W, c.opt) + 1, place("h1 gap", at));
    }
  }
}

// 4. over a free base the verdict is the minimal generator bound
void crit4(Ctx& c) {
  GroupPtr one = trivial_group();
  struct PC {
    const char* label;
    GroupPtr g;
    uint32_t p;
  };
  std::vector<PC> ps = {{"C2", cyclic_group(2), 2}, {"C4", cyclic_group(4), 2},
                        {"V4", klein4(), 2},        {"D4", dihedral8(), 2},
                        {"Q8", quaternion8(), 2},   {"C3", cyclic_group(3), 3},
                        {"C9", cyclic_group(9), 3}, {"E9", elem9(), 3}};
  for (const auto& pc : ps) {
    uint32_t d = frattini_of_p_group(pc.g, pc.p).d;
    for (uint32_t gamma = 0; gamma <= 4; ++gamma) {
      char at[48];
      std::snprintf(at, sizeof at, "%s gamma=%u", pc.label, gamma);
      Verdict v = decide_strong_solvability(
          make_problem(ordinary_cover(one, pc.p, gamma, c.opt), onto_trivial(pc.g, one, pc.p)),
          c.opt);
      c.check(v.solvable == (d <= gamma), place("generator bound", at));
    }
  }
}

// 5. the extension route and the free-quotient route agree on every definable action
void crit5(Ctx& c) {
  auto perm_power_is_id = [](const std::vector<uint16_t>& s, uint32_t e) {
    for (uint16_t x = 0; x < s.size(); ++x) {
      uint16_t y = x;
      for (uint32_t t = 0; t < e; ++t) y = s[y];
      if (y != x) return false;
    }
    return true;
  };

  GroupPtr one = trivial_group();
  struct PC {
    const char* label;
    GroupPtr g;
    uint32_t p;
  };
  std::vector<PC> free_ps = {{"C2", cyclic_group(2), 2}, {"C4", cyclic_group(4), 2},
                             {"V4", klein4(), 2},        {"D4", dihedral8(), 2},
                             {"Q8", quaternion8(), 2},   {"C3", cyclic_group(3), 3},
                             {"C9", cyclic_group(9), 3}, {"E9", elem9(), 3}};
  for (const auto& pc : free_ps)
    for (uint32_t gamma : {1u, 2u}) {
      char at[48];
      std::snprintf(at, sizeof at, "%s over 1 gamma=%u", pc.label, gamma);
      RouteReport r = cross_check_routes(pc.g, ordinary_cover(one, pc.p, gamma, c.opt), {}, c.opt);
      c.check(r.pprime == r.strong.solvable, place("routes", at));
    }

  struct Base {
    GroupPtr h;
    uint32_t p;
    std::vector<GroupPtr> kernels;
  };
  std::vector<Base> bases = {
      {cyclic_group(3), 2, {cyclic_group(2), cyclic_group(4), klein4(), dihedral8(), quaternion8()}},
      {cyclic_group(2), 3, {cyclic_group(3), cyclic_group(9), elem9()}}};
  for (const auto& b : bases) {
    uint32_t hord = b.h->n;
    for (const GroupPtr& P : b.kernels)
      for (const auto& s : automorphisms(P)) {
        if (!perm_power_is_id(s, hord)) continue;
        for (uint32_t gamma : {1u, 2u}) {
          char at[64];
          std::snprintf(at, sizeof at, "|P|=%u over C%u gamma=%u", P->n, hord, gamma);
          RouteReport r = cross_check_routes(P, ordinary_cover(b.h, b.p, gamma, c.opt), {s}, c.opt);
          c.check(r.pprime == r.strong.solvable, place("routes", at));
        }
      }
  }
}

// brute-force cohomology by enumerating normalized cochains
uint32_t log_q(uint64_t count, uint32_t q) {
  uint32_t e = 0;
  while (count > 1) {
    require(count % q == 0, errc::internal, "cochain count is not a power of the field size");
    count /= q;
    ++e;
  }
  return e;
}

uint32_t brute_h1(const GModule& M) {
  uint32_t n = M.group->n, dim = M.dim, q = M.field->q;
  const FieldParams& F = *M.field;
  std::vector<FqMatrix> rho;
  for (uint16_t a = 0; a < n; ++a) rho.push_back(element_matrix(M, a));
  uint32_t slots = (n - 1) * dim;
  require(slots <= 20, errc::cap, "brute-force cochain space too large");
  uint64_t total = 1;
  for (uint32_t i = 0; i < slots; ++i) total *= q;
  auto val = [&](const std::vector<uint32_t>& cvec, uint16_t a) {
    std::vector<uint32_t> v(dim, 0);
    if (a != 0)
      for (uint32_t i = 0; i < dim; ++i) v[i] = cvec[(uint32_t(a) - 1) * dim + i];
    return v;
  };
  uint64_t z1 = 0;
  std::vector<uint32_t> cvec(slots, 0);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t t = code;
    for (uint32_t i = 0; i < slots; ++i) {
      cvec[i] = uint32_t(t % q);
      t /= q;
    }
    bool ok = true;
    for (uint16_t a = 1; a < n && ok; ++a)
      for (uint16_t b = 1; b < n && ok; ++b) {
        auto lhs = val(cvec, M.group->mulv(a, b));
        auto rhs = rho[a].apply(val(cvec, b));
        for (uint32_t i = 0; i < dim; ++i) rhs[i] = F.add(rhs[i], val(cvec, a)[i]);
        ok = lhs == rhs;
      }
    if (ok) ++z1;
  }
  uint64_t md = 1;
  for (uint32_t i = 0; i < dim; ++i) md *= q;
  std::set<std::vector<uint32_t>> bset;
  for (uint64_t mcode = 0; mcode < md; ++mcode) {
    uint64_t t = mcode;
    std::vector<uint32_t> m(dim, 0);
    for (uint32_t i = 0; i < dim; ++i) {
      m[i] = uint32_t(t % q);
      t /= q;
    }
    std::vector<uint32_t> cb(slots, 0);
    for (uint16_t a = 1; a < n; ++a) {
      auto v = rho[a].apply(m);
      for (uint32_t i = 0; i < dim; ++i) cb[(uint32_t(a) - 1) * dim + i] = F.sub(v[i], m[i]);
    }
    bset.insert(cb);
  }
  return log_q(z1, q) - log_q(bset.size(), q);
}

uint32_t brute_h2(const GModule& M) {
  uint32_t n = M.group->n, dim = M.dim, q = M.field->q;
  const FieldParams& F = *M.field;
  std::vector<FqMatrix> rho;
  for (uint16_t a = 0; a < n; ++a) rho.push_back(element_matrix(M, a));
  uint32_t slots = (n - 1) * (n - 1) * dim;
  require(slots <= 20, errc::cap, "brute-force cochain space too large");
  uint64_t total = 1;
  for (uint32_t i = 0; i < slots; ++i) total *= q;
  auto val = [&](const std::vector<uint32_t>& fvec, uint16_t a, uint16_t b) {
    std::vector<uint32_t> v(dim, 0);
    if (a != 0 && b != 0)
      for (uint32_t i = 0; i < dim; ++i)
        v[i] = fvec[((uint32_t(a) - 1) * (n - 1) + (uint32_t(b) - 1)) * dim + i];
    return v;
  };
  uint64_t z2 = 0;
  std::vector<uint32_t> fvec(slots, 0);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t t = code;
    for (uint32_t i = 0; i < slots; ++i) {
      fvec[i] = uint32_t(t % q);
      t /= q;
    }
    bool ok = true;
    for (uint16_t a = 1; a < n && ok; ++a)
      for (uint16_t b = 1; b < n && ok; ++b)
        for (uint16_t cc = 1; cc < n && ok; ++cc) {
          auto s = rho[a].apply(val(fvec, b, cc));
          auto t2 = val(fvec, M.group->mulv(a, b), cc);
          auto u = val(fvec, a, M.group->mulv(b, cc));
          auto w = val(fvec, a, b);
          for (uint32_t i = 0; i < dim; ++i) {
            uint32_t acc = F.sub(s[i], t2[i]);
            acc = F.add(acc, u[i]);
            acc = F.sub(acc, w[i]);
            if (acc) ok = false;
          }
        }
    if (ok) ++z2;
  }
  // coboundaries of all normalized 1-cochains
  uint32_t cslots = (n - 1) * dim;
  uint64_t ctotal = 1;
  for (uint32_t i = 0; i < cslots; ++i) ctotal *= q;
  std::set<std::vector<uint32_t>> bset;
  std::vector<uint32_t> cvec(cslots, 0);
  for (uint64_t code = 0; code < ctotal; ++code) {
    uint64_t t = code;
    for (uint32_t i = 0; i < cslots; ++i) {
      cvec[i] = uint32_t(t % q);
      t /= q;
    }
    auto cval = [&](uint16_t a) {
      std::vector<uint32_t> v(dim, 0);
      if (a != 0)
        for (uint32_t i = 0; i < dim; ++i) v[i] = cvec[(uint32_t(a) - 1) * dim + i];
      return v;
    };
    std::vector<uint32_t> img(slots, 0);
    for (uint16_t a = 1; a < n; ++a)
      for (uint16_t b = 1; b < n; ++b) {
        auto v = rho[a].apply(cval(b));
        auto ab = cval(M.group->mulv(a, b));
        auto ca = cval(a);
        for (uint32_t i = 0; i < dim; ++i)
          img[((uint32_t(a) - 1) * (n - 1) + (uint32_t(b) - 1)) * dim + i] =
              F.add(F.sub(v[i], ab[i]), ca[i]);
      }
    bset.insert(img);
  }
  return log_q(z2, q) - log_q(bset.size(), q);
}

// 6. cochain enumeration agrees with the solver; coprime cases vanish
void crit6(Ctx& c) {
  Field f2 = FieldParams::prime(2);
  std::vector<GroupPtr> gs = {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
                              klein4()};
  for (const GroupPtr& g : gs) {
    GModule k = GModule::trivial(g, f2);
    char at[32];
    std::snprintf(at, sizeof at, "|G|=%u", g->n);
    c.check(h1(k, c.opt) == brute_h1(k), place("h1 brute force", at));
    c.check(h2(k, c.opt) == brute_h2(k), place("h2 brute force", at));
  }
  struct HP {
    GroupPtr h;
    uint32_t p;
  };
  std::vector<HP> cop = {{cyclic_group(3), 2},
                         {cyclic_group(5), 2},
                         {cyclic_group(2), 3},
                         {symmetric_group(3), 5},
                         {cyclic_group(3), 5}};
  for (const auto& hp : cop) {
    uint32_t m = splitting_field_degree(hp.h, hp.p, c.opt.field_cap, c.opt.seed);
    SimpleSet sims = simple_modules(hp.h, FieldParams::make(hp.p, m), c.opt.seed);
    for (uint32_t i = 0; i < sims.size(); ++i) {
      char at[48];
      std::snprintf(at, sizeof at, "|H|=%u p=%u simple %u", hp.h->n, hp.p, i);
      c.check(h1(sims.simples[i], c.opt) == 0 && h2(sims.simples[i], c.opt) == 0,
              place("coprime vanishing", at));
    }
  }
}

// every subspace of the module, as echelonized bases
std::vector<FqMatrix> all_subspaces(const GModule& M) {
  uint32_t dim = M.dim, q = M.field->q;
  uint64_t nv = 1;
  for (uint32_t i = 0; i < dim; ++i) nv *= q;
  require(nv <= 256, errc::cap, "subspace enumeration too large");
  std::vector<std::vector<uint32_t>> vecs;
  for (uint64_t code = 1; code < nv; ++code) {
    uint64_t t = code;
    std::vector<uint32_t> v(dim, 0);
    for (uint32_t i = 0; i < dim; ++i) {
      v[i] = uint32_t(t % q);
      t /= q;
    }
    vecs.push_back(v);
  }
  auto key = [](const Echelon& e) {
    std::vector<uint32_t> k;
    for (const auto& r : e.rows) k.insert(k.end(), r.begin(), r.end());
    return k;
  };
  std::vector<Echelon> work = {Echelon(M.field, dim)};
  std::set<std::vector<uint32_t>> seen = {key(work[0])};
  std::vector<FqMatrix> out;
  for (size_t i = 0; i < work.size(); ++i) {
    Echelon cur = work[i];
    out.push_back(cur.to_matrix());
    for (const auto& v : vecs) {
      if (cur.contains(v)) continue;
      Echelon next = cur;
      next.insert(v);
      auto k = key(next);
      if (seen.insert(k).second) work.push_back(next);
    }
  }
  return out;
}

bool subspace_invariant(const GModule& M, const FqMatrix& rows) {
  Echelon e(M.field, M.dim);
  for (uint32_t r = 0; r < rows.rows; ++r) {
    std::vector<uint32_t> v(rows.a.begin() + size_t(r) * rows.cols,
                            rows.a.begin() + size_t(r + 1) * rows.cols);
    e.insert(v);
  }
  for (uint32_t r = 0; r < rows.rows; ++r)
    for (size_t gi = 0; gi < M.gen_mats.size(); ++gi) {
      std::vector<uint32_t> v(rows.a.begin() + size_t(r) * rows.cols,
                              rows.a.begin() + size_t(r + 1) * rows.cols);
      if (!e.contains(apply_gen(M, gi, v))) return false;
    }
  return true;
}

void oracle_factors(const GModule& M, std::vector<GModule>& out) {
  if (M.dim == 0) return;
  FqMatrix best;
  uint32_t best_dim = ~0u;
  for (const FqMatrix& s : all_subspaces(M)) {
    if (s.rows == 0 || s.rows >= best_dim) continue;
    if (subspace_invariant(M, s)) {
      best = s;
      best_dim = s.rows;
    }
  }
  if (best_dim == ~0u || best_dim == M.dim) {
    out.push_back(M);
    return;
  }
  out.push_back(submodule_module(M, best));
  oracle_factors(quotient_module(M, best), out);
}

bool same_factor_multiset(const std::vector<GModule>& a, std::vector<GModule> b, uint64_t seed) {
  if (a.size() != b.size()) return false;
  for (const GModule& x : a) {
    bool hit = false;
    for (size_t j = 0; j < b.size(); ++j)
      if (x.dim == b[j].dim && are_isomorphic(x, b[j], seed)) {
        b.erase(b.begin() + j);
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return b.empty();
}

// 7. spinning factors match the exhaustive subspace chase; inflation is a
// bijection on simples across p-group kernels
void crit7(Ctx& c) {
  GroupPtr s3 = from_permutations({{1, 0, 2}, {1, 2, 0}});
  for (uint32_t p : {2u, 3u}) {
    Field f = FieldParams::prime(p);
    std::vector<std::pair<std::string, GModule>> mods;
    for (const GroupPtr& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein4()})
      mods.push_back({"regular |G|=" + std::to_string(g->n), regular_module(g, f)});
    // natural permutation plane of S3
    std::vector<FqMatrix> pm;
    for (const auto& perm : {std::vector<uint16_t>{1, 0, 2}, std::vector<uint16_t>{1, 2, 0}}) {
      FqMatrix m(f, 3, 3);
      for (uint32_t j = 0; j < 3; ++j) m.at(perm[j], j) = 1;
      pm.push_back(m);
    }
    mods.push_back({"S3 permutation", GModule::make(s3, f, 3, pm)});
    for (const auto& nm : mods) {
      std::string at = nm.first + " p=" + std::to_string(p);
      std::vector<GModule> oracle;
      oracle_factors(nm.second, oracle);
      std::vector<GModule> engine = composition_factors(nm.second, c.opt.seed);
      c.check(same_factor_multiset(oracle, engine, c.opt.seed), place("factor multiset", at));
    }
  }
  for (const auto& ne : extension_battery()) {
    uint32_t mg = splitting_field_degree(ne.e.G, ne.p, c.opt.field_cap, c.opt.seed);
    uint32_t mh = splitting_field_degree(ne.e.H, ne.p, c.opt.field_cap, c.opt.seed);
    SimpleSet sg = simple_modules(ne.e.G, FieldParams::make(ne.p, mg), c.opt.seed);
    SimpleSet sh = simple_modules(ne.e.H, FieldParams::make(ne.p, mh), c.opt.seed);
    c.check(sg.size() == sh.size(), place("simple count", ne.name));
  }
}

// 8. fixed parts of projectives push down to projectives
void crit8(Ctx& c) {
  for (const auto& ne : extension_battery()) {
    uint32_t m = splitting_field_degree(ne.e.G, ne.p, c.opt.field_cap, c.opt.seed);
    FixedPartReport r = verify_fixed_part_of_projectives(ne.e, FieldParams::make(ne.p, m), c.opt);
    c.check(r.ok, place("fixed parts", ne.name));
  }
}

}  // namespace

std::vector<CriterionResult> acceptance_battery(const Options& opt) {
  struct Entry {
    const char* name;
    void (*fn)(Ctx&);
  };
  const Entry list[] = {{"genus bookkeeping", crit1},
                        {"transfer consistency", crit2},
                        {"split h1 gap", crit3},
                        {"minimal generator bound", crit4},
                        {"route equivalence", crit5},
                        {"cohomology brute force", crit6},
                        {"composition factor oracle", crit7},
                        {"projective fixed parts", crit8}};
  std::vector<CriterionResult> out;
  uint32_t anomalies = 0;
  uint32_t idx = 0;
  for (const Entry& en : list) {
    Ctx c;
    c.opt = opt;
    CriterionResult r;
    r.index = ++idx;
    r.name = en.name;
    try {
      en.fn(c);
      r.pass = c.fail.empty();
      r.detail = c.fail;
    } catch (const error& e) {
      r.pass = false;
      r.detail = e.what();
      if (e.code() == errc::anomaly) ++anomalies;
    }
    r.checks = c.checks;
    out.push_back(std::move(r));
  }
  CriterionResult nine;
  nine.index = 9;
  nine.name = "anomaly freedom";
  nine.checks = 1;
  nine.pass = anomalies == 0;
  if (!nine.pass)
    nine.detail = std::to_string(anomalies) + " anomaly error(s) raised by the battery";
  out.push_back(std::move(nine));
  return out;
}

bool battery_passed(const std::vector<CriterionResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

std::string battery_to_text(const std::vector<CriterionResult>& rs) {
  std::string out;
  char buf[160];
  for (const auto& r : rs) {
    std::snprintf(buf, sizeof buf, "criterion %u  %-28s %s  (%u check%s)\n", r.index,
                  r.name.c_str(), r.pass ? "PASS" : "FAIL", r.checks, r.checks == 1 ? "" : "s");
    out += buf;
    if (!r.pass && !r.detail.empty()) out += "  first failure: " + r.detail + "\n";
  }
  out += battery_passed(rs) ? "acceptance: PASS\n" : "acceptance: FAIL\n";
  return out;
}

}  // namespace kani
