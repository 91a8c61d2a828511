#include "group.hpp"

#include "ff.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace kani {

uint32_t FiniteGroup::element_order(uint16_t a) const {
  uint32_t k = 1;
  uint16_t x = a;
  while (x != 0) {
    x = mulv(x, a);
    ++k;
    require(k <= n, errc::internal, "element order exceeds group order");
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (uint16_t a : gens)
    for (uint16_t b : gens)
      if (mulv(a, b) != mulv(b, a)) return false;
  return true;
}

std::string FiniteGroup::describe() const { return "order " + std::to_string(n); }

bool Subgroup::contains(uint16_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

namespace {

// verify table axioms; exhaustive associativity for small orders, sampled beyond
void verify_table(const FiniteGroup& g) {
  uint32_t n = g.n;
  require(n >= 1, errc::domain, "empty group");
  for (uint32_t a = 0; a < n; ++a) {
    require(g.mulv(0, uint16_t(a)) == a && g.mulv(uint16_t(a), 0) == a, errc::internal, "identity axiom fails");
    require(g.mulv(uint16_t(a), g.inv[a]) == 0 && g.mulv(g.inv[a], uint16_t(a)) == 0, errc::internal,
            "inverse axiom fails");
  }
  // each row/column of the table must be a permutation
  std::vector<bool> seen(n);
  for (uint32_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (uint32_t b = 0; b < n; ++b) {
      uint16_t ab = g.mulv(uint16_t(a), uint16_t(b));
      require(ab < n && !seen[ab], errc::internal, "table row is not a permutation");
      seen[ab] = true;
    }
  }
  if (n <= 512) {
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        for (uint32_t c = 0; c < n; ++c)
          require(g.mulv(g.mulv(uint16_t(a), uint16_t(b)), uint16_t(c)) ==
                      g.mulv(uint16_t(a), g.mulv(uint16_t(b), uint16_t(c))),
                  errc::internal, "associativity fails");
  } else {
    Rng rng(0xa550c1a7e);
    for (uint32_t t = 0; t < 20000; ++t) {
      uint16_t a = uint16_t(rng.below(n)), b = uint16_t(rng.below(n)), c = uint16_t(rng.below(n));
      require(g.mulv(g.mulv(a, b), c) == g.mulv(a, g.mulv(b, c)), errc::internal, "associativity fails (sampled)");
    }
  }
}

// breadth-first word assignment from the generator list; also checks the
// generators actually generate
void assign_words(FiniteGroup& g) {
  g.words.assign(g.n, {});
  std::vector<bool> seen(g.n, false);
  seen[0] = true;
  std::queue<uint16_t> bfs;
  bfs.push(0);
  uint32_t reached = 1;
  while (!bfs.empty()) {
    uint16_t e = bfs.front();
    bfs.pop();
    for (uint16_t gi = 0; gi < g.gens.size(); ++gi) {
      uint16_t nx = g.mulv(e, g.gens[gi]);
      if (seen[nx]) continue;
      seen[nx] = true;
      g.words[nx] = g.words[e];
      g.words[nx].push_back(gi);
      bfs.push(nx);
      ++reached;
    }
  }
  require(reached == g.n, errc::internal, "generators do not generate the group");
}

GroupPtr finalize(FiniteGroup g) {
  // drop identity generators and duplicates, keep first occurrences
  std::vector<uint16_t> gens;
  for (uint16_t x : g.gens)
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end()) gens.push_back(x);
  g.gens = gens;
  if (g.gens.empty())
    require(g.n == 1, errc::internal, "nontrivial group without generators");
  verify_table(g);
  assign_words(g);
  return std::make_shared<FiniteGroup>(std::move(g));
}

Perm pcompose(const Perm& a, const Perm& b) {  // (a then b)? no: (a*b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

GroupPtr from_permutations(const std::vector<Perm>& gens, uint32_t closure_cap) {
  require(!gens.empty(), errc::domain, "need at least one permutation");
  size_t deg = gens[0].size();
  for (const auto& p : gens) {
    require(p.size() == deg, errc::domain, "permutation degree mismatch");
    std::vector<bool> seen(deg, false);
    for (auto x : p) {
      require(x < deg && !seen[x], errc::domain, "not a permutation");
      seen[x] = true;
    }
  }
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);

  std::map<Perm, uint16_t> index;
  std::vector<Perm> elts{id};
  index[id] = 0;
  std::queue<uint16_t> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    uint16_t e = bfs.front();
    bfs.pop();
    for (const auto& gp : gens) {
      Perm nx = pcompose(elts[e], gp);
      if (index.count(nx)) continue;
      require(elts.size() < closure_cap, errc::cap,
              "permutation closure exceeds cap " + std::to_string(closure_cap));
      uint16_t idx = uint16_t(elts.size());
      index[nx] = idx;
      elts.push_back(std::move(nx));
      bfs.push(idx);
    }
  }

  uint32_t n = uint32_t(elts.size());
  FiniteGroup g;
  g.n = n;
  g.mul.resize(size_t(n) * n);
  g.inv.resize(n);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b) {
      Perm ab = pcompose(elts[a], elts[b]);
      g.mul[size_t(a) * n + b] = index.at(ab);
    }
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (g.mul[size_t(a) * n + b] == 0) g.inv[a] = uint16_t(b);
  for (const auto& gp : gens) g.gens.push_back(index.at(gp));
  return finalize(std::move(g));
}

GroupPtr group_from_table(uint32_t n, std::vector<uint16_t> mul, std::vector<uint16_t> gens) {
  require(n >= 1 && n <= 0xffff, errc::domain, "group order out of range");
  require(mul.size() == size_t(n) * n, errc::domain, "multiplication table has wrong size");
  FiniteGroup g;
  g.n = n;
  g.mul = std::move(mul);
  g.inv.assign(n, 0xffff);
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = 0; b < n; ++b)
      if (g.mul[size_t(a) * n + b] == 0) g.inv[a] = uint16_t(b);
    require(g.inv[a] != 0xffff, errc::domain, "element without inverse");
  }
  g.gens = std::move(gens);
  for (uint16_t x : g.gens) require(x < n, errc::domain, "generator index out of range");
  return finalize(std::move(g));
}

GroupPtr trivial_group() {
  FiniteGroup g;
  g.n = 1;
  g.mul = {0};
  g.inv = {0};
  return finalize(std::move(g));
}

GroupPtr cyclic_group(uint32_t n) {
  require(n >= 1 && n <= 0xffff, errc::domain, "cyclic group order out of range");
  if (n == 1) return trivial_group();
  Perm c(n);
  for (uint32_t i = 0; i < n; ++i) c[i] = uint16_t((i + 1) % n);
  return from_permutations({c}, n + 1);
}

GroupPtr symmetric_group(uint32_t n) {
  require(n >= 2 && n <= 5, errc::domain, "symmetric group supported for 2 <= n <= 5");
  Perm t(n), c(n);
  std::iota(t.begin(), t.end(), 0);
  t[0] = 1;
  t[1] = 0;
  for (uint32_t i = 0; i < n; ++i) c[i] = uint16_t((i + 1) % n);
  if (n == 2) return from_permutations({t});
  return from_permutations({t, c});
}

GroupPtr dihedral8() {
  // <r, s | r^4, s^2, srs = r^-1> on 4 points
  Perm r{1, 2, 3, 0};
  Perm s{0, 3, 2, 1};
  return from_permutations({r, s});
}

GroupPtr quaternion8() {
  // regular action on {1,-1,i,-i,j,-j,k,-k}
  Perm i{2, 3, 1, 0, 6, 7, 5, 4};
  Perm j{4, 5, 7, 6, 1, 0, 2, 3};
  return from_permutations({i, j});
}

GroupPtr alternating4() {
  Perm a{1, 2, 0, 3};  // (1 2 3)
  Perm b{1, 0, 3, 2};  // (1 2)(3 4)
  return from_permutations({a, b});
}

GroupPtr klein4() {
  Perm a{1, 0, 2, 3};
  Perm b{0, 1, 3, 2};
  return from_permutations({a, b});
}

namespace {

uint16_t eval_word(const FiniteGroup& g, const std::vector<uint16_t>& word,
                   const std::vector<uint16_t>& gen_values) {
  uint16_t x = 0;
  for (uint16_t gi : word) x = g.mulv(x, gen_values[gi]);
  return x;
}

}  // namespace

GroupHom make_hom(const GroupPtr& src, const GroupPtr& dst, const std::vector<uint16_t>& gen_images) {
  require(gen_images.size() == src->gens.size(), errc::domain, "generator image count mismatch");
  for (auto x : gen_images) require(x < dst->n, errc::domain, "generator image out of range");
  GroupHom h;
  h.src = src;
  h.dst = dst;
  h.images.resize(src->n);
  for (uint32_t a = 0; a < src->n; ++a) {
    uint16_t x = 0;
    for (uint16_t gi : src->words[a]) x = dst->mulv(x, gen_images[gi]);
    h.images[a] = x;
  }
  // word evaluation defines a map; verify it is multiplicative
  uint32_t n = src->n;
  if (uint64_t(n) * n <= 1u << 20) {
    for (uint32_t a = 0; a < n; ++a)
      for (uint32_t b = 0; b < n; ++b)
        require(h.images[src->mulv(uint16_t(a), uint16_t(b))] == dst->mulv(h.images[a], h.images[b]),
                errc::domain, "generator images do not define a homomorphism");
  } else {
    for (uint32_t a = 0; a < n; ++a)
      for (uint16_t gv : src->gens)
        require(h.images[src->mulv(uint16_t(a), gv)] == dst->mulv(h.images[a], h.images[gv]), errc::domain,
                "generator images do not define a homomorphism");
    Rng rng(0x601d);
    for (uint32_t t = 0; t < 20000; ++t) {
      uint16_t a = uint16_t(rng.below(n)), b = uint16_t(rng.below(n));
      require(h.images[src->mulv(a, b)] == dst->mulv(h.images[a], h.images[b]), errc::domain,
              "generator images do not define a homomorphism (sampled)");
    }
  }
  return h;
}

GroupHom identity_hom(const GroupPtr& g) {
  GroupHom h;
  h.src = g;
  h.dst = g;
  h.images.resize(g->n);
  std::iota(h.images.begin(), h.images.end(), 0);
  return h;
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  require(first.dst.get() == second.src.get(), errc::domain, "hom composition mismatch");
  GroupHom h;
  h.src = first.src;
  h.dst = second.dst;
  h.images.resize(first.src->n);
  for (uint32_t a = 0; a < first.src->n; ++a) h.images[a] = second.images[first.images[a]];
  return h;
}

Subgroup subgroup_generated(const GroupPtr& g, std::vector<uint16_t> seeds) {
  std::vector<bool> in(g->n, false);
  in[0] = true;
  std::vector<uint16_t> elems{0};
  std::queue<uint16_t> bfs;
  bfs.push(0);
  for (auto s : seeds) require(s < g->n, errc::domain, "seed out of range");
  while (!bfs.empty()) {
    uint16_t e = bfs.front();
    bfs.pop();
    for (uint16_t s : seeds) {
      for (uint16_t nx : {g->mulv(e, s), g->mulv(e, g->inv[s])}) {
        if (!in[nx]) {
          in[nx] = true;
          elems.push_back(nx);
          bfs.push(nx);
        }
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup{g, std::move(elems)};
}

Subgroup normal_closure(const GroupPtr& g, const std::vector<uint16_t>& seeds) {
  // close the seed set under conjugation by generators, then generate
  std::vector<uint16_t> work = seeds;
  std::vector<bool> in(g->n, false);
  for (auto s : work) in[s] = true;
  for (size_t i = 0; i < work.size(); ++i) {
    for (uint16_t gv : g->gens) {
      for (uint16_t c : {g->conj(gv, work[i]), g->conj(g->inv[gv], work[i])}) {
        if (!in[c]) {
          in[c] = true;
          work.push_back(c);
        }
      }
    }
  }
  return subgroup_generated(g, work);
}

bool is_normal(const Subgroup& s) {
  const FiniteGroup& g = *s.parent;
  for (uint16_t gv : g.gens)
    for (uint16_t x : s.members)
      if (!s.contains(g.conj(gv, x))) return false;
  return true;
}

QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n, uint32_t group_cap) {
  require(n.parent.get() == g.get(), errc::domain, "subgroup belongs to another group");
  require(is_normal(n), errc::domain, "quotient by non-normal subgroup");
  require(g->n / n.order() <= group_cap, errc::cap, "quotient order exceeds cap");

  // name cosets by least member
  std::vector<uint16_t> coset_rep(g->n, 0xffff);
  std::vector<uint16_t> reps;
  for (uint32_t a = 0; a < g->n; ++a) {
    if (coset_rep[a] != 0xffff) continue;
    // coset a*N (N normal, so left/right agree)
    uint16_t rep = uint16_t(a);
    std::vector<uint16_t> coset;
    for (uint16_t x : n.members) {
      uint16_t ax = g->mulv(uint16_t(a), x);
      coset.push_back(ax);
      rep = std::min(rep, ax);
    }
    for (uint16_t ax : coset) coset_rep[ax] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  require(reps[0] == 0, errc::internal, "identity coset must come first");
  std::map<uint16_t, uint16_t> rep_index;
  for (uint32_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = uint16_t(i);

  uint32_t qn = uint32_t(reps.size());
  FiniteGroup q;
  q.n = qn;
  q.mul.resize(size_t(qn) * qn);
  q.inv.resize(qn);
  for (uint32_t i = 0; i < qn; ++i)
    for (uint32_t j = 0; j < qn; ++j)
      q.mul[size_t(i) * qn + j] = rep_index.at(coset_rep[g->mulv(reps[i], reps[j])]);
  for (uint32_t i = 0; i < qn; ++i)
    for (uint32_t j = 0; j < qn; ++j)
      if (q.mul[size_t(i) * qn + j] == 0) q.inv[i] = uint16_t(j);
  for (uint16_t gv : g->gens) q.gens.push_back(rep_index.at(coset_rep[gv]));
  GroupPtr qg = finalize(std::move(q));

  GroupHom proj;
  proj.src = g;
  proj.dst = qg;
  proj.images.resize(g->n);
  for (uint32_t a = 0; a < g->n; ++a) proj.images[a] = rep_index.at(coset_rep[a]);
  return {qg, std::move(proj)};
}

Subgroup kernel_of(const GroupHom& h) {
  std::vector<uint16_t> ker;
  for (uint32_t a = 0; a < h.src->n; ++a)
    if (h.images[a] == 0) ker.push_back(uint16_t(a));
  return Subgroup{h.src, std::move(ker)};
}

bool is_epimorphism(const GroupHom& h) {
  std::vector<bool> hit(h.dst->n, false);
  uint32_t count = 0;
  for (auto x : h.images)
    if (!hit[x]) {
      hit[x] = true;
      ++count;
    }
  return count == h.dst->n;
}

bool is_p_group(const FiniteGroup& g, uint32_t p) {
  uint32_t n = g.n;
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_prime(const FiniteGroup& g, uint32_t p) { return g.n % p != 0; }

FrattiniResult frattini_of_p_group(const GroupPtr& pgrp, uint32_t p) {
  require(is_prime_u32(p), errc::domain, "p must be prime");
  require(is_p_group(*pgrp, p), errc::domain, "Frattini reduction requires a p-group");
  // Phi(P) = P^p [P,P] for p-groups
  std::vector<uint16_t> seeds;
  for (uint32_t a = 0; a < pgrp->n; ++a) {
    uint16_t x = uint16_t(a), xp = 0;
    for (uint32_t i = 0; i < p; ++i) xp = pgrp->mulv(xp, x);
    seeds.push_back(xp);
  }
  for (uint32_t a = 0; a < pgrp->n; ++a)
    for (uint32_t b = 0; b < pgrp->n; ++b) {
      uint16_t comm = pgrp->mulv(pgrp->mulv(pgrp->inv[a], pgrp->inv[b]),
                                 pgrp->mulv(uint16_t(a), uint16_t(b)));
      if (comm) seeds.push_back(comm);
    }
  Subgroup phi = subgroup_generated(pgrp, seeds);
  uint32_t index = pgrp->n / phi.order();
  uint32_t d = 0;
  while (index > 1) {
    require(index % p == 0, errc::internal, "Frattini index not a p-power");
    index /= p;
    ++d;
  }
  return {std::move(phi), d};
}

std::vector<std::vector<uint16_t>> automorphisms(const GroupPtr& g) {
  // backtracking over generator images; feasible for the small groups the
  // engine constructs actions on
  require(g->n <= 512, errc::cap, "automorphism enumeration capped at order 512");
  std::vector<std::vector<uint16_t>> result;
  size_t r = g->gens.size();
  if (r == 0) return {std::vector<uint16_t>{0}};  // trivial group
  std::vector<uint32_t> gen_order(r);
  for (size_t i = 0; i < r; ++i) gen_order[i] = g->element_order(g->gens[i]);

  std::vector<uint16_t> choice(r);
  auto try_build = [&](const std::vector<uint16_t>& imgs) {
    // candidate map via words; must be bijective and multiplicative
    std::vector<uint16_t> phi(g->n);
    for (uint32_t a = 0; a < g->n; ++a) phi[a] = eval_word(*g, g->words[a], imgs);
    std::vector<bool> seen(g->n, false);
    for (auto x : phi) {
      if (seen[x]) return;
      seen[x] = true;
    }
    for (uint32_t a = 0; a < g->n; ++a)
      for (uint32_t b = 0; b < g->n; ++b)
        if (phi[g->mulv(uint16_t(a), uint16_t(b))] != g->mulv(phi[a], phi[b])) return;
    result.push_back(std::move(phi));
  };

  // iterate over all r-tuples of elements with matching orders
  std::vector<std::vector<uint16_t>> candidates(r);
  for (size_t i = 0; i < r; ++i)
    for (uint32_t a = 0; a < g->n; ++a)
      if (g->element_order(uint16_t(a)) == gen_order[i]) candidates[i].push_back(uint16_t(a));

  std::vector<size_t> idx(r, 0);
  while (true) {
    for (size_t i = 0; i < r; ++i) choice[i] = candidates[i][idx[i]];
    try_build(choice);
    size_t k = 0;
    while (k < r && ++idx[k] == candidates[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == r) break;
  }
  return result;
}

SemidirectResult semidirect_product(const GroupPtr& P, const GroupPtr& H,
                                    const std::vector<std::vector<uint16_t>>& action_on_gens,
                                    uint32_t group_cap) {
  require(action_on_gens.size() == H->gens.size(), errc::domain,
          "need one automorphism per generator of the acting group");
  uint64_t order = uint64_t(P->n) * H->n;
  require(order <= group_cap, errc::cap, "semidirect product order exceeds cap");

  // each listed map must be an automorphism of P
  for (const auto& phi : action_on_gens) {
    require(phi.size() == P->n, errc::domain, "action entry is not an element map of P");
    std::vector<bool> seen(P->n, false);
    for (auto x : phi) {
      require(x < P->n && !seen[x], errc::domain, "action entry is not a bijection");
      seen[x] = true;
    }
    require(phi[0] == 0, errc::domain, "action entry does not fix the identity");
    for (uint32_t a = 0; a < P->n; ++a)
      for (uint32_t b = 0; b < P->n; ++b)
        require(phi[P->mulv(uint16_t(a), uint16_t(b))] == P->mulv(phi[a], phi[b]), errc::domain,
                "action entry is not multiplicative");
  }

  // extend to all of H along words and verify the extension is a
  // homomorphism H -> Aut(P) on the full table
  std::vector<std::vector<uint16_t>> act(H->n);
  std::vector<uint16_t> id(P->n);
  std::iota(id.begin(), id.end(), 0);
  for (uint32_t h = 0; h < H->n; ++h) {
    std::vector<uint16_t> phi = id;
    for (uint16_t gi : H->words[h]) {
      const auto& step = action_on_gens[gi];
      std::vector<uint16_t> nxt(P->n);
      for (uint32_t x = 0; x < P->n; ++x) nxt[x] = phi[step[x]];  // phi . step
      phi = std::move(nxt);
    }
    act[h] = std::move(phi);
  }
  for (uint32_t h1 = 0; h1 < H->n; ++h1)
    for (uint32_t h2 = 0; h2 < H->n; ++h2) {
      uint16_t h12 = H->mulv(uint16_t(h1), uint16_t(h2));
      for (uint32_t x = 0; x < P->n; ++x)
        require(act[h12][x] == act[h1][act[h2][x]], errc::domain,
                "action fails homomorphism check: generator images do not extend to H -> Aut(P)");
    }

  uint32_t n = uint32_t(order);
  auto enc = [&](uint32_t a, uint32_t h) { return uint16_t(a * H->n + h); };
  FiniteGroup g;
  g.n = n;
  g.mul.resize(size_t(n) * n);
  g.inv.resize(n);
  for (uint32_t a = 0; a < P->n; ++a)
    for (uint32_t h = 0; h < H->n; ++h)
      for (uint32_t b = 0; b < P->n; ++b)
        for (uint32_t k = 0; k < H->n; ++k) {
          // (a,h)(b,k) = (a . h(b), hk)
          uint16_t prod_a = P->mulv(uint16_t(a), act[h][b]);
          uint16_t prod_h = H->mulv(uint16_t(h), uint16_t(k));
          g.mul[size_t(enc(a, h)) * n + enc(b, k)] = enc(prod_a, prod_h);
        }
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y)
      if (g.mul[size_t(x) * n + y] == 0) g.inv[x] = uint16_t(y);
  for (uint16_t pg : P->gens) g.gens.push_back(enc(pg, 0));
  for (uint16_t hg : H->gens) g.gens.push_back(enc(0, hg));
  GroupPtr G = finalize(std::move(g));

  GroupHom incl;
  incl.src = P;
  incl.dst = G;
  incl.images.resize(P->n);
  for (uint32_t a = 0; a < P->n; ++a) incl.images[a] = enc(a, 0);
  GroupHom proj;
  proj.src = G;
  proj.dst = H;
  proj.images.resize(n);
  for (uint32_t a = 0; a < P->n; ++a)
    for (uint32_t h = 0; h < H->n; ++h) proj.images[enc(a, h)] = uint16_t(h);
  return {G, std::move(incl), std::move(proj)};
}

ExtensionData make_extension(const GroupPtr& G, const GroupPtr& H, const GroupHom& q, uint32_t p) {
  require(q.src.get() == G.get() && q.dst.get() == H.get(), errc::domain, "projection endpoints mismatch");
  require(is_epimorphism(q), errc::domain, "projection must be surjective");
  ExtensionData e;
  e.G = G;
  e.H = H;
  e.q = q;
  e.kernel = kernel_of(q);
  Subgroup& k = e.kernel;
  // kernel must be a p-group for the embedding calculus
  uint32_t kn = k.order();
  while (kn % p == 0) kn /= p;
  require(kn == 1, errc::domain, "extension kernel is not a p-group");
  return e;
}

namespace {

bool iso_search(const FiniteGroup& a, const FiniteGroup& b, std::vector<uint16_t>& imgs, size_t pos) {
  if (pos == a.gens.size()) {
    std::vector<uint16_t> phi(a.n);
    for (uint32_t x = 0; x < a.n; ++x) phi[x] = eval_word(b, a.words[x], imgs);
    std::vector<bool> seen(b.n, false);
    for (auto x : phi) {
      if (seen[x]) return false;
      seen[x] = true;
    }
    for (uint32_t x = 0; x < a.n; ++x)
      for (uint32_t y = 0; y < a.n; ++y)
        if (phi[a.mulv(uint16_t(x), uint16_t(y))] != b.mulv(phi[x], phi[y])) return false;
    return true;
  }
  uint32_t want = a.element_order(a.gens[pos]);
  for (uint32_t c = 0; c < b.n; ++c) {
    if (b.element_order(uint16_t(c)) != want) continue;
    imgs[pos] = uint16_t(c);
    if (iso_search(a, b, imgs, pos + 1)) return true;
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->n != b->n) return false;
  require(uint64_t(a->n) * a->n * a->gens.size() <= (1u << 26), errc::cap,
          "isomorphism search too large");
  std::vector<uint16_t> imgs(a->gens.size());
  if (a->n == 1) return true;
  return iso_search(*a, *b, imgs, 0);
}

}  // namespace kani
