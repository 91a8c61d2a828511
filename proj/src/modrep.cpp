#include "modrep.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace kani {

namespace {

// X with A * X = RHS, A of full column rank; errc::internal when inconsistent
FqMatrix solve_matrix(const FqMatrix& A, const FqMatrix& RHS) {
  require(A.rows == RHS.rows, errc::domain, "solve_matrix shape mismatch");
  FqMatrix aug(A.field, A.rows, A.cols + RHS.cols);
  for (uint32_t i = 0; i < A.rows; ++i) {
    for (uint32_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    for (uint32_t j = 0; j < RHS.cols; ++j) aug.at(i, A.cols + j) = RHS.at(i, j);
  }
  RrefResult rr = rref(aug);
  require(rr.rank == A.cols, errc::internal, "solve_matrix: matrix not of full column rank");
  for (uint32_t i = 0; i < rr.rank; ++i)
    require(rr.pivot_cols[i] == i, errc::internal, "solve_matrix: inconsistent system");
  FqMatrix X(A.field, A.cols, RHS.cols);
  for (uint32_t i = 0; i < A.cols; ++i)
    for (uint32_t j = 0; j < RHS.cols; ++j) X.at(i, j) = rr.r.at(i, A.cols + j);
  return X;
}

}  // namespace

GModule GModule::make(GroupPtr g, Field f, uint32_t dim, std::vector<FqMatrix> mats, bool verify) {
  require(mats.size() == g->gens.size(), errc::domain, "need one matrix per group generator");
  for (const auto& m : mats)
    require(m.rows == dim && m.cols == dim && m.field->same(*f), errc::domain,
            "generator matrix has wrong shape or field");
  GModule M;
  M.group = std::move(g);
  M.field = std::move(f);
  M.dim = dim;
  M.gen_mats = std::move(mats);
  if (verify && dim > 0) {
    for (const auto& m : M.gen_mats)
      require(inverse(m).has_value(), errc::domain, "generator matrix is singular");
    uint32_t n = M.group->n;
    size_t r = M.gen_mats.size();
    uint64_t cost = uint64_t(n) * (r + 1) * dim * dim * dim;
    if (cost <= (1ull << 30)) {
      // evaluate all element matrices along words, then check the full table
      // consistency against the generators (induction step of the relation check)
      std::vector<FqMatrix> em(n);
      em[0] = FqMatrix::identity(M.field, dim);
      // words are BFS ordered, so a parent prefix is always available
      std::vector<uint16_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](uint16_t a, uint16_t b) {
        return M.group->words[a].size() < M.group->words[b].size();
      });
      for (uint16_t e : order) {
        const auto& w = M.group->words[e];
        if (w.empty()) continue;
        uint16_t parent = 0;
        for (size_t i = 0; i + 1 < w.size(); ++i) parent = M.group->mulv(parent, M.group->gens[w[i]]);
        em[e] = em[parent].mul(M.gen_mats[w.back()]);
      }
      for (uint32_t a = 0; a < n; ++a)
        for (size_t gi = 0; gi < r; ++gi) {
          uint16_t ag = M.group->mulv(uint16_t(a), M.group->gens[gi]);
          require(em[a].mul(M.gen_mats[gi]) == em[ag], errc::domain,
                  "generator matrices do not respect the multiplication table");
        }
    }
  }
  return M;
}

GModule GModule::trivial(GroupPtr g, Field f, uint32_t dim) {
  std::vector<FqMatrix> mats(g->gens.size(), FqMatrix::identity(f, dim));
  return make(std::move(g), std::move(f), dim, std::move(mats), false);
}

FqMatrix element_matrix(const GModule& M, uint16_t g) {
  FqMatrix r = FqMatrix::identity(M.field, M.dim);
  for (uint16_t gi : M.group->words[g]) r = r.mul(M.gen_mats[gi]);
  return r;
}

GModule regular_module(const GroupPtr& g, const Field& f) {
  // left translation: basis e_x, g.e_x = e_{gx}
  std::vector<FqMatrix> mats;
  for (uint16_t gv : g->gens) {
    FqMatrix m(f, g->n, g->n);
    for (uint32_t x = 0; x < g->n; ++x) m.at(g->mulv(gv, uint16_t(x)), x) = 1;
    mats.push_back(std::move(m));
  }
  return GModule::make(g, f, g->n, std::move(mats), false);
}

std::vector<uint32_t> apply_gen(const GModule& M, size_t gen_idx, const std::vector<uint32_t>& v) {
  return M.gen_mats[gen_idx].apply(v);
}

std::vector<uint32_t> apply_gen_T(const GModule& M, size_t gen_idx, const std::vector<uint32_t>& v) {
  const FqMatrix& A = M.gen_mats[gen_idx];
  std::vector<uint32_t> r(A.cols, 0);
  const FieldParams& F = *A.field;
  for (uint32_t i = 0; i < A.rows; ++i) {
    if (!v[i]) continue;
    for (uint32_t j = 0; j < A.cols; ++j) {
      uint32_t w = A.at(i, j);
      if (w) r[j] = F.add(r[j], F.mul(w, v[i]));
    }
  }
  return r;
}

std::vector<uint32_t> apply_element(const GModule& M, uint16_t g, const std::vector<uint32_t>& v) {
  // rho(g) = prod of generator matrices along the word, applied right to left
  const auto& w = M.group->words[g];
  std::vector<uint32_t> r = v;
  for (size_t i = w.size(); i-- > 0;) r = apply_gen(M, w[i], r);
  return r;
}

namespace {

// breadth-first closure of seeds under the generator action; optionally
// records the raw vectors that produced new pivots (for canonical forms)
Echelon spin_echelon(const GModule& M, const std::vector<std::vector<uint32_t>>& seeds,
                     bool transpose_action = false,
                     std::vector<std::vector<uint32_t>>* raw_basis = nullptr) {
  Echelon ech(M.field, M.dim);
  std::queue<std::vector<uint32_t>> work;
  for (const auto& s : seeds) {
    require(s.size() == M.dim, errc::domain, "spin seed has wrong length");
    std::vector<uint32_t> copy = s;
    if (ech.insert(copy)) {
      if (raw_basis) raw_basis->push_back(s);
      work.push(s);
    }
  }
  while (!work.empty() && ech.rank() < M.dim) {
    std::vector<uint32_t> v = std::move(work.front());
    work.pop();
    for (size_t gi = 0; gi < M.gen_mats.size(); ++gi) {
      std::vector<uint32_t> nv = transpose_action ? apply_gen_T(M, gi, v) : apply_gen(M, gi, v);
      std::vector<uint32_t> copy = nv;
      if (ech.insert(copy)) {
        if (raw_basis) raw_basis->push_back(nv);
        work.push(std::move(nv));
      }
    }
  }
  // queue may be nonempty when full rank reached; closure is already proven
  return ech;
}

}  // namespace

FqMatrix spin(const GModule& M, const std::vector<std::vector<uint32_t>>& seeds) {
  return spin_echelon(M, seeds).to_matrix();
}

// ---- meataxe

namespace {

bool subspace_invariant(const GModule& M, const FqMatrix& basis) {
  Echelon ech(M.field, M.dim);
  for (uint32_t i = 0; i < basis.rows; ++i) {
    std::vector<uint32_t> row(basis.a.begin() + size_t(i) * basis.cols,
                              basis.a.begin() + size_t(i + 1) * basis.cols);
    ech.insert(std::move(row));
  }
  for (uint32_t i = 0; i < basis.rows; ++i) {
    std::vector<uint32_t> row(basis.a.begin() + size_t(i) * basis.cols,
                              basis.a.begin() + size_t(i + 1) * basis.cols);
    for (size_t gi = 0; gi < M.gen_mats.size(); ++gi)
      if (!ech.contains(apply_gen(M, gi, row))) return false;
  }
  return true;
}

MeataxeResult reducible_with(const GModule& M, FqMatrix subspace, uint32_t attempts) {
  require(subspace.rows > 0 && subspace.rows < M.dim, errc::internal, "witness subspace not proper");
  require(subspace_invariant(M, subspace), errc::internal, "witness subspace not invariant");
  MeataxeResult r;
  r.irreducible = false;
  r.invariant_subspace = std::move(subspace);
  r.attempts_used = attempts;
  return r;
}

// definitive Norton check for one singular nonzero algebra element; nullopt
// when the kernel is too large to enumerate projectively
std::optional<MeataxeResult> norton_decide(const GModule& M, const FqMatrix& theta, uint32_t attempts,
                                           uint64_t proj_cap = 65536) {
  const Field& F = M.field;
  FqMatrix K = kernel_basis(theta);  // rows: v with theta v = 0
  uint32_t k = K.rows;
  if (k == 0 || k == M.dim) return std::nullopt;  // invertible or zero
  uint64_t count = 1;
  for (uint32_t i = 0; i < k; ++i) {
    count *= F->q;
    if ((count - 1) / (F->q - 1) > proj_cap) return std::nullopt;
  }
  uint64_t nproj = (count - 1) / (F->q - 1);

  // every kernel vector, one per projective class: first nonzero coord == 1
  std::vector<uint32_t> coef(k, 0);
  uint64_t seen = 0;
  for (uint64_t code = 1; seen < nproj && code < count; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < k; ++i) {
      coef[i] = uint32_t(c % F->q);
      c /= F->q;
    }
    uint32_t lead = 0;
    while (lead < k && coef[lead] == 0) ++lead;
    if (coef[lead] != 1) continue;
    ++seen;
    std::vector<uint32_t> v(M.dim, 0);
    for (uint32_t i = 0; i < k; ++i) {
      if (!coef[i]) continue;
      for (uint32_t j = 0; j < M.dim; ++j) v[j] = F->add(v[j], F->mul(coef[i], K.at(i, j)));
    }
    Echelon sp = spin_echelon(M, {v});
    if (sp.rank() < M.dim) return reducible_with(M, sp.to_matrix(), attempts);
  }

  // all kernel vectors generate M; one cokernel witness decides
  FqMatrix KT = kernel_basis(theta.transpose());
  require(KT.rows > 0, errc::internal, "singular matrix with trivial cokernel");
  std::vector<uint32_t> w(KT.a.begin(), KT.a.begin() + M.dim);
  Echelon spT = spin_echelon(M, {w}, /*transpose_action=*/true);
  if (spT.rank() == M.dim) {
    MeataxeResult r;
    r.irreducible = true;
    r.attempts_used = attempts;
    return r;
  }
  // the annihilator of the spun functional space is invariant and proper
  return reducible_with(M, kernel_basis(spT.to_matrix()), attempts);
}

// basis of the enveloping algebra image inside End(M), by matrix spinning
std::vector<FqMatrix> algebra_basis(const GModule& M) {
  uint32_t d2 = M.dim * M.dim;
  Echelon ech(M.field, d2);
  std::vector<FqMatrix> basis;
  std::queue<FqMatrix> work;
  FqMatrix id = FqMatrix::identity(M.field, M.dim);
  std::vector<uint32_t> flat = id.a;
  if (ech.insert(std::move(flat))) {
    basis.push_back(id);
    work.push(id);
  }
  while (!work.empty()) {
    FqMatrix t = std::move(work.front());
    work.pop();
    for (const auto& g : M.gen_mats) {
      FqMatrix nt = g.mul(t);
      std::vector<uint32_t> f = nt.a;
      if (ech.insert(std::move(f))) {
        basis.push_back(nt);
        work.push(std::move(nt));
      }
    }
  }
  return basis;
}

}  // namespace

MeataxeResult meataxe_is_irreducible(const GModule& M, uint64_t seed, uint32_t retry_budget) {
  require(M.dim >= 1, errc::domain, "meataxe on the zero module");
  if (M.dim == 1) {
    MeataxeResult r;
    r.irreducible = true;
    return r;
  }
  const Field& F = M.field;
  uint32_t n = M.group->n;
  std::vector<std::optional<FqMatrix>> elt_cache(n);
  auto elt = [&](uint16_t g) -> const FqMatrix& {
    if (!elt_cache[g]) elt_cache[g] = element_matrix(M, g);
    return *elt_cache[g];
  };

  FqMatrix id = FqMatrix::identity(F, M.dim);
  uint32_t attempts = 0;

  // phase 1a: rho(g) - 1 for each element; cheap and often singular
  for (uint32_t g = 1; g < n && attempts < retry_budget; ++g) {
    ++attempts;
    FqMatrix theta = elt(uint16_t(g)).sub(id);
    if (theta.is_zero()) continue;
    if (auto res = norton_decide(M, theta, attempts)) return *res;
  }
  // phase 1b: random short algebra combinations
  Rng rng(seed ^ 0x6d656174617865ull);
  while (attempts < retry_budget) {
    ++attempts;
    FqMatrix theta(F, M.dim, M.dim);
    uint32_t terms = 2 + rng.below(2);
    for (uint32_t t = 0; t < terms; ++t) {
      uint32_t c = 1 + rng.below(F->q - 1);
      theta = theta.add(elt(uint16_t(rng.below(n))).scaled(c));
    }
    if (theta.is_zero()) continue;
    if (auto res = norton_decide(M, theta, attempts)) return *res;
  }

  // phase 2: systematic. Standard basis spins catch obvious submodules.
  for (uint32_t i = 0; i < M.dim; ++i) {
    std::vector<uint32_t> e(M.dim, 0);
    e[i] = 1;
    Echelon sp = spin_echelon(M, {e});
    if (sp.rank() < M.dim) return reducible_with(M, sp.to_matrix(), attempts);
  }
  // sweep scalar shifts of algebra basis elements and adjacent sums
  std::vector<FqMatrix> basis = algebra_basis(M);
  auto sweep = [&](const FqMatrix& sigma) -> std::optional<MeataxeResult> {
    for (uint32_t lam = 0; lam < F->q; ++lam) {
      FqMatrix theta = sigma.sub(id.scaled(lam));
      if (theta.is_zero()) continue;
      ++attempts;
      if (auto res = norton_decide(M, theta, attempts)) return res;
    }
    return std::nullopt;
  };
  for (const auto& sigma : basis)
    if (auto res = sweep(sigma)) return *res;
  for (size_t i = 0; i + 1 < basis.size(); ++i)
    if (auto res = sweep(basis[i].add(basis[i + 1]))) return *res;

  // last resort: complete enumeration of projective vectors. All spins full
  // means no proper nonzero invariant subspace at all.
  uint64_t total = 1;
  bool small_enough = true;
  for (uint32_t i = 0; i < M.dim; ++i) {
    total *= F->q;
    if (total > (1u << 20)) {
      small_enough = false;
      break;
    }
  }
  require(small_enough, errc::internal, "meataxe: certification budget exhausted");
  std::vector<uint32_t> v(M.dim);
  for (uint64_t code = 1; code < total; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < M.dim; ++i) {
      v[i] = uint32_t(c % F->q);
      c /= F->q;
    }
    uint32_t lead = 0;
    while (lead < M.dim && v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    Echelon sp = spin_echelon(M, {v});
    if (sp.rank() < M.dim) return reducible_with(M, sp.to_matrix(), attempts);
  }
  MeataxeResult r;
  r.irreducible = true;
  r.attempts_used = attempts;
  return r;
}

// ---- derived module constructions

GModule submodule_module(const GModule& M, const FqMatrix& basis_rows) {
  uint32_t k = basis_rows.rows;
  FqMatrix BT = basis_rows.transpose();  // dim x k, full column rank
  std::vector<FqMatrix> mats;
  for (const auto& g : M.gen_mats) mats.push_back(solve_matrix(BT, g.mul(BT)));
  return GModule::make(M.group, M.field, k, std::move(mats), false);
}

GModule quotient_module(const GModule& M, const FqMatrix& basis_rows) {
  RrefResult rr = rref(basis_rows);
  require(rr.rank == basis_rows.rows, errc::domain, "quotient basis rows not independent");
  std::vector<bool> is_pivot(M.dim, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < M.dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  uint32_t k = uint32_t(free_cols.size());

  Echelon ech(M.field, M.dim);
  for (uint32_t i = 0; i < rr.rank; ++i)
    ech.insert(std::vector<uint32_t>(rr.r.a.begin() + size_t(i) * M.dim,
                                     rr.r.a.begin() + size_t(i + 1) * M.dim));
  auto project = [&](std::vector<uint32_t> v) {
    // reduce modulo the subspace, read off free coordinates
    const FieldParams& F = *M.field;
    for (uint32_t c = 0; c < M.dim; ++c) {
      if (!v[c]) continue;
      int32_t pr = ech.pivot_of_col[c];
      if (pr < 0) continue;
      uint32_t coef = v[c];
      const auto& prow = ech.rows[size_t(pr)];
      for (uint32_t j = c; j < M.dim; ++j) v[j] = F.sub(v[j], F.mul(coef, prow[j]));
    }
    std::vector<uint32_t> out(k);
    for (uint32_t j = 0; j < k; ++j) out[j] = v[free_cols[j]];
    return out;
  };

  std::vector<FqMatrix> mats;
  for (size_t gi = 0; gi < M.gen_mats.size(); ++gi) {
    FqMatrix m(M.field, k, k);
    for (uint32_t j = 0; j < k; ++j) {
      std::vector<uint32_t> e(M.dim, 0);
      e[free_cols[j]] = 1;
      auto img = project(apply_gen(M, gi, e));
      for (uint32_t i = 0; i < k; ++i) m.at(i, j) = img[i];
    }
    mats.push_back(std::move(m));
  }
  return GModule::make(M.group, M.field, k, std::move(mats), false);
}

GModule direct_sum(const GModule& A, const GModule& B) {
  require(A.group.get() == B.group.get() && A.field->same(*B.field), errc::domain,
          "direct sum needs matching group and field");
  std::vector<FqMatrix> mats;
  for (size_t gi = 0; gi < A.gen_mats.size(); ++gi) {
    FqMatrix m(A.field, A.dim + B.dim, A.dim + B.dim);
    for (uint32_t i = 0; i < A.dim; ++i)
      for (uint32_t j = 0; j < A.dim; ++j) m.at(i, j) = A.gen_mats[gi].at(i, j);
    for (uint32_t i = 0; i < B.dim; ++i)
      for (uint32_t j = 0; j < B.dim; ++j) m.at(A.dim + i, A.dim + j) = B.gen_mats[gi].at(i, j);
    mats.push_back(std::move(m));
  }
  return GModule::make(A.group, A.field, A.dim + B.dim, std::move(mats), false);
}

GModule dual_module(const GModule& M) {
  std::vector<FqMatrix> mats;
  for (size_t gi = 0; gi < M.gen_mats.size(); ++gi) {
    uint16_t gv = M.group->gens[gi];
    mats.push_back(element_matrix(M, M.group->inv[gv]).transpose());
  }
  return GModule::make(M.group, M.field, M.dim, std::move(mats), false);
}

std::vector<FqMatrix> hom_space(const GModule& A, const GModule& B) {
  require(A.group.get() == B.group.get() && A.field->same(*B.field), errc::domain,
          "hom space needs matching group and field");
  uint32_t da = A.dim, db = B.dim;
  if (da == 0 || db == 0) return {};
  // unknowns F[i][j], i < db, j < da, with F rhoA(g) = rhoB(g) F per generator
  uint32_t nu = db * da;
  FqMatrix sys(A.field, uint32_t(A.gen_mats.size()) * nu, nu);
  const FieldParams& FF = *A.field;
  uint32_t row = 0;
  for (size_t gi = 0; gi < A.gen_mats.size(); ++gi) {
    const FqMatrix& RA = A.gen_mats[gi];
    const FqMatrix& RB = B.gen_mats[gi];
    for (uint32_t i = 0; i < db; ++i)
      for (uint32_t a = 0; a < da; ++a) {
        // sum_j F[i][j] RA[j][a] - sum_k RB[i][k] F[k][a] = 0
        for (uint32_t j = 0; j < da; ++j) {
          uint32_t c = RA.at(j, a);
          if (c) sys.at(row, i * da + j) = FF.add(sys.at(row, i * da + j), c);
        }
        for (uint32_t kk = 0; kk < db; ++kk) {
          uint32_t c = RB.at(i, kk);
          if (c) sys.at(row, kk * da + a) = FF.sub(sys.at(row, kk * da + a), c);
        }
        ++row;
      }
  }
  FqMatrix K = kernel_basis(sys);
  std::vector<FqMatrix> homs;
  for (uint32_t r = 0; r < K.rows; ++r) {
    FqMatrix F(A.field, db, da);
    for (uint32_t i = 0; i < db; ++i)
      for (uint32_t j = 0; j < da; ++j) F.at(i, j) = K.at(r, i * da + j);
    homs.push_back(std::move(F));
  }
  return homs;
}

uint32_t endo_dim(const GModule& M) { return uint32_t(hom_space(M, M).size()); }

std::optional<FqMatrix> are_isomorphic(const GModule& A, const GModule& B, uint64_t seed) {
  if (A.dim != B.dim) return std::nullopt;
  if (A.dim == 0) return FqMatrix(A.field, 0, 0);
  auto homs = hom_space(A, B);
  if (homs.empty()) return std::nullopt;
  for (const auto& h : homs)
    if (inverse(h)) return h;
  uint32_t q = A.field->q;
  size_t hn = homs.size();
  uint64_t total = 1;
  bool enumerable = true;
  for (size_t i = 0; i < hn; ++i) {
    total *= q;
    if (total > (1u << 16)) {
      enumerable = false;
      break;
    }
  }
  const FieldParams& FF = *A.field;
  auto combine = [&](const std::vector<uint32_t>& coef) {
    FqMatrix T(A.field, B.dim, A.dim);
    for (size_t i = 0; i < hn; ++i) {
      if (!coef[i]) continue;
      for (size_t e = 0; e < T.a.size(); ++e) T.a[e] = FF.add(T.a[e], FF.mul(coef[i], homs[i].a[e]));
    }
    return T;
  };
  std::vector<uint32_t> coef(hn, 0);
  if (enumerable) {
    for (uint64_t code = 1; code < total; ++code) {
      uint64_t c = code;
      for (size_t i = 0; i < hn; ++i) {
        coef[i] = uint32_t(c % q);
        c /= q;
      }
      FqMatrix T = combine(coef);
      if (inverse(T)) return T;
    }
    return std::nullopt;
  }
  // hom space too large for enumeration: seeded sampling, then give up;
  // an invertible element is dense when one exists at these sizes
  Rng rng(seed ^ 0x15015015);
  for (uint32_t t = 0; t < 512; ++t) {
    for (size_t i = 0; i < hn; ++i) coef[i] = rng.below(q);
    FqMatrix T = combine(coef);
    if (!T.is_zero() && inverse(T)) return T;
  }
  return std::nullopt;
}

std::vector<GModule> composition_factors(const GModule& M, uint64_t seed) {
  std::vector<GModule> out;
  std::vector<GModule> stack{M};
  while (!stack.empty()) {
    GModule cur = std::move(stack.back());
    stack.pop_back();
    if (cur.dim == 0) continue;
    MeataxeResult res = meataxe_is_irreducible(cur, seed);
    if (res.irreducible) {
      out.push_back(std::move(cur));
      continue;
    }
    GModule sub = submodule_module(cur, res.invariant_subspace);
    GModule quo = quotient_module(cur, res.invariant_subspace);
    stack.push_back(std::move(quo));
    stack.push_back(std::move(sub));
  }
  return out;
}

// ---- canonical forms and simple sets

std::vector<uint32_t> canonical_key(const GModule& S) {
  uint32_t d = S.dim, q = S.field->q;
  require(d >= 1, errc::domain, "canonical key of the zero module");
  uint64_t total = 1;
  for (uint32_t i = 0; i < d; ++i) {
    total *= q;
    require(total <= (1u << 16), errc::cap, "canonical form enumeration too large");
  }
  std::optional<std::vector<uint32_t>> best;
  std::vector<uint32_t> v(d);
  for (uint64_t code = 1; code < total; ++code) {
    uint64_t c = code;
    for (uint32_t i = 0; i < d; ++i) {
      v[i] = uint32_t(c % q);
      c /= q;
    }
    // spin from this seed, recording the raw discovery basis
    std::vector<std::vector<uint32_t>> raw;
    Echelon ech = spin_echelon(S, {v}, false, &raw);
    require(ech.rank() == d, errc::internal, "canonical key requires a simple module");
    FqMatrix B(S.field, d, d);
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j) B.at(i, j) = raw[i][j];
    FqMatrix BT = B.transpose();
    auto BTi = inverse(BT);
    require(BTi.has_value(), errc::internal, "canonical basis not invertible");
    std::vector<uint32_t> key{d};
    for (const auto& g : S.gen_mats) {
      FqMatrix conj = BTi->mul(g.mul(BT));
      key.insert(key.end(), conj.a.begin(), conj.a.end());
    }
    if (!best || key < *best) best = std::move(key);
  }
  return *best;
}

SimpleSet simple_modules(const GroupPtr& g, const Field& f, uint64_t seed) {
  GModule reg = regular_module(g, f);
  std::vector<GModule> factors = composition_factors(reg, seed);
  SimpleSet set;
  set.group = g;
  set.field = f;
  for (auto& fac : factors) {
    bool dup = false;
    for (const auto& s : set.simples)
      if (are_isomorphic(s, fac, seed)) {
        dup = true;
        break;
      }
    if (!dup) {
      set.canonical_keys.push_back(canonical_key(fac));
      set.simples.push_back(std::move(fac));
    }
  }
  std::vector<uint32_t> order(set.simples.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](uint32_t a, uint32_t b) { return set.canonical_keys[a] < set.canonical_keys[b]; });
  SimpleSet sorted;
  sorted.group = g;
  sorted.field = f;
  for (uint32_t i : order) {
    sorted.simples.push_back(std::move(set.simples[i]));
    sorted.canonical_keys.push_back(std::move(set.canonical_keys[i]));
  }
  for (size_t i = 0; i + 1 < sorted.canonical_keys.size(); ++i)
    require(sorted.canonical_keys[i] != sorted.canonical_keys[i + 1], errc::internal,
            "duplicate simple module survived deduplication");
  return sorted;
}

uint32_t SimpleSet::index_of(const GModule& M, uint64_t seed) const {
  for (uint32_t i = 0; i < simples.size(); ++i)
    if (are_isomorphic(simples[i], M, seed)) return i;
  fail(errc::domain, "module is not isomorphic to any listed simple");
}

uint32_t splitting_field_degree(const GroupPtr& g, uint32_t p, uint32_t cap, uint64_t seed) {
  Field fp = FieldParams::prime(p);
  SimpleSet base = simple_modules(g, fp, seed);
  uint64_t m = 1;
  for (const auto& s : base.simples) m = std::lcm(m, uint64_t(endo_dim(s)));
  require(m <= cap, errc::cap,
          "splitting degree " + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  // certify: over F_{p^m} every simple has a one-dimensional endomorphism ring
  Field fq = FieldParams::make(p, uint32_t(m));
  SimpleSet ext = simple_modules(g, fq, seed);
  for (const auto& s : ext.simples)
    require(endo_dim(s) == 1, errc::anomaly, "splitting certification failed: non-split simple remains");
  return uint32_t(m);
}

GModule inflate(const GModule& V, const GroupHom& q) {
  require(q.dst.get() == V.group.get(), errc::domain, "inflation needs a projection onto the module's group");
  require(is_epimorphism(q), errc::domain, "inflation along a non-surjective map");
  std::vector<FqMatrix> mats;
  for (uint16_t gv : q.src->gens) mats.push_back(element_matrix(V, q.images[gv]));
  return GModule::make(q.src, V.field, V.dim, std::move(mats), false);
}

GModule fixed_point_module(const GModule& M, const Subgroup& P, const GroupHom& q) {
  require(M.group.get() == P.parent.get(), errc::domain, "subgroup belongs to another group");
  require(q.src.get() == M.group.get(), errc::domain, "projection source mismatch");
  // fixed space of P: common kernel of rho(u) - 1
  uint32_t d = M.dim;
  std::vector<uint16_t> nontriv;
  for (uint16_t u : P.members)
    if (u != 0) nontriv.push_back(u);
  FqMatrix stack(M.field, uint32_t(nontriv.size()) * d, d);
  for (uint32_t ui = 0; ui < nontriv.size(); ++ui) {
    FqMatrix rho = element_matrix(M, nontriv[ui]);
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j)
        stack.at(ui * d + i, j) = M.field->sub(rho.at(i, j), i == j ? 1u : 0u);
  }
  FqMatrix B = nontriv.empty() ? FqMatrix::identity(M.field, d) : kernel_basis(stack);
  uint32_t k = B.rows;
  FqMatrix BT = B.transpose();
  const GroupPtr& H = q.dst;
  std::vector<FqMatrix> mats;
  for (uint16_t hg : H->gens) {
    // least preimage of the generator
    uint16_t pre = 0xffff;
    for (uint32_t a = 0; a < q.src->n; ++a)
      if (q.images[a] == hg) {
        pre = uint16_t(a);
        break;
      }
    require(pre != 0xffff, errc::domain, "projection misses a generator");
    FqMatrix rho = element_matrix(M, pre);
    mats.push_back(k == 0 ? FqMatrix(M.field, 0, 0) : solve_matrix(BT, rho.mul(BT)));
  }
  return GModule::make(H, M.field, k, std::move(mats), false);
}

std::vector<GModule> decompose_over_extension(const GModule& W, const Field& target, uint64_t seed) {
  require(W.field->m == 1, errc::domain, "decompose_over_extension expects a prime-field module");
  require(W.field->p == target->p, errc::domain, "target field has wrong characteristic");
  std::vector<FqMatrix> mats;
  for (const auto& g : W.gen_mats) mats.push_back(embed_matrix(g, target));
  GModule Wt = GModule::make(W.group, target, W.dim, std::move(mats), false);
  std::vector<GModule> factors = composition_factors(Wt, seed);
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j)
      require(!are_isomorphic(factors[i], factors[j], seed), errc::anomaly,
              "multiplicity anomaly: repeated summand in a base-changed simple");
  std::sort(factors.begin(), factors.end(), [&](const GModule& a, const GModule& b) {
    return canonical_key(a) < canonical_key(b);
  });
  return factors;
}

bool divides(const GModule& V, const GModule& W, uint64_t seed) {
  require(V.field->p == W.field->p, errc::domain, "characteristic mismatch");
  auto parts = decompose_over_extension(W, V.field, seed);
  for (const auto& p : parts)
    if (are_isomorphic(p, V, seed)) return true;
  return false;
}

std::shared_ptr<const KernelChart> kernel_chart(const ExtensionData& e, uint32_t p) {
  if (e.chart) return e.chart;
  const Subgroup& K = e.kernel;
  const GroupPtr& G = e.G;
  // kernel must be elementary abelian of exponent p
  for (uint16_t x : K.members) {
    if (x == 0) continue;
    require(G->element_order(x) == p, errc::domain, "kernel is not elementary abelian of exponent p");
    for (uint16_t y : K.members)
      require(G->mulv(x, y) == G->mulv(y, x), errc::domain, "kernel is not abelian");
  }
  // greedy F_p-basis
  std::vector<uint16_t> basis;
  Subgroup span = subgroup_generated(G, {});
  for (uint16_t x : K.members) {
    if (x == 0 || span.contains(x)) continue;
    basis.push_back(x);
    std::vector<uint16_t> seeds = basis;
    span = subgroup_generated(G, seeds);
  }
  require(span.order() == K.order(), errc::internal, "kernel basis does not span");
  uint32_t d = uint32_t(basis.size());

  auto chart = std::make_shared<KernelChart>();
  chart->basis_elts = basis;
  uint64_t pd = 1;
  for (uint32_t i = 0; i < d; ++i) pd *= p;
  chart->vec_to_elt.resize(pd);
  chart->elt_to_vec.assign(G->n, ~0u);
  for (uint64_t code = 0; code < pd; ++code) {
    uint64_t c = code;
    uint16_t elt = 0;
    for (uint32_t i = 0; i < d; ++i) {
      uint32_t ci = uint32_t(c % p);
      c /= p;
      for (uint32_t t = 0; t < ci; ++t) elt = G->mulv(elt, basis[i]);
    }
    chart->vec_to_elt[code] = elt;
    chart->elt_to_vec[elt] = uint32_t(code);
  }
  for (uint16_t x : K.members)
    require(chart->elt_to_vec[x] != ~0u, errc::internal, "kernel coordinate table incomplete");

  // conjugation action of H through any preimage (kernel is abelian)
  Field fp = FieldParams::prime(p);
  std::vector<FqMatrix> mats;
  for (uint16_t hg : e.H->gens) {
    uint16_t pre = 0xffff;
    for (uint32_t a = 0; a < G->n; ++a)
      if (e.q.images[a] == hg) {
        pre = uint16_t(a);
        break;
      }
    require(pre != 0xffff, errc::internal, "projection misses a generator");
    FqMatrix m(fp, d, d);
    for (uint32_t j = 0; j < d; ++j) {
      uint16_t img = G->conj(pre, basis[j]);
      require(K.contains(img), errc::domain, "kernel is not normal under conjugation");
      uint32_t vec = chart->elt_to_vec[img];
      for (uint32_t i = 0; i < d; ++i) {
        m.at(i, j) = vec % p;
        vec /= p;
      }
    }
    mats.push_back(std::move(m));
  }
  chart->mod = GModule::make(e.H, fp, d, std::move(mats), true);
  return chart;
}

// ---- text form

std::string module_to_text(const GModule& M) {
  std::ostringstream out;
  out << "module dim=" << M.dim << " field=" << M.field->p << "^" << M.field->m << "\n";
  for (const auto& g : M.gen_mats) out << matrix_to_text(g);
  return out.str();
}

GModule module_from_text(const GroupPtr& g, const std::string& text) {
  std::istringstream in(text);
  std::string header;
  while (std::getline(in, header) && header.find_first_not_of(" \t\r") == std::string::npos) {
  }
  uint32_t d = 0, p = 0, m = 1;
  if (std::sscanf(header.c_str(), "module dim=%u field=%u^%u", &d, &p, &m) != 3) {
    m = 1;
    require(std::sscanf(header.c_str(), "module dim=%u field=%u", &d, &p) == 2, errc::parse,
            "bad module header: " + header);
  }
  Field f = FieldParams::make(p, m);
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<FqMatrix> mats;
  std::istringstream body(rest);
  std::string line;
  std::vector<std::string> block;
  auto flush = [&]() {
    if (block.empty()) return;
    std::string joined;
    for (auto& l : block) joined += l + "\n";
    mats.push_back(matrix_from_text(f, joined, d, d));
    block.clear();
  };
  uint32_t rows_seen = 0;
  while (std::getline(body, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    block.push_back(line);
    if (++rows_seen == d) {
      flush();
      rows_seen = 0;
    }
  }
  require(rows_seen == 0, errc::parse, "module text ends mid-matrix");
  if (d == 0) mats.assign(g->gens.size(), FqMatrix(f, 0, 0));
  return GModule::make(g, f, d, std::move(mats), true);
}

}  // namespace kani
