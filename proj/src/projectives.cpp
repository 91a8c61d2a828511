#include "projectives.hpp"

#include <algorithm>
#include <cstdio>

#include "cohomology.hpp"

namespace kani {

namespace {

using Vec = std::vector<uint32_t>;  // element of F_q[G], coefficient per group element

Vec ga_mul(const GroupPtr& g, const Field& f, const Vec& u, const Vec& v) {
  Vec w(g->n, 0);
  for (uint32_t a = 0; a < g->n; ++a) {
    if (u[a] == 0) continue;
    for (uint32_t b = 0; b < g->n; ++b) {
      if (v[b] == 0) continue;
      uint32_t c = g->mulv(uint16_t(a), uint16_t(b));
      w[c] = f->add(w[c], f->mul(u[a], v[b]));
    }
  }
  return w;
}

// matrix of a |-> a*e on F_q[G]
FqMatrix right_mul_matrix(const GroupPtr& g, const Field& f, const Vec& e) {
  FqMatrix M(f, g->n, g->n);
  for (uint32_t a = 0; a < g->n; ++a)
    for (uint32_t b = 0; b < g->n; ++b) {
      if (e[b] == 0) continue;
      uint32_t c = g->mulv(uint16_t(a), uint16_t(b));
      M.at(c, a) = f->add(M.at(c, a), e[b]);
    }
  return M;
}

std::vector<std::vector<FqMatrix>> all_rep_tables(const GroupPtr& g, const SimpleSet& S) {
  std::vector<std::vector<FqMatrix>> rho(S.simples.size());
  for (size_t s = 0; s < S.simples.size(); ++s) {
    rho[s].reserve(g->n);
    for (uint32_t a = 0; a < g->n; ++a) rho[s].push_back(element_matrix(S.simples[s], uint16_t(a)));
  }
  return rho;
}

// rows indexed by matrix slots of every simple, columns by group elements:
// the transpose of the representation map F_q[G] -> (+) End(S)
FqMatrix rep_constraints(const GroupPtr& g, const Field& f,
                         const std::vector<std::vector<FqMatrix>>& rho) {
  uint32_t slots = 0;
  for (const auto& tab : rho) slots += tab[0].rows * tab[0].rows;
  FqMatrix A(f, slots, g->n);
  uint32_t base = 0;
  for (const auto& tab : rho) {
    uint32_t d = tab[0].rows;
    for (uint32_t a = 0; a < g->n; ++a)
      for (uint32_t i = 0; i < d; ++i)
        for (uint32_t j = 0; j < d; ++j) A.at(base + i * d + j, a) = tab[a].at(i, j);
    base += d * d;
  }
  return A;
}

FqMatrix radical_from_constraints(const GroupPtr& g, const Field& f, const FqMatrix& A,
                                  const SimpleSet& S) {
  FqMatrix rad = kernel_basis(A);
  // the image is (+) End_D(S), so the corank is the sum of dim S^2 / dim End(S)
  uint32_t image_dim = 0;
  for (const auto& V : S.simples) image_dim += V.dim * V.dim / endo_dim(V);
  require(rad.rows + image_dim == g->n, errc::anomaly, "radical dimension bookkeeping failed");

  // nilpotency: powers of the spanned ideal must shrink strictly to zero
  std::vector<Vec> basis;
  for (uint32_t i = 0; i < rad.rows; ++i) {
    Vec u(g->n);
    for (uint32_t j = 0; j < g->n; ++j) u[j] = rad.at(i, j);
    basis.push_back(u);
  }
  std::vector<Vec> cur = basis;
  while (!cur.empty()) {
    Echelon ech(f, g->n);
    for (const Vec& u : basis)
      for (const Vec& v : cur) ech.insert(ga_mul(g, f, u, v));
    require(ech.rank() < cur.size(), errc::anomaly, "radical is not nilpotent");
    cur.clear();
    for (const auto& row : ech.rows) cur.push_back(row);
  }
  return rad;
}

// F_q-matrix of the projection of V onto one D-line, D = End(V): basis
// vectors are grouped into D-orbit blocks and the first block survives
FqMatrix wedderburn_projection(const GModule& V) {
  const Field& f = V.field;
  uint32_t d = V.dim;
  std::vector<FqMatrix> endos = hom_space(V, V);
  uint32_t e = uint32_t(endos.size());
  require(e >= 1 && d % e == 0, errc::internal, "endomorphism ring dimension is off");

  std::vector<Vec> cols;
  Echelon span(f, d);
  for (uint32_t cand = 0; cand < d && span.rank() < d; ++cand) {
    Vec w(d, 0);
    w[cand] = 1;
    if (span.contains(w)) continue;
    for (const FqMatrix& delta : endos) {
      Vec t = delta.apply(w);
      require(span.insert(t), errc::internal, "endomorphism orbit collapsed");
      cols.push_back(t);
    }
  }
  require(cols.size() == d, errc::internal, "endomorphism blocks do not fill the module");

  FqMatrix C(f, d, d);
  for (uint32_t j = 0; j < d; ++j)
    for (uint32_t i = 0; i < d; ++i) C.at(i, j) = cols[j][i];
  FqMatrix E(f, d, d);
  for (uint32_t j = 0; j < e; ++j) E.at(j, j) = 1;
  auto Cinv = inverse(C);
  require(Cinv.has_value(), errc::internal, "block basis is singular");
  FqMatrix pi = C.mul(E).mul(*Cinv);

  require(pi.mul(pi) == pi, errc::internal, "projection is not idempotent");
  for (const FqMatrix& delta : endos)
    require(pi.mul(delta) == delta.mul(pi), errc::internal, "projection is not D-linear");
  return pi;
}

Vec lift_idempotent(const GroupPtr& g, const Field& f, Vec e) {
  for (uint32_t iter = 0; iter < 64; ++iter) {
    Vec e2 = ga_mul(g, f, e, e);
    if (e2 == e) {
      bool zero = std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
      require(!zero, errc::internal, "idempotent lifted to zero");
      return e;
    }
    Vec e3 = ga_mul(g, f, e2, e);
    for (uint32_t i = 0; i < g->n; ++i) {
      uint32_t t3 = f->add(e2[i], f->add(e2[i], e2[i]));
      e[i] = f->sub(t3, f->add(e3[i], e3[i]));
    }
  }
  fail(errc::internal, "idempotent lifting did not converge");
}

uint32_t find_trivial_index(const SimpleSet& S) {
  for (uint32_t s = 0; s < S.size(); ++s) {
    const GModule& V = S.simples[s];
    if (V.dim != 1) continue;
    bool triv = true;
    for (const auto& m : V.gen_mats) triv = triv && m.at(0, 0) == 1;
    if (triv) return s;
  }
  fail(errc::internal, "trivial module missing from the simple list");
}

}  // namespace

FqMatrix algebra_radical(const GroupPtr& g, const Field& f, const Options& opt) {
  require(g->n <= opt.group_cap, errc::cap, "group too large for algebra computations");
  SimpleSet S = simple_modules(g, f, opt.seed);
  auto rho = all_rep_tables(g, S);
  FqMatrix A = rep_constraints(g, f, rho);
  return radical_from_constraints(g, f, A, S);
}

ProjectiveTable projective_table(const GroupPtr& g, const Field& f, const Options& opt) {
  require(g->n <= opt.group_cap, errc::cap, "group too large for algebra computations");
  ProjectiveTable t;
  t.group = g;
  t.field = f;
  t.simples = simple_modules(g, f, opt.seed);
  auto rho = all_rep_tables(g, t.simples);
  FqMatrix A = rep_constraints(g, f, rho);
  t.rad_dim = radical_from_constraints(g, f, A, t.simples).rows;

  for (const auto& V : t.simples.simples) t.endo_dims.push_back(endo_dim(V));
  t.trivial_index = find_trivial_index(t.simples);

  uint32_t nsimple = t.simples.size();
  for (uint32_t s = 0; s < nsimple; ++s) {
    FqMatrix pi = wedderburn_projection(t.simples.simples[s]);
    Vec rhs(A.rows, 0);
    uint32_t base = 0;
    for (uint32_t tt = 0; tt < nsimple; ++tt) {
      uint32_t d = t.simples.simples[tt].dim;
      if (tt == s)
        for (uint32_t i = 0; i < d; ++i)
          for (uint32_t j = 0; j < d; ++j) rhs[base + i * d + j] = pi.at(i, j);
      base += d * d;
    }
    auto x = solve(A, rhs);
    require(x.has_value(), errc::internal, "projection misses the algebra image");
    Vec e = lift_idempotent(g, f, *x);

    // the lift must still map onto the chosen projections
    for (uint32_t tt = 0; tt < nsimple; ++tt) {
      uint32_t d = t.simples.simples[tt].dim;
      FqMatrix img(f, d, d);
      for (uint32_t a = 0; a < g->n; ++a) {
        if (e[a] == 0) continue;
        for (uint32_t i = 0; i < d; ++i)
          for (uint32_t j = 0; j < d; ++j)
            img.at(i, j) = f->add(img.at(i, j), f->mul(e[a], rho[tt][a].at(i, j)));
      }
      require(img == (tt == s ? pi : FqMatrix(f, d, d)), errc::internal,
              "lifted idempotent drifted across the semisimple quotient");
    }

    t.proj_dims.push_back(rank_of(right_mul_matrix(g, f, e)));
    t.idempotents.push_back(std::move(e));
  }

  uint64_t weighted = 0;
  bool split = true;
  for (uint32_t s = 0; s < nsimple; ++s) {
    const GModule& V = t.simples.simples[s];
    require(V.dim % t.endo_dims[s] == 0, errc::internal, "endomorphism ring dimension is off");
    require(t.proj_dims[s] >= V.dim, errc::anomaly, "projective smaller than its head");
    weighted += uint64_t(t.proj_dims[s]) * (V.dim / t.endo_dims[s]);
    split = split && t.endo_dims[s] == 1;
  }
  require(weighted == g->n, errc::anomaly, "regular module bookkeeping failed");
  if (split) {
    uint64_t plain = 0;
    for (uint32_t s = 0; s < nsimple; ++s)
      plain += uint64_t(t.proj_dims[s]) * t.simples.simples[s].dim;
    require(plain == g->n, errc::anomaly, "split regular module bookkeeping failed");
  }

  t.omega1_dim = t.proj_dims[t.trivial_index] - 1;
  uint64_t cover = 0;
  for (uint32_t s = 0; s < nsimple; ++s) {
    uint32_t h = h1(t.simples.simples[s], opt);
    require(h % t.endo_dims[s] == 0, errc::anomaly, "h1 not a multiple of the endo degree");
    cover += uint64_t(t.proj_dims[s]) * (h / t.endo_dims[s]);
  }
  require(cover >= t.omega1_dim, errc::anomaly, "second Heller kernel came out negative");
  t.omega2_dim = uint32_t(cover - t.omega1_dim);
  return t;
}

GModule projective_module(const ProjectiveTable& t, uint32_t index) {
  require(index < t.proj_dims.size(), errc::domain, "no such simple");
  FqMatrix M = right_mul_matrix(t.group, t.field, t.idempotents[index]);
  FqMatrix basis = rref(M.transpose()).r;
  // nonzero rows only
  FqMatrix B(t.field, t.proj_dims[index], t.group->n);
  uint32_t out = 0;
  for (uint32_t i = 0; i < basis.rows; ++i) {
    bool zero = true;
    for (uint32_t j = 0; j < basis.cols; ++j) zero = zero && basis.at(i, j) == 0;
    if (zero) continue;
    for (uint32_t j = 0; j < basis.cols; ++j) B.at(out, j) = basis.at(i, j);
    ++out;
  }
  require(out == t.proj_dims[index], errc::internal, "left ideal rank drifted");
  return submodule_module(regular_module(t.group, t.field), B);
}

FixedPartReport verify_fixed_part_of_projectives(const ExtensionData& e, const Field& f,
                                                 const Options& opt) {
  FixedPartReport rep;
  ProjectiveTable tG = projective_table(e.G, f, opt);
  ProjectiveTable tH = projective_table(e.H, f, opt);
  std::vector<GModule> projH;
  for (uint32_t v = 0; v < tH.proj_dims.size(); ++v) projH.push_back(projective_module(tH, v));

  for (uint32_t s = 0; s < tG.proj_dims.size(); ++s) {
    const GModule& U = tG.simples.simples[s];
    GModule PU = projective_module(tG, s);
    GModule fixed = fixed_point_module(PU, e.kernel, e.q);

    bool kernel_trivial_on_U = true;
    for (uint16_t u : e.kernel.members)
      if (u != 0 && !(element_matrix(U, u) == FqMatrix::identity(f, U.dim)))
        kernel_trivial_on_U = false;

    char line[160];
    if (!kernel_trivial_on_U) {
      bool good = fixed.dim == 0;
      std::snprintf(line, sizeof line, "U%u dim=%u not inflated: fixed part dim=%u %s", s, U.dim,
                    fixed.dim, good ? "ok" : "FAIL");
      rep.ok = rep.ok && good;
      rep.lines.push_back(line);
      continue;
    }

    // U = q*V: read V off through any section of q
    std::vector<FqMatrix> vmats;
    for (uint16_t hg : e.H->gens) {
      uint16_t pre = 0xffff;
      for (uint32_t a = 0; a < e.G->n; ++a)
        if (e.q.images[a] == hg) {
          pre = uint16_t(a);
          break;
        }
      require(pre != 0xffff, errc::internal, "quotient misses a generator");
      vmats.push_back(element_matrix(U, pre));
    }
    GModule V = GModule::make(e.H, f, U.dim, vmats);
    uint32_t v = tH.simples.index_of(V, opt.seed);
    bool good = fixed.dim == tH.proj_dims[v] && are_isomorphic(fixed, projH[v], opt.seed).has_value();
    std::snprintf(line, sizeof line, "U%u dim=%u inflated from V%u: fixed part dim=%u vs dim P=%u %s",
                  s, U.dim, v, fixed.dim, tH.proj_dims[v], good ? "ok" : "FAIL");
    rep.ok = rep.ok && good;
    rep.lines.push_back(line);
  }
  return rep;
}

std::string ProjectiveTable::to_text() const {
  std::string out = "idx  dimV  dimEnd  dimP\n";
  char line[96];
  for (uint32_t s = 0; s < proj_dims.size(); ++s) {
    std::snprintf(line, sizeof line, "%-4u %-5u %-7u %u\n", s, simples.simples[s].dim, endo_dims[s],
                  proj_dims[s]);
    out += line;
  }
  std::snprintf(line, sizeof line, "radical %u\nomega1 %u\nomega2 %u\n", rad_dim, omega1_dim,
                omega2_dim);
  out += line;
  return out;
}

}  // namespace kani
