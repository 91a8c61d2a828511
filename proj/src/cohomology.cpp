#include "cohomology.hpp"

#include <algorithm>

namespace kani {

uint32_t h0(const GModule& M) {
  uint32_t d = M.dim;
  if (d == 0) return 0;
  size_t r = M.gen_mats.size();
  if (r == 0) return d;
  FqMatrix stacked(M.field, uint32_t(r) * d, d);
  for (size_t gi = 0; gi < r; ++gi)
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j = 0; j < d; ++j)
        stacked.at(uint32_t(gi) * d + i, j) = M.field->sub(M.gen_mats[gi].at(i, j), i == j ? 1u : 0u);
  return kernel_basis(stacked).rows;
}

namespace {

// elements ordered by shortest word in left decomposition a = g.t, with the
// parent t and generator index recorded; entry 0 is the identity
struct LeftStep {
  uint16_t elt, parent;
  uint32_t gen;
};

std::vector<LeftStep> left_bfs(const FiniteGroup& g) {
  std::vector<LeftStep> order;
  std::vector<bool> seen(g.n, false);
  order.push_back({0, 0, ~0u});
  seen[0] = true;
  for (size_t head = 0; head < order.size(); ++head) {
    uint16_t t = order[head].elt;
    for (uint32_t gi = 0; gi < g.gens.size(); ++gi) {
      uint16_t nx = g.mulv(g.gens[gi], t);
      if (!seen[nx]) {
        seen[nx] = true;
        order.push_back({nx, t, gi});
      }
    }
  }
  require(order.size() == g.n, errc::internal, "generators do not generate the group");
  return order;
}

// all element matrices, built along the left decomposition
std::vector<FqMatrix> all_element_matrices(const GModule& M, const std::vector<LeftStep>& order) {
  std::vector<FqMatrix> rho(M.group->n);
  rho[0] = FqMatrix::identity(M.field, M.dim);
  for (size_t i = 1; i < order.size(); ++i)
    rho[order[i].elt] = M.gen_mats[order[i].gen].mul(rho[order[i].parent]);
  return rho;
}

// Crossed homomorphisms f: G -> M, normalized at 1, are determined by their
// values on the generators; f(g.t) = f(g) + g.f(t) propagates, and the
// cocycle identity holds everywhere once it holds on (generator, element)
// pairs. Returns dim Z^1.
uint32_t z1_dim(const GModule& M, const Options& opt) {
  uint32_t n = M.group->n, d = M.dim;
  if (d == 0 || n == 1) return 0;
  uint32_t r = uint32_t(M.gen_mats.size());
  uint32_t nu = r * d;
  require(nu <= opt.h1_cap, errc::cap,
          "1-cocycle unknown count " + std::to_string(nu) + " exceeds cap");
  const FieldParams& F = *M.field;
  auto order = left_bfs(*M.group);
  auto rho = all_element_matrices(M, order);

  // L[a]: d x nu with f(a) = L[a].u, u the stacked generator values
  std::vector<FqMatrix> L(n);
  L[0] = FqMatrix(M.field, d, nu);
  for (size_t oi = 1; oi < order.size(); ++oi) {
    uint16_t a = order[oi].elt, t = order[oi].parent;
    uint32_t gi = order[oi].gen;
    FqMatrix la(M.field, d, nu);
    // f(g.t) = f(g) + rho(g) f(t)
    for (uint32_t i = 0; i < d; ++i) {
      la.at(i, gi * d + i) = 1;
      for (uint32_t j = 0; j < d; ++j) {
        uint32_t c = M.gen_mats[gi].at(i, j);
        if (!c) continue;
        for (uint32_t k = 0; k < nu; ++k) la.at(i, k) = F.add(la.at(i, k), F.mul(c, L[t].at(j, k)));
      }
    }
    L[a] = std::move(la);
  }

  Echelon ech(M.field, nu);
  std::vector<uint32_t> rowbuf(nu);
  for (uint32_t gi = 0; gi < r && ech.rank() < nu; ++gi) {
    uint16_t g = M.group->gens[gi];
    for (uint32_t b = 0; b < n; ++b) {
      uint16_t gb = M.group->mulv(g, uint16_t(b));
      // f(gb) - f(g) - rho(g) f(b) = 0
      for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t k = 0; k < nu; ++k) rowbuf[k] = L[gb].at(i, k);
        rowbuf[gi * d + i] = F.sub(rowbuf[gi * d + i], 1);
        for (uint32_t j = 0; j < d; ++j) {
          uint32_t c = M.gen_mats[gi].at(i, j);
          if (!c) continue;
          for (uint32_t k = 0; k < nu; ++k) rowbuf[k] = F.sub(rowbuf[k], F.mul(c, L[b].at(j, k)));
        }
        ech.insert(rowbuf);
      }
    }
  }
  return nu - ech.rank();
}

}  // namespace

uint32_t h1(const GModule& M, const Options& opt) {
  if (M.dim == 0 || M.group->n == 1) return 0;
  uint32_t b1 = M.dim - h0(M);
  return z1_dim(M, opt) - b1;
}

uint32_t h2(const GModule& M, const Options& opt) {
  uint32_t n = M.group->n, d = M.dim;
  if (d == 0 || n == 1) return 0;
  uint32_t r = uint32_t(M.gen_mats.size());
  // normalized 2-cocycles are determined by the rows f(g, .) over the
  // generators; f(g.t, k) = g.f(t, k) + f(g, tk) - f(g, t) propagates and
  // the cocycle identity on (generator, element, element) triples implies it
  // everywhere
  uint64_t nu64 = uint64_t(r) * (n - 1) * d;
  require(nu64 <= opt.h2_cap, errc::cap,
          "2-cocycle unknown count " + std::to_string(nu64) + " exceeds cap");
  uint32_t nu = uint32_t(nu64);
  require(uint64_t(n) * (n - 1) * d * nu <= (1ull << 27), errc::cap, "2-cocycle tables too large");
  const FieldParams& F = *M.field;
  auto order = left_bfs(*M.group);
  auto rho = all_element_matrices(M, order);

  // u slot of the value f(g_i, b), b != 1
  auto uslot = [&](uint32_t gi, uint16_t b, uint32_t i) { return (gi * uint32_t(n - 1) + (b - 1)) * d + i; };
  // Mrow[a]: (n-1)d x nu with stacked f(a, .) = Mrow[a].u
  std::vector<FqMatrix> Mrow(n);
  Mrow[0] = FqMatrix(M.field, (n - 1) * d, nu);
  for (size_t oi = 1; oi < order.size(); ++oi) {
    uint16_t a = order[oi].elt, t = order[oi].parent;
    uint32_t gi = order[oi].gen;
    FqMatrix ma(M.field, (n - 1) * d, nu);
    for (uint16_t k = 1; k < n; ++k) {
      uint16_t tk = M.group->mulv(t, k);
      for (uint32_t i = 0; i < d; ++i) {
        uint32_t row = uint32_t(k - 1) * d + i;
        // g.f(t, k)
        for (uint32_t j = 0; j < d; ++j) {
          uint32_t c = M.gen_mats[gi].at(i, j);
          if (!c) continue;
          uint32_t srow = uint32_t(k - 1) * d + j;
          for (uint32_t cc = 0; cc < nu; ++cc)
            ma.at(row, cc) = F.add(ma.at(row, cc), F.mul(c, Mrow[t].at(srow, cc)));
        }
        // + f(g, tk) - f(g, t)
        if (tk != 0) ma.at(row, uslot(gi, tk, i)) = F.add(ma.at(row, uslot(gi, tk, i)), 1);
        if (t != 0) ma.at(row, uslot(gi, t, i)) = F.sub(ma.at(row, uslot(gi, t, i)), 1);
      }
    }
    Mrow[a] = std::move(ma);
  }

  Echelon ech(M.field, nu);
  std::vector<uint32_t> rowbuf(nu);
  for (uint32_t gi = 0; gi < r && ech.rank() < nu; ++gi) {
    uint16_t g = M.group->gens[gi];
    for (uint16_t h = 1; h < n; ++h) {
      uint16_t gh = M.group->mulv(g, h);
      for (uint16_t k = 1; k < n; ++k) {
        uint16_t hk = M.group->mulv(h, k);
        // g.f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0
        for (uint32_t i = 0; i < d; ++i) {
          std::fill(rowbuf.begin(), rowbuf.end(), 0);
          for (uint32_t j = 0; j < d; ++j) {
            uint32_t c = M.gen_mats[gi].at(i, j);
            if (!c) continue;
            uint32_t srow = uint32_t(k - 1) * d + j;
            for (uint32_t cc = 0; cc < nu; ++cc)
              rowbuf[cc] = F.add(rowbuf[cc], F.mul(c, Mrow[h].at(srow, cc)));
          }
          if (gh != 0) {
            uint32_t srow = uint32_t(k - 1) * d + i;
            for (uint32_t cc = 0; cc < nu; ++cc)
              rowbuf[cc] = F.sub(rowbuf[cc], Mrow[gh].at(srow, cc));
          }
          if (hk != 0) rowbuf[uslot(gi, hk, i)] = F.add(rowbuf[uslot(gi, hk, i)], 1);
          rowbuf[uslot(gi, h, i)] = F.sub(rowbuf[uslot(gi, h, i)], 1);
          ech.insert(rowbuf);
        }
      }
    }
  }
  uint32_t z2 = nu - ech.rank();
  uint32_t b2 = uint32_t(n - 1) * d - z1_dim(M, opt);
  return z2 - b2;
}

std::vector<uint32_t> TwoCocycle::value(uint16_t a, uint16_t b) const {
  uint32_t n = mod.group->n, d = mod.dim;
  std::vector<uint32_t> v(d);
  for (uint32_t i = 0; i < d; ++i) v[i] = vals[(size_t(a) * n + b) * d + i];
  return v;
}

TwoCocycle zero_cocycle(const GModule& M) {
  TwoCocycle f;
  f.mod = M;
  f.vals.assign(size_t(M.group->n) * M.group->n * M.dim, 0);
  return f;
}

bool cocycle_valid(const TwoCocycle& f) {
  const GModule& M = f.mod;
  uint32_t n = M.group->n, d = M.dim;
  if (f.vals.size() != size_t(n) * n * d) return false;
  require(uint64_t(n) * n * n * d <= (1ull << 28), errc::cap, "cocycle validation too large");
  const FieldParams& F = *M.field;
  for (uint16_t a = 0; a < n; ++a) {
    for (uint32_t i = 0; i < d; ++i)
      if (f.value(a, 0)[i] || f.value(0, a)[i]) return false;
  }
  auto order = left_bfs(*M.group);
  auto rho = all_element_matrices(M, order);
  for (uint16_t a = 0; a < n; ++a)
    for (uint16_t b = 0; b < n; ++b)
      for (uint16_t c = 0; c < n; ++c) {
        auto t = rho[a].apply(f.value(b, c));
        auto s2 = f.value(M.group->mulv(a, b), c);
        auto s3 = f.value(a, M.group->mulv(b, c));
        auto s4 = f.value(a, b);
        for (uint32_t i = 0; i < d; ++i)
          if (F.add(F.sub(t[i], s2[i]), F.sub(s3[i], s4[i]))) return false;
      }
  return true;
}

TwoCocycle cocycle_diff(const TwoCocycle& a, const TwoCocycle& b) {
  require(a.mod.group.get() == b.mod.group.get() && a.mod.dim == b.mod.dim &&
              a.mod.field->same(*b.mod.field),
          errc::domain, "cocycle difference needs matching modules");
  TwoCocycle out = a;
  for (size_t i = 0; i < out.vals.size(); ++i) out.vals[i] = a.mod.field->sub(a.vals[i], b.vals[i]);
  return out;
}

TwoCocycle extension_class(const ExtensionData& e) {
  require(e.kernel.order() > 1, errc::domain, "extension class of a trivial kernel");
  uint32_t p = e.G->element_order(e.kernel.members[1]);
  auto chart = kernel_chart(e, p);
  const GroupPtr& G = e.G;
  const GroupPtr& H = e.H;
  uint32_t n = H->n, d = chart->mod.dim;

  // least preimage under (word length, word, index)
  std::vector<uint16_t> sec(n, 0xffff);
  for (uint32_t g = 0; g < G->n; ++g) {
    uint16_t h = e.q.images[g];
    uint16_t cur = sec[h];
    if (cur == 0xffff) {
      sec[h] = uint16_t(g);
      continue;
    }
    const auto& wg = G->words[g];
    const auto& wc = G->words[cur];
    if (std::make_tuple(wg.size(), wg, uint16_t(g)) < std::make_tuple(wc.size(), wc, cur))
      sec[h] = uint16_t(g);
  }
  for (uint32_t h = 0; h < n; ++h) require(sec[h] != 0xffff, errc::domain, "projection not surjective");
  require(sec[0] == 0, errc::internal, "section must fix the identity");

  TwoCocycle f = zero_cocycle(chart->mod);
  for (uint16_t a = 0; a < n; ++a)
    for (uint16_t b = 0; b < n; ++b) {
      uint16_t ab = H->mulv(a, b);
      uint16_t prod = G->mulv(G->mulv(sec[a], sec[b]), G->inv[sec[ab]]);
      uint32_t vec = chart->elt_to_vec[prod];
      require(vec != ~0u, errc::internal, "cocycle value landed outside the kernel");
      for (uint32_t i = 0; i < d; ++i) {
        f.vals[(size_t(a) * n + b) * d + i] = vec % p;
        vec /= p;
      }
    }
  require(cocycle_valid(f), errc::internal, "extracted extension class is not a cocycle");
  return f;
}

bool is_trivial_class(const TwoCocycle& f, const Options& opt) {
  require(cocycle_valid(f), errc::domain, "class check needs a valid cocycle");
  const GModule& M = f.mod;
  uint32_t n = M.group->n, d = M.dim;
  if (n == 1 || d == 0) return true;
  uint32_t r = uint32_t(M.gen_mats.size());
  uint32_t nu = r * d;
  require(nu <= opt.h1_cap, errc::cap, "class check unknown count exceeds cap");
  const FieldParams& F = *M.field;
  auto order = left_bfs(*M.group);
  auto rho = all_element_matrices(M, order);

  // affine propagation: c(a) = L[a].u + t[a], from c(g.s) = g.c(s) + c(g) - f(g, s)
  std::vector<FqMatrix> L(n);
  std::vector<std::vector<uint32_t>> tail(n);
  L[0] = FqMatrix(M.field, d, nu);
  tail[0].assign(d, 0);
  for (size_t oi = 1; oi < order.size(); ++oi) {
    uint16_t a = order[oi].elt, s = order[oi].parent;
    uint32_t gi = order[oi].gen;
    uint16_t g = M.group->gens[gi];
    FqMatrix la(M.field, d, nu);
    std::vector<uint32_t> ta(d, 0);
    auto fv = f.value(g, s);
    for (uint32_t i = 0; i < d; ++i) {
      la.at(i, gi * d + i) = 1;
      uint32_t acc = 0;
      for (uint32_t j = 0; j < d; ++j) {
        uint32_t c = M.gen_mats[gi].at(i, j);
        if (!c) continue;
        for (uint32_t k = 0; k < nu; ++k) la.at(i, k) = F.add(la.at(i, k), F.mul(c, L[s].at(j, k)));
        acc = F.add(acc, F.mul(c, tail[s][j]));
      }
      ta[i] = F.sub(acc, fv[i]);
    }
    L[a] = std::move(la);
    tail[a] = std::move(ta);
  }

  // consistency of dc = f on (generator, element) pairs decides everything:
  // the difference dc - f is a cocycle vanishing on generator rows, hence zero
  Echelon ech(M.field, nu + 1);
  std::vector<uint32_t> rowbuf(nu + 1);
  for (uint32_t gi = 0; gi < r; ++gi) {
    uint16_t g = M.group->gens[gi];
    for (uint32_t b = 0; b < n; ++b) {
      uint16_t gb = M.group->mulv(g, uint16_t(b));
      auto fv = f.value(g, uint16_t(b));
      // rho(g) c(b) + c(g) - c(gb) = f(g, b)
      for (uint32_t i = 0; i < d; ++i) {
        std::fill(rowbuf.begin(), rowbuf.end(), 0);
        uint32_t rhs = fv[i];
        for (uint32_t j = 0; j < d; ++j) {
          uint32_t c = M.gen_mats[gi].at(i, j);
          if (!c) continue;
          for (uint32_t k = 0; k < nu; ++k) rowbuf[k] = F.add(rowbuf[k], F.mul(c, L[b].at(j, k)));
          rhs = F.sub(rhs, F.mul(c, tail[b][j]));
        }
        rowbuf[gi * d + i] = F.add(rowbuf[gi * d + i], 1);
        rhs = F.sub(rhs, tail[g][i]);
        for (uint32_t k = 0; k < nu; ++k) rowbuf[k] = F.sub(rowbuf[k], L[gb].at(i, k));
        rhs = F.add(rhs, tail[gb][i]);
        rowbuf[nu] = F.neg(rhs);
        ech.insert(rowbuf);
      }
    }
  }
  return ech.pivot_of_col[nu] < 0;
}

ExtensionData extension_from_cocycle(const TwoCocycle& f, const Options& opt) {
  require(cocycle_valid(f), errc::domain, "not a normalized 2-cocycle");
  const GModule& M = f.mod;
  const GroupPtr& H = M.group;
  uint32_t p = M.field->q;
  require(M.field->m == 1, errc::domain, "cocycle module must live over a prime field");
  uint32_t d = M.dim, nh = H->n;
  uint64_t pd = 1;
  for (uint32_t i = 0; i < d; ++i) pd *= p;
  uint64_t n = pd * nh;
  require(n <= opt.group_cap, errc::cap,
          "extension order " + std::to_string(n) + " exceeds cap " + std::to_string(opt.group_cap));

  auto unpack = [&](uint32_t code) {
    std::vector<uint32_t> v(d);
    for (uint32_t i = 0; i < d; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto pack = [&](const std::vector<uint32_t>& v) {
    uint32_t code = 0;
    for (uint32_t i = d; i-- > 0;) code = code * p + v[i];
    return code;
  };

  auto order = left_bfs(*H);
  auto rho = all_element_matrices(M, order);

  std::vector<uint16_t> mul(n * n);
  const FieldParams& F = *M.field;
  for (uint64_t ai = 0; ai < n; ++ai) {
    uint32_t x = uint32_t(ai / nh);
    uint16_t a = uint16_t(ai % nh);
    auto xv = unpack(x);
    for (uint64_t bi = 0; bi < n; ++bi) {
      uint32_t y = uint32_t(bi / nh);
      uint16_t b = uint16_t(bi % nh);
      auto sum = rho[a].apply(unpack(y));
      auto fv = f.value(a, b);
      for (uint32_t i = 0; i < d; ++i) sum[i] = F.add(F.add(sum[i], xv[i]), fv[i]);
      mul[ai * n + bi] = uint16_t(uint64_t(pack(sum)) * nh + H->mulv(a, b));
    }
  }
  std::vector<uint16_t> gens;
  for (uint32_t i = 0; i < d; ++i) {
    std::vector<uint32_t> e(d, 0);
    e[i] = 1;
    gens.push_back(uint16_t(uint64_t(pack(e)) * nh));
  }
  for (uint16_t hg : H->gens) gens.push_back(hg);
  GroupPtr G = group_from_table(uint32_t(n), std::move(mul), std::move(gens));

  GroupHom q;
  q.src = G;
  q.dst = H;
  q.images.resize(n);
  for (uint64_t ai = 0; ai < n; ++ai) q.images[ai] = uint16_t(ai % nh);
  for (uint64_t ai = 0; ai < n; ++ai)
    for (uint64_t bi = 0; bi < n; ++bi)
      require(q.images[G->mulv(uint16_t(ai), uint16_t(bi))] == H->mulv(q.images[ai], q.images[bi]),
              errc::internal, "projection of the built extension is not a homomorphism");

  Subgroup ker;
  ker.parent = G;
  for (uint64_t ai = 0; ai < n; ++ai)
    if (ai % nh == 0) ker.members.push_back(uint16_t(ai));

  auto chart = std::make_shared<KernelChart>();
  chart->mod = M;
  chart->vec_to_elt.resize(pd);
  chart->elt_to_vec.assign(n, ~0u);
  for (uint32_t v = 0; v < pd; ++v) {
    chart->vec_to_elt[v] = uint16_t(uint64_t(v) * nh);
    chart->elt_to_vec[uint64_t(v) * nh] = v;
  }
  for (uint32_t i = 0; i < d; ++i) {
    std::vector<uint32_t> e(d, 0);
    e[i] = 1;
    chart->basis_elts.push_back(uint16_t(uint64_t(pack(e)) * nh));
  }

  ExtensionData out;
  out.G = G;
  out.H = H;
  out.kernel = std::move(ker);
  out.q = std::move(q);
  out.chart = chart;
  out.cocycle = std::make_shared<TwoCocycle>(f);
  return out;
}

}  // namespace kani
