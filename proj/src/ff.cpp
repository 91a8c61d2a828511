#include "ff.hpp"

#include <algorithm>
#include <sstream>

namespace kani {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- polynomial helpers over F_p (dense coefficient vectors, constant first)

namespace {

using Poly = std::vector<uint32_t>;

void ptrim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + uint64_t(a[i]) * b[j]) % p;
  }
  // reduce by monic mod
  size_t deg = mod.size() - 1;
  for (size_t i = prod.size(); i-- > deg;) {
    uint32_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (size_t j = 0; j < deg; ++j)
      prod[i - deg + j] = (prod[i - deg + j] + uint64_t(c) * (p - mod[j] % p)) % p;
  }
  prod.resize(deg);
  return prod;
}

Poly ppowmod(Poly base, uint64_t e, const Poly& mod, uint32_t p) {
  Poly r{1};
  r.resize(mod.size() - 1, 0);
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

uint32_t pinv_scalar(uint32_t a, uint32_t p) {
  // Fermat
  uint32_t r = 1, b = a % p;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = uint32_t(uint64_t(r) * b % p);
    b = uint32_t(uint64_t(b) * b % p);
    e >>= 1;
  }
  return r;
}

Poly pgcd(Poly a, Poly b, uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lead_inv = pinv_scalar(b.back(), p);
    while (a.size() >= b.size()) {
      uint32_t c = uint32_t(uint64_t(a.back()) * lead_inv % p);
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i)
        a[shift + i] = (a[shift + i] + uint64_t(c) * (p - b[i] % p)) % p;
      ptrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// monic f of degree m, m >= 1: irreducible over F_p?
bool poly_irreducible(const Poly& f, uint32_t p) {
  size_t m = f.size() - 1;
  if (m == 1) return true;
  Poly x{0, 1};
  // x^(p^m) == x mod f
  Poly g = x;
  g.resize(m, 0);
  for (size_t i = 0; i < m; ++i) g = ppowmod(g, p, f, p);
  Poly xr = x;
  xr.resize(m, 0);
  Poly diff(m, 0);
  for (size_t i = 0; i < m; ++i) diff[i] = (g[i] + p - xr[i]) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  // gcd(x^(p^(m/r)) - x, f) == 1 for each prime r | m
  for (uint32_t r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime_u32(r)) continue;
    Poly h = x;
    h.resize(m, 0);
    for (size_t i = 0; i < m / r; ++i) h = ppowmod(h, p, f, p);
    Poly d(m, 0);
    for (size_t i = 0; i < m; ++i) d[i] = (h[i] + p - xr[i]) % p;
    ptrim(d);
    Poly g2 = pgcd(d, f, p);
    if (g2.size() != 1) return false;
  }
  return true;
}

}  // namespace

// ---- FieldParams

Field FieldParams::make(uint32_t p, uint32_t m) {
  require(is_prime_u32(p), errc::domain, "field characteristic must be prime, got " + std::to_string(p));
  require(m >= 1, errc::domain, "field degree must be >= 1");
  // least packed coefficient tuple (c_0 + c_1 p + ...) giving an irreducible
  // monic x^m + sum c_i x^i
  uint64_t qm = 1;
  for (uint32_t i = 0; i < m; ++i) {
    qm *= p;
    require(qm <= (1u << 28), errc::cap, "field too large: p^m exceeds 2^28");
  }
  for (uint64_t code = 0;; ++code) {
    require(code < qm, errc::internal, "no irreducible monic polynomial found");
    Poly f(m + 1, 0);
    uint64_t c = code;
    for (uint32_t i = 0; i < m; ++i) {
      f[i] = uint32_t(c % p);
      c /= p;
    }
    f[m] = 1;
    if (poly_irreducible(f, p)) return make(p, m, f);
  }
}

Field FieldParams::make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
  require(is_prime_u32(p), errc::domain, "field characteristic must be prime, got " + std::to_string(p));
  require(m >= 1, errc::domain, "field degree must be >= 1");
  require(modulus.size() == m + 1, errc::domain, "modulus must have degree m");
  for (auto& c : modulus) require(c < p, errc::domain, "modulus coefficient out of range");
  require(modulus[m] == 1, errc::domain, "modulus must be monic");
  require(poly_irreducible(modulus, p), errc::domain, "modulus is reducible");

  auto f = std::make_shared<FieldParams>();
  f->p = p;
  f->m = m;
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) q *= p;
  require(q <= (1u << 28), errc::cap, "field too large: p^m exceeds 2^28");
  f->q = uint32_t(q);
  f->modulus = std::move(modulus);
  if (f->q <= 256) f->build_tables();
  return f;
}

std::vector<uint32_t> FieldParams::coeffs(uint32_t a) const {
  std::vector<uint32_t> c(m);
  for (uint32_t i = 0; i < m; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

uint32_t FieldParams::from_coeffs(const std::vector<uint32_t>& c) const {
  require(c.size() == m, errc::domain, "coefficient vector has wrong length");
  uint32_t a = 0;
  for (uint32_t i = m; i-- > 0;) {
    require(c[i] < p, errc::domain, "coefficient out of range");
    a = a * p + c[i];
  }
  return a;
}

uint32_t FieldParams::add_slow(uint32_t a, uint32_t b) const {
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < m; ++i) {
    r += ((a % p) + (b % p)) % p * mult;
    a /= p;
    b /= p;
    mult *= p;
  }
  return r;
}

uint32_t FieldParams::mul_slow(uint32_t a, uint32_t b) const {
  Poly pa = coeffs(a), pb = coeffs(b);
  Poly prod = pmulmod(pa, pb, modulus, p);
  uint32_t r = 0;
  for (uint32_t i = m; i-- > 0;) r = r * p + prod[i];
  return r;
}

void FieldParams::build_tables() {
  tables = true;
  add_t.resize(size_t(q) * q);
  mul_t.resize(size_t(q) * q);
  inv_t.assign(q, 0);
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b) {
      add_t[size_t(a) * q + b] = add_slow(a, b);
      uint32_t ab = mul_slow(a, b);
      mul_t[size_t(a) * q + b] = ab;
      if (ab == 1) inv_t[a] = b;
    }
}

uint32_t FieldParams::add(uint32_t a, uint32_t b) const {
  return tables ? add_t[size_t(a) * q + b] : add_slow(a, b);
}

uint32_t FieldParams::neg(uint32_t a) const {
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < m; ++i) {
    r += (p - a % p) % p * mult;
    a /= p;
    mult *= p;
  }
  return r;
}

uint32_t FieldParams::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldParams::mul(uint32_t a, uint32_t b) const {
  return tables ? mul_t[size_t(a) * q + b] : mul_slow(a, b);
}

uint32_t FieldParams::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t FieldParams::inv(uint32_t a) const {
  require(a != 0, errc::domain, "inverse of zero");
  if (tables) return inv_t[a];
  return pow(a, q - 2);
}

std::string FieldParams::to_token(uint32_t a) const {
  auto c = coeffs(a);
  std::string s;
  for (uint32_t i = 0; i < m; ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

uint32_t FieldParams::from_token(const std::string& tok) const {
  std::vector<uint32_t> c;
  size_t pos = 0;
  while (pos <= tok.size()) {
    size_t comma = tok.find(',', pos);
    std::string piece = tok.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    require(!piece.empty() && piece.find_first_not_of("0123456789") == std::string::npos, errc::parse,
            "bad scalar token '" + tok + "'");
    c.push_back(uint32_t(std::stoul(piece)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (c.size() == 1 && m > 1) c.resize(m, 0);  // allow short constants
  require(c.size() == m, errc::parse, "scalar token '" + tok + "' has wrong coefficient count");
  for (auto x : c) require(x < p, errc::parse, "scalar token '" + tok + "' has coefficient >= p");
  return from_coeffs(c);
}

uint32_t FieldParams::embedding_root(const std::vector<uint32_t>& small_modulus) const {
  std::lock_guard<std::mutex> lk(cache_mu);
  auto it = root_cache.find(small_modulus);
  if (it != root_cache.end()) return it->second;
  // least root of the small modulus in this field
  for (uint32_t t = 0; t < q; ++t) {
    uint32_t val = 0;
    for (size_t i = small_modulus.size(); i-- > 0;) {
      val = mul(val, t);
      // modulus coefficients live in the prime field: c * 1
      uint32_t c = small_modulus[i] % p;
      val = add(val, c);
    }
    if (val == 0) {
      root_cache.emplace(small_modulus, t);
      return t;
    }
  }
  fail(errc::internal, "no embedding root found in target field");
}

// ---- FqMatrix

FqMatrix FqMatrix::identity(const Field& f, uint32_t n) {
  FqMatrix r(f, n, n);
  for (uint32_t i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

FqMatrix FqMatrix::mul(const FqMatrix& o) const {
  require(cols == o.rows && field->same(*o.field), errc::domain, "matrix product shape mismatch");
  FqMatrix r(field, rows, o.cols);
  const FieldParams& F = *field;
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t k = 0; k < cols; ++k) {
      uint32_t v = at(i, k);
      if (!v) continue;
      for (uint32_t j = 0; j < o.cols; ++j) {
        uint32_t w = o.at(k, j);
        if (w) r.at(i, j) = F.add(r.at(i, j), F.mul(v, w));
      }
    }
  return r;
}

FqMatrix FqMatrix::add(const FqMatrix& o) const {
  require(rows == o.rows && cols == o.cols, errc::domain, "matrix sum shape mismatch");
  FqMatrix r(field, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = field->add(a[i], o.a[i]);
  return r;
}

FqMatrix FqMatrix::sub(const FqMatrix& o) const {
  require(rows == o.rows && cols == o.cols, errc::domain, "matrix difference shape mismatch");
  FqMatrix r(field, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = field->sub(a[i], o.a[i]);
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(field, cols, rows);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

FqMatrix FqMatrix::scaled(uint32_t c) const {
  FqMatrix r(field, rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = field->mul(a[i], c);
  return r;
}

bool FqMatrix::is_zero() const {
  for (auto v : a)
    if (v) return false;
  return true;
}

std::vector<uint32_t> FqMatrix::apply(const std::vector<uint32_t>& v) const {
  require(v.size() == cols, errc::domain, "matrix apply length mismatch");
  std::vector<uint32_t> r(rows, 0);
  const FieldParams& F = *field;
  for (uint32_t i = 0; i < rows; ++i) {
    uint32_t acc = 0;
    for (uint32_t j = 0; j < cols; ++j) {
      uint32_t w = at(i, j);
      if (w && v[j]) acc = F.add(acc, F.mul(w, v[j]));
    }
    r[i] = acc;
  }
  return r;
}

// ---- elimination

RrefResult rref(const FqMatrix& mat) {
  RrefResult res;
  res.r = mat;
  FqMatrix& M = res.r;
  const FieldParams& F = *mat.field;
  uint32_t row = 0;
  for (uint32_t col = 0; col < M.cols && row < M.rows; ++col) {
    uint32_t piv = row;
    while (piv < M.rows && M.at(piv, col) == 0) ++piv;
    if (piv == M.rows) continue;
    if (piv != row)
      for (uint32_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(row, j));
    uint32_t s = F.inv(M.at(row, col));
    for (uint32_t j = col; j < M.cols; ++j) M.at(row, j) = F.mul(M.at(row, j), s);
    for (uint32_t i = 0; i < M.rows; ++i) {
      if (i == row) continue;
      uint32_t c = M.at(i, col);
      if (!c) continue;
      for (uint32_t j = col; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(c, M.at(row, j)));
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

uint32_t rank_of(const FqMatrix& mat) { return rref(mat).rank; }

FqMatrix kernel_basis(const FqMatrix& mat) {
  RrefResult rr = rref(mat);
  std::vector<bool> is_pivot(mat.cols, false);
  for (auto c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < mat.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FqMatrix K(mat.field, uint32_t(free_cols.size()), mat.cols);
  const FieldParams& F = *mat.field;
  for (uint32_t k = 0; k < free_cols.size(); ++k) {
    uint32_t fc = free_cols[k];
    K.at(k, fc) = 1;
    for (uint32_t i = 0; i < rr.rank; ++i) K.at(k, rr.pivot_cols[i]) = F.neg(rr.r.at(i, fc));
  }
  return K;
}

std::optional<std::vector<uint32_t>> solve(const FqMatrix& mat, const std::vector<uint32_t>& b) {
  require(b.size() == mat.rows, errc::domain, "solve: rhs length mismatch");
  FqMatrix aug(mat.field, mat.rows, mat.cols + 1);
  for (uint32_t i = 0; i < mat.rows; ++i) {
    for (uint32_t j = 0; j < mat.cols; ++j) aug.at(i, j) = mat.at(i, j);
    aug.at(i, mat.cols) = b[i];
  }
  RrefResult rr = rref(aug);
  for (auto c : rr.pivot_cols)
    if (c == mat.cols) return std::nullopt;
  std::vector<uint32_t> x(mat.cols, 0);
  for (uint32_t i = 0; i < rr.pivot_cols.size(); ++i) x[rr.pivot_cols[i]] = rr.r.at(i, mat.cols);
  return x;
}

std::optional<FqMatrix> inverse(const FqMatrix& mat) {
  require(mat.rows == mat.cols, errc::domain, "inverse of non-square matrix");
  uint32_t n = mat.rows;
  FqMatrix aug(mat.field, n, 2 * n);
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = 0; j < n; ++j) aug.at(i, j) = mat.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  FqMatrix inv(mat.field, n, n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

// ---- embeddings

FqScalar embed_field(const FqScalar& x, const Field& target) {
  const Field& src = x.field;
  require(src->p == target->p, errc::domain, "embedding requires equal characteristic");
  require(target->m % src->m == 0, errc::domain, "embedding requires source degree dividing target degree");
  if (src->same(*target)) return {target, x.v};
  uint32_t root = target->embedding_root(src->modulus);
  auto c = src->coeffs(x.v);
  uint32_t acc = 0;
  for (size_t i = c.size(); i-- > 0;) {
    acc = target->mul(acc, root);
    acc = target->add(acc, c[i] % target->p);
  }
  return {target, acc};
}

FqMatrix embed_matrix(const FqMatrix& mat, const Field& target) {
  FqMatrix r(target, mat.rows, mat.cols);
  for (size_t i = 0; i < mat.a.size(); ++i) r.a[i] = embed_field({mat.field, mat.a[i]}, target).v;
  return r;
}

// ---- Echelon

bool Echelon::insert(std::vector<uint32_t> v) {
  require(v.size() == cols, errc::domain, "echelon insert length mismatch");
  const FieldParams& F = *field;
  for (uint32_t c = 0; c < cols; ++c) {
    if (!v[c]) continue;
    int32_t pr = pivot_of_col[c];
    if (pr < 0) {
      // new pivot: normalize, then clear this column in existing rows
      uint32_t s = F.inv(v[c]);
      for (uint32_t j = c; j < cols; ++j) v[j] = F.mul(v[j], s);
      for (auto& row : rows) {
        uint32_t coef = row[c];
        if (!coef) continue;
        for (uint32_t j = c; j < cols; ++j) row[j] = F.sub(row[j], F.mul(coef, v[j]));
      }
      pivot_of_col[c] = int32_t(rows.size());
      rows.push_back(std::move(v));
      return true;
    }
    uint32_t coef = v[c];
    const auto& prow = rows[size_t(pr)];
    for (uint32_t j = c; j < cols; ++j) v[j] = F.sub(v[j], F.mul(coef, prow[j]));
  }
  return false;
}

bool Echelon::contains(std::vector<uint32_t> v) const {
  const FieldParams& F = *field;
  for (uint32_t c = 0; c < cols; ++c) {
    if (!v[c]) continue;
    int32_t pr = pivot_of_col[c];
    if (pr < 0) return false;
    uint32_t coef = v[c];
    const auto& prow = rows[size_t(pr)];
    for (uint32_t j = c; j < cols; ++j) v[j] = F.sub(v[j], F.mul(coef, prow[j]));
  }
  return true;
}

FqMatrix Echelon::to_matrix() const {
  // rows ordered by pivot column
  std::vector<std::pair<uint32_t, const std::vector<uint32_t>*>> ordered;
  for (uint32_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) ordered.push_back({c, &rows[size_t(pivot_of_col[c])]});
  FqMatrix M(field, uint32_t(ordered.size()), cols);
  for (uint32_t i = 0; i < ordered.size(); ++i)
    for (uint32_t j = 0; j < cols; ++j) M.at(i, j) = (*ordered[i].second)[j];
  return M;
}

// ---- text I/O

std::string matrix_to_text(const FqMatrix& m) {
  std::string s;
  for (uint32_t i = 0; i < m.rows; ++i) {
    for (uint32_t j = 0; j < m.cols; ++j) {
      if (j) s += ' ';
      s += m.field->to_token(m.at(i, j));
    }
    s += '\n';
  }
  return s;
}

FqMatrix matrix_from_text(const Field& f, const std::string& text, uint32_t expect_rows, uint32_t expect_cols) {
  FqMatrix m(f, expect_rows, expect_cols);
  std::istringstream in(text);
  std::string line;
  uint32_t r = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    require(r < expect_rows, errc::parse, "matrix text has too many rows");
    std::istringstream ls(line);
    std::string tok;
    uint32_t c = 0;
    while (ls >> tok) {
      require(c < expect_cols, errc::parse, "matrix text row too long");
      m.at(r, c) = f->from_token(tok);
      ++c;
    }
    require(c == expect_cols, errc::parse, "matrix text row too short");
    ++r;
  }
  require(r == expect_rows, errc::parse, "matrix text has too few rows");
  return m;
}

}  // namespace kani
