#pragma once

#include <mutex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace kani {

struct FieldParams;
using Field = std::shared_ptr<const FieldParams>;

// F_{p^m} as polynomial residues mod a monic irreducible of degree m over
// F_p. Elements are packed as sum c_i p^i (coefficient vector in base p,
// constant term first); all arithmetic is exact. For q <= 256 full
// add/mul/inv tables are cached, beyond that ops unpack digits on the fly.
struct FieldParams {
  uint32_t p = 0;
  uint32_t m = 0;
  uint32_t q = 0;                 // p^m
  std::vector<uint32_t> modulus;  // m+1 coefficients, constant first, monic

  // canonical modulus: least packed coefficient value among monic irreducibles
  static Field make(uint32_t p, uint32_t m);
  static Field make(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);
  static Field prime(uint32_t p) { return make(p, 1); }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // errc::domain on 0
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t frobenius(uint32_t a) const { return pow(a, p); }

  std::vector<uint32_t> coeffs(uint32_t a) const;
  uint32_t from_coeffs(const std::vector<uint32_t>& c) const;

  // token form: coefficients joined by commas, constant term first ("1,0")
  std::string to_token(uint32_t a) const;
  uint32_t from_token(const std::string& tok) const;

  bool same(const FieldParams& o) const { return p == o.p && modulus == o.modulus; }

  // cached embedding root for a subfield modulus, see embed_field
  uint32_t embedding_root(const std::vector<uint32_t>& small_modulus) const;

 private:
  bool tables = false;
  std::vector<uint32_t> add_t, mul_t, inv_t;
  mutable std::mutex cache_mu;
  mutable std::map<std::vector<uint32_t>, uint32_t> root_cache;

  void build_tables();
  uint32_t mul_slow(uint32_t a, uint32_t b) const;
  uint32_t add_slow(uint32_t a, uint32_t b) const;
};

struct FqScalar {
  Field field;
  uint32_t v = 0;
};

// dense matrix over one field; rows*cols packed scalars, row-major
struct FqMatrix {
  Field field;
  uint32_t rows = 0, cols = 0;
  std::vector<uint32_t> a;

  FqMatrix() = default;
  FqMatrix(Field f, uint32_t r, uint32_t c) : field(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}

  uint32_t& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
  uint32_t at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }

  static FqMatrix identity(const Field& f, uint32_t n);
  FqMatrix mul(const FqMatrix& o) const;
  FqMatrix add(const FqMatrix& o) const;
  FqMatrix sub(const FqMatrix& o) const;
  FqMatrix transpose() const;
  FqMatrix scaled(uint32_t c) const;
  bool is_zero() const;
  bool operator==(const FqMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

  // row of matrix-times-column-vector: (this * v)
  std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;
};

struct RrefResult {
  FqMatrix r;
  uint32_t rank = 0;
  std::vector<uint32_t> pivot_cols;
};

RrefResult rref(const FqMatrix& mat);
uint32_t rank_of(const FqMatrix& mat);

// rows span the right null space { x : mat * x = 0 }, echelonized
FqMatrix kernel_basis(const FqMatrix& mat);

// one solution of mat * x = b (free coordinates zero), or nullopt
std::optional<std::vector<uint32_t>> solve(const FqMatrix& mat, const std::vector<uint32_t>& b);

std::optional<FqMatrix> inverse(const FqMatrix& mat);

// field embedding F_{p^a} -> F_{p^ab}: the canonical generator of the small
// field goes to the least root of the small modulus in the big field.
FqScalar embed_field(const FqScalar& x, const Field& target);
FqMatrix embed_matrix(const FqMatrix& mat, const Field& target);

// incremental reduced-echelon row collection; the workhorse for rank,
// spinning and span membership
struct Echelon {
  Field field;
  uint32_t cols = 0;
  std::vector<std::vector<uint32_t>> rows;  // reduced, pivot coefficient 1
  std::vector<int32_t> pivot_of_col;        // -1 when none

  Echelon() = default;
  Echelon(Field f, uint32_t c) : field(std::move(f)), cols(c), pivot_of_col(c, -1) {}

  uint32_t rank() const { return uint32_t(rows.size()); }
  // reduces v in place against the basis; on a new pivot inserts and returns true
  bool insert(std::vector<uint32_t> v);
  bool contains(std::vector<uint32_t> v) const;
  FqMatrix to_matrix() const;
};

bool is_prime_u32(uint32_t n);

// text form used by all matrix I/O: one row per line, scalar tokens
// separated by single spaces
std::string matrix_to_text(const FqMatrix& m);
FqMatrix matrix_from_text(const Field& f, const std::string& text, uint32_t expect_rows, uint32_t expect_cols);

}  // namespace kani
