#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ff.hpp"

using namespace kani;

namespace {

void check_field_axioms(const Field& f, uint32_t samples = 0) {
  uint32_t q = f->q;
  Rng rng(42);
  auto pick = [&](uint32_t i) { return samples ? rng.below(q) : i; };
  uint32_t outer = samples ? samples : q;
  for (uint32_t i = 0; i < outer; ++i) {
    uint32_t a = pick(i);
    for (uint32_t j = 0; j < (samples ? 8u : q); ++j) {
      uint32_t b = samples ? rng.below(q) : j;
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      CHECK(f->sub(f->add(a, b), b) == a);
      uint32_t c = samples ? rng.below(q) : (a * 7 + b * 3 + 1) % q;
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
    }
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a) {
      CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, q - 1) == 1);
    }
    CHECK(f->pow(a, q) == a);
  }
}

}  // namespace

TEST_CASE("prime and extension field arithmetic") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 13u}) check_field_axioms(FieldParams::prime(p));
  check_field_axioms(FieldParams::make(2, 2));
  check_field_axioms(FieldParams::make(2, 3));
  check_field_axioms(FieldParams::make(3, 2));
  check_field_axioms(FieldParams::make(5, 2));
  check_field_axioms(FieldParams::make(2, 10), 64);
  check_field_axioms(FieldParams::make(3, 6), 64);
}

TEST_CASE("canonical moduli are the expected least irreducibles") {
  CHECK(FieldParams::make(2, 2)->modulus == std::vector<uint32_t>{1, 1, 1});
  CHECK(FieldParams::make(2, 3)->modulus == std::vector<uint32_t>{1, 1, 0, 1});
  CHECK(FieldParams::make(3, 2)->modulus == std::vector<uint32_t>{1, 0, 1});
  CHECK(FieldParams::make(5, 2)->modulus == std::vector<uint32_t>{2, 0, 1});
}

TEST_CASE("frobenius fixes exactly the prime field") {
  Field f = FieldParams::make(3, 2);
  uint32_t fixed = 0;
  for (uint32_t a = 0; a < f->q; ++a)
    if (f->frobenius(a) == a) ++fixed;
  CHECK(fixed == 3);
}

TEST_CASE("token round trip") {
  Field f = FieldParams::make(2, 3);
  for (uint32_t a = 0; a < f->q; ++a) CHECK(f->from_token(f->to_token(a)) == a);
  CHECK(f->from_token("1") == 1);
  CHECK_THROWS_AS((void)f->from_token("2,0,0"), error);
  Field p5 = FieldParams::prime(5);
  CHECK(p5->to_token(3) == "3");
}

TEST_CASE("field embeddings preserve the operations") {
  Field small = FieldParams::make(2, 2);
  Field big = FieldParams::make(2, 4);
  for (uint32_t a = 0; a < small->q; ++a)
    for (uint32_t b = 0; b < small->q; ++b) {
      FqScalar ea = embed_field({small, a}, big);
      FqScalar eb = embed_field({small, b}, big);
      CHECK(embed_field({small, small->add(a, b)}, big).v == big->add(ea.v, eb.v));
      CHECK(embed_field({small, small->mul(a, b)}, big).v == big->mul(ea.v, eb.v));
    }
  // injective, fixes 0 and 1
  CHECK(embed_field({small, 0}, big).v == 0);
  CHECK(embed_field({small, 1}, big).v == 1);
}

TEST_CASE("rref, rank, kernel, solve, inverse agree on random matrices") {
  for (uint32_t pm : {2u, 3u, 4u, 25u}) {
    Field f = pm == 4 ? FieldParams::make(2, 2) : (pm == 25 ? FieldParams::make(5, 2) : FieldParams::prime(pm));
    Rng rng(7 + pm);
    for (uint32_t trial = 0; trial < 30; ++trial) {
      uint32_t r = 1 + rng.below(5), c = 1 + rng.below(5);
      FqMatrix A(f, r, c);
      for (auto& x : A.a) x = rng.below(f->q);
      RrefResult rr = rref(A);
      CHECK(rr.rank <= std::min(r, c));
      FqMatrix K = kernel_basis(A);
      CHECK(K.rows == c - rr.rank);
      for (uint32_t i = 0; i < K.rows; ++i) {
        std::vector<uint32_t> x(K.a.begin() + size_t(i) * c, K.a.begin() + size_t(i + 1) * c);
        for (uint32_t v : A.apply(x)) CHECK(v == 0);
      }
      // consistent system solves back
      std::vector<uint32_t> x0(c);
      for (auto& x : x0) x = rng.below(f->q);
      auto b = A.apply(x0);
      auto sol = solve(A, b);
      REQUIRE(sol.has_value());
      CHECK(A.apply(*sol) == b);
      if (r == c) {
        auto inv = inverse(A);
        if (rr.rank == r) {
          REQUIRE(inv.has_value());
          CHECK(inv->mul(A) == FqMatrix::identity(f, r));
          CHECK(A.mul(*inv) == FqMatrix::identity(f, r));
        } else {
          CHECK(!inv.has_value());
        }
      }
    }
  }
}

TEST_CASE("solve reports inconsistent systems") {
  Field f = FieldParams::prime(3);
  FqMatrix A(f, 2, 1);
  A.at(0, 0) = 1;
  A.at(1, 0) = 1;
  CHECK(!solve(A, {1, 2}).has_value());
  CHECK(solve(A, {2, 2}).has_value());
}

TEST_CASE("echelon collection matches matrix rank and span membership") {
  Field f = FieldParams::prime(3);
  Rng rng(99);
  for (uint32_t trial = 0; trial < 20; ++trial) {
    uint32_t c = 4 + rng.below(3);
    uint32_t nrows = 1 + rng.below(6);
    FqMatrix A(f, nrows, c);
    for (auto& x : A.a) x = rng.below(3);
    Echelon ech(f, c);
    for (uint32_t i = 0; i < nrows; ++i)
      ech.insert(std::vector<uint32_t>(A.a.begin() + size_t(i) * c, A.a.begin() + size_t(i + 1) * c));
    CHECK(ech.rank() == rank_of(A));
    for (uint32_t i = 0; i < nrows; ++i)
      CHECK(ech.contains(std::vector<uint32_t>(A.a.begin() + size_t(i) * c, A.a.begin() + size_t(i + 1) * c)));
    // a random combination of the rows stays inside
    std::vector<uint32_t> comb(c, 0);
    for (uint32_t i = 0; i < nrows; ++i) {
      uint32_t co = rng.below(3);
      for (uint32_t j = 0; j < c; ++j) comb[j] = f->add(comb[j], f->mul(co, A.at(i, j)));
    }
    CHECK(ech.contains(comb));
  }
}

TEST_CASE("matrix text round trip") {
  Field f = FieldParams::make(2, 2);
  FqMatrix A(f, 2, 3);
  uint32_t v = 0;
  for (auto& x : A.a) x = (v++) % 4;
  FqMatrix B = matrix_from_text(f, matrix_to_text(A), 2, 3);
  CHECK(A == B);
}

TEST_CASE("primality helper") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(3));
  CHECK(is_prime_u32(97));
  CHECK(!is_prime_u32(1));
  CHECK(!is_prime_u32(91));
  CHECK(!is_prime_u32(0));
}
