#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "modrep.hpp"
#include "oracles.hpp"

using namespace kani;

namespace {

std::vector<uint32_t> simple_dims(const SimpleSet& s) {
  std::vector<uint32_t> d;
  for (const auto& m : s.simples) d.push_back(m.dim);
  return d;
}

GModule conjugated_copy(const GModule& M, uint64_t seed) {
  Rng rng(seed);
  FqMatrix T(M.field, M.dim, M.dim);
  std::optional<FqMatrix> Ti;
  do {
    for (auto& x : T.a) x = rng.below(M.field->q);
    Ti = inverse(T);
  } while (!Ti);
  std::vector<FqMatrix> mats;
  for (const auto& g : M.gen_mats) mats.push_back(Ti->mul(g.mul(T)));
  return GModule::make(M.group, M.field, M.dim, std::move(mats));
}

}  // namespace

TEST_CASE("module construction validates the generator assignment") {
  GroupPtr c2 = cyclic_group(2);
  Field f2 = FieldParams::prime(2);
  // x -> [[1,1],[0,1]] has order 2 in GL_2(F_2): fine
  FqMatrix m(f2, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 1;
  CHECK_NOTHROW(GModule::make(c2, f2, 2, {m}));
  // an order-3 matrix cannot represent an involution
  Field f3 = FieldParams::prime(3);
  FqMatrix bad(f3, 1, 1);
  bad.at(0, 0) = 2;  // order 2, ok for c2
  CHECK_NOTHROW(GModule::make(c2, f3, 1, {bad}));
  GroupPtr c3 = cyclic_group(3);
  CHECK_THROWS_AS(GModule::make(c3, f3, 1, {bad}), error);
  // singular matrix rejected
  FqMatrix sing(f2, 2, 2);
  sing.at(0, 0) = 1;
  CHECK_THROWS_AS(GModule::make(c2, f2, 2, {sing}), error);
}

TEST_CASE("element matrices respect the multiplication table") {
  for (const GroupPtr& g : {symmetric_group(3), alternating4(), quaternion8()}) {
    Field f = FieldParams::prime(3);
    GModule reg = regular_module(g, f);
    for (uint32_t a = 0; a < g->n; ++a)
      for (uint32_t b = 0; b < g->n; ++b) {
        FqMatrix prod = element_matrix(reg, uint16_t(a)).mul(element_matrix(reg, uint16_t(b)));
        CHECK(prod == element_matrix(reg, g->mulv(uint16_t(a), uint16_t(b))));
      }
    // apply_element agrees with the matrix
    std::vector<uint32_t> v(g->n, 0);
    v[1 % g->n] = 1;
    v[g->n - 1] = 2;
    for (uint32_t a = 0; a < g->n; ++a)
      CHECK(apply_element(reg, uint16_t(a), v) == element_matrix(reg, uint16_t(a)).apply(v));
  }
}

TEST_CASE("spinning the regular module from a single vector fills it") {
  GroupPtr s3 = symmetric_group(3);
  Field f2 = FieldParams::prime(2);
  GModule reg = regular_module(s3, f2);
  std::vector<uint32_t> e0(s3->n, 0);
  e0[0] = 1;
  CHECK(spin(reg, {e0}).rows == s3->n);
  // the all-ones vector spans the fixed line, a proper submodule
  std::vector<uint32_t> ones(s3->n, 1);
  CHECK(spin(reg, {ones}).rows == 1);
}

TEST_CASE("meataxe agrees with exhaustive invariant subspace search") {
  // small modules where every subspace can be enumerated
  std::vector<GModule> battery;
  for (const GroupPtr& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), klein4(), symmetric_group(3)}) {
    for (uint32_t p : {2u, 3u}) {
      Field f = FieldParams::prime(p);
      GModule reg = regular_module(g, f);
      if (g->n <= 4) battery.push_back(reg);
      for (auto& fac : composition_factors(reg, 5)) battery.push_back(fac);
      battery.push_back(GModule::trivial(g, f, 2));
    }
  }
  for (const auto& M : battery) {
    if (M.dim == 0 || M.dim > 4) continue;
    auto subs = oracle::invariant_proper_subspaces(M);
    MeataxeResult res = meataxe_is_irreducible(M, 17);
    CHECK(res.irreducible == subs.empty());
    if (!res.irreducible) {
      CHECK(oracle::subspace_is_invariant(M, res.invariant_subspace));
      CHECK(res.invariant_subspace.rows > 0);
      CHECK(res.invariant_subspace.rows < M.dim);
    }
  }
}

TEST_CASE("composition factors of regular modules have the right dimensions") {
  auto dims_of = [](std::vector<GModule> f) {
    std::vector<uint32_t> d;
    for (auto& m : f) d.push_back(m.dim);
    std::sort(d.begin(), d.end());
    return d;
  };
  Field f2 = FieldParams::prime(2);
  Field f3 = FieldParams::prime(3);
  Field f4 = FieldParams::make(2, 2);
  // C3 over F_2: semisimple, k + (2-dim with endo field F_4)
  CHECK(dims_of(composition_factors(regular_module(cyclic_group(3), f2), 1)) == std::vector<uint32_t>{1, 2});
  // C3 over F_4: three characters
  CHECK(dims_of(composition_factors(regular_module(cyclic_group(3), f4), 1)) ==
        std::vector<uint32_t>{1, 1, 1});
  // C4 over F_2: uniserial, four trivial factors
  CHECK(dims_of(composition_factors(regular_module(cyclic_group(4), f2), 1)) ==
        std::vector<uint32_t>{1, 1, 1, 1});
  // S3 over F_3: factors 1,1,1^-,1^-? no: k[S3] mod 3 has simples k, sign; regular = 6
  auto s3f3 = dims_of(composition_factors(regular_module(symmetric_group(3), f3), 1));
  CHECK(s3f3.size() == 6);
  for (auto d : s3f3) CHECK(d == 1);
  // S3 over F_2: k, V (2-dim), with 6 = 1+1+2+2
  CHECK(dims_of(composition_factors(regular_module(symmetric_group(3), f2), 1)) ==
        std::vector<uint32_t>{1, 1, 2, 2});
  // A4 over F_2: 12 = 4*1 + 4*2 : k appears 4 times, W twice
  CHECK(dims_of(composition_factors(regular_module(alternating4(), f2), 1)) ==
        std::vector<uint32_t>{1, 1, 1, 1, 2, 2, 2, 2});
  // A4 over F_3: 12 = 1 + 1 + 1 + 3x3
  CHECK(dims_of(composition_factors(regular_module(alternating4(), f3), 1)) ==
        std::vector<uint32_t>{1, 1, 1, 3, 3, 3});
}

TEST_CASE("simple module sets in canonical order") {
  Field f2 = FieldParams::prime(2);
  Field f3 = FieldParams::prime(3);
  Field f4 = FieldParams::make(2, 2);

  SimpleSet c3f2 = simple_modules(cyclic_group(3), f2);
  CHECK(simple_dims(c3f2) == std::vector<uint32_t>{1, 2});
  CHECK(endo_dim(c3f2.simples[0]) == 1);
  CHECK(endo_dim(c3f2.simples[1]) == 2);

  SimpleSet c3f4 = simple_modules(cyclic_group(3), f4);
  CHECK(simple_dims(c3f4) == std::vector<uint32_t>{1, 1, 1});

  SimpleSet s3f2 = simple_modules(symmetric_group(3), f2);
  CHECK(simple_dims(s3f2) == std::vector<uint32_t>{1, 2});
  CHECK(endo_dim(s3f2.simples[1]) == 1);

  SimpleSet a4f2 = simple_modules(alternating4(), f2);
  CHECK(simple_dims(a4f2) == std::vector<uint32_t>{1, 2});

  SimpleSet a4f3 = simple_modules(alternating4(), f3);
  CHECK(simple_dims(a4f3) == std::vector<uint32_t>{1, 3});

  SimpleSet q8f3 = simple_modules(quaternion8(), f3);
  CHECK(simple_dims(q8f3) == std::vector<uint32_t>{1, 1, 1, 1, 2});

  SimpleSet d4f2 = simple_modules(dihedral8(), f2);
  CHECK(simple_dims(d4f2) == std::vector<uint32_t>{1});

  // index_of finds a conjugated copy
  GModule twisted = conjugated_copy(s3f2.simples[1], 11);
  CHECK(s3f2.index_of(twisted) == 1);
  CHECK_THROWS_AS(s3f2.index_of(GModule::trivial(symmetric_group(3), f2, 2)), error);
}

TEST_CASE("canonical keys are isomorphism invariants") {
  Field f2 = FieldParams::prime(2);
  Field f3 = FieldParams::prime(3);
  SimpleSet a4f3 = simple_modules(alternating4(), f3);
  for (const auto& s : a4f3.simples)
    for (uint64_t seed : {3u, 99u}) CHECK(canonical_key(s) == canonical_key(conjugated_copy(s, seed)));
  SimpleSet s3f2 = simple_modules(symmetric_group(3), f2);
  CHECK(canonical_key(s3f2.simples[0]) != canonical_key(s3f2.simples[1]));
}

TEST_CASE("hom spaces and endomorphism rings") {
  Field f2 = FieldParams::prime(2);
  GroupPtr c3 = cyclic_group(3);
  GModule reg = regular_module(c3, f2);
  // End of the regular module has dimension |G|
  CHECK(endo_dim(reg) == 3);
  SimpleSet s = simple_modules(c3, f2);
  // no homs between non-isomorphic simples
  CHECK(hom_space(s.simples[0], s.simples[1]).empty());
  CHECK(hom_space(s.simples[1], s.simples[0]).empty());
  // Hom(k, reg) = fixed points, one dimensional
  CHECK(hom_space(s.simples[0], reg).size() == 1);
  // every hom intertwines
  for (const auto& F : hom_space(s.simples[1], reg)) {
    for (size_t gi = 0; gi < reg.gen_mats.size(); ++gi)
      CHECK(F.mul(s.simples[1].gen_mats[gi]) == reg.gen_mats[gi].mul(F));
  }
  GroupPtr s3 = symmetric_group(3);
  CHECK(endo_dim(regular_module(s3, f2)) == 6);
}

TEST_CASE("direct sums and duals") {
  Field f3 = FieldParams::prime(3);
  GroupPtr s3 = symmetric_group(3);
  SimpleSet simples = simple_modules(s3, f3);
  REQUIRE(simples.size() == 2);  // trivial and sign
  GModule sum = direct_sum(simples.simples[0], simples.simples[1]);
  CHECK(sum.dim == 2);
  auto facs = composition_factors(sum, 3);
  CHECK(facs.size() == 2);
  CHECK((are_isomorphic(facs[0], simples.simples[0]).has_value() ||
         are_isomorphic(facs[0], simples.simples[1]).has_value()));
  // dual of a 1-dim module inverts the scalar; sign is self-dual
  GModule sgn = simples.simples[1];
  CHECK(are_isomorphic(dual_module(sgn), sgn).has_value());
  // dual of the standard S3 module over F_3? stick to F_2 standard: self-dual
  Field f2 = FieldParams::prime(2);
  GModule std2 = simple_modules(s3, f2).simples[1];
  CHECK(are_isomorphic(dual_module(std2), std2).has_value());
}

TEST_CASE("splitting field degrees") {
  CHECK(splitting_field_degree(cyclic_group(3), 2) == 2);
  CHECK(splitting_field_degree(cyclic_group(3), 5) == 2);
  CHECK(splitting_field_degree(cyclic_group(3), 7) == 1);
  CHECK(splitting_field_degree(cyclic_group(4), 3) == 2);
  CHECK(splitting_field_degree(cyclic_group(4), 5) == 1);
  CHECK(splitting_field_degree(cyclic_group(5), 2) == 4);
  CHECK(splitting_field_degree(symmetric_group(3), 2) == 1);
  CHECK(splitting_field_degree(alternating4(), 2) == 2);
  CHECK(splitting_field_degree(alternating4(), 5) == 2);
  CHECK(splitting_field_degree(quaternion8(), 3) == 1);
  // cap enforcement
  CHECK_THROWS_AS(splitting_field_degree(cyclic_group(5), 2, 3), error);
}

TEST_CASE("base change decomposition and divisibility") {
  GroupPtr c3 = cyclic_group(3);
  Field f2 = FieldParams::prime(2);
  Field f4 = FieldParams::make(2, 2);
  SimpleSet base = simple_modules(c3, f2);
  SimpleSet ext = simple_modules(c3, f4);
  // the 2-dim splits into the two nontrivial characters over F_4
  auto parts = decompose_over_extension(base.simples[1], f4);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dim == 1);
  CHECK(parts[1].dim == 1);
  CHECK(!are_isomorphic(parts[0], parts[1]).has_value());
  // divisibility: both nontrivial characters divide W, the trivial does not
  uint32_t dividing = 0;
  for (const auto& s : ext.simples)
    if (divides(s, base.simples[1])) ++dividing;
  CHECK(dividing == 2);
  CHECK(divides(ext.simples[0], base.simples[0]));
  CHECK(!divides(ext.simples[0], base.simples[1]));
  // trivial module stays trivial
  auto tparts = decompose_over_extension(base.simples[0], f4);
  REQUIRE(tparts.size() == 1);
  CHECK(tparts[0].dim == 1);
}

TEST_CASE("inflation along quotient maps") {
  GroupPtr a4 = alternating4();
  uint16_t invol = 0;
  for (uint16_t a = 1; a < a4->n; ++a)
    if (a4->element_order(a) == 2) {
      invol = a;
      break;
    }
  Subgroup v4 = normal_closure(a4, {invol});
  auto qr = quotient_group(a4, v4);
  Field f2 = FieldParams::prime(2);
  SimpleSet quot_simples = simple_modules(qr.quotient, f2);
  REQUIRE(simple_dims(quot_simples) == std::vector<uint32_t>{1, 2});
  GModule inflated = inflate(quot_simples.simples[1], qr.proj);
  CHECK(inflated.group.get() == a4.get());
  CHECK(inflated.dim == 2);
  SimpleSet a4_simples = simple_modules(a4, f2);
  CHECK(a4_simples.index_of(inflated) == 1);
}

TEST_CASE("fixed points under a normal subgroup") {
  GroupPtr a4 = alternating4();
  uint16_t invol = 0;
  for (uint16_t a = 1; a < a4->n; ++a)
    if (a4->element_order(a) == 2) {
      invol = a;
      break;
    }
  Subgroup v4 = normal_closure(a4, {invol});
  auto qr = quotient_group(a4, v4);
  Field f2 = FieldParams::prime(2);
  GModule reg = regular_module(a4, f2);
  GModule fixed = fixed_point_module(reg, v4, qr.proj);
  CHECK(fixed.group.get() == qr.quotient.get());
  CHECK(fixed.dim == 3);
  // as a C3-module the fixed part is the regular module: factors 1 and 2
  auto facs = composition_factors(fixed, 9);
  std::vector<uint32_t> dims;
  for (auto& m : facs) dims.push_back(m.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<uint32_t>{1, 2});
}

TEST_CASE("kernel charts identify elementary abelian kernels") {
  GroupPtr a4 = alternating4();
  uint16_t invol = 0;
  for (uint16_t a = 1; a < a4->n; ++a)
    if (a4->element_order(a) == 2) {
      invol = a;
      break;
    }
  Subgroup v4 = normal_closure(a4, {invol});
  auto qr = quotient_group(a4, v4);
  ExtensionData e = make_extension(a4, qr.quotient, qr.proj, 2);
  auto chart = kernel_chart(e, 2);
  CHECK(chart->mod.dim == 2);
  CHECK(chart->basis_elts.size() == 2);
  // chart tables invert each other
  for (uint32_t code = 0; code < 4; ++code) CHECK(chart->elt_to_vec[chart->vec_to_elt[code]] == code);
  // conjugation module is the nontrivial 2-dim simple of C3
  Field f2 = FieldParams::prime(2);
  SimpleSet s = simple_modules(qr.quotient, f2);
  CHECK(s.index_of(chart->mod) == 1);

  // non-elementary-abelian kernel is rejected
  GroupPtr c4 = cyclic_group(4);
  GroupPtr c1 = trivial_group();
  GroupHom to1 = make_hom(c4, c1, {0});
  ExtensionData bad = make_extension(c4, c1, to1, 2);
  CHECK_THROWS_AS(kernel_chart(bad, 2), error);
}

TEST_CASE("module text round trip") {
  GroupPtr s3 = symmetric_group(3);
  Field f4 = FieldParams::make(2, 2);
  GModule reg = regular_module(s3, FieldParams::prime(2));
  GModule back = module_from_text(s3, module_to_text(reg));
  CHECK(back.dim == reg.dim);
  for (size_t i = 0; i < reg.gen_mats.size(); ++i) CHECK(back.gen_mats[i] == reg.gen_mats[i]);
  // extension field scalars survive
  SimpleSet c3f4 = simple_modules(cyclic_group(3), f4);
  GModule omega = c3f4.simples[1];
  GModule back2 = module_from_text(cyclic_group(3), module_to_text(omega));
  CHECK(back2.gen_mats[0] == omega.gen_mats[0]);
}

TEST_CASE("fixed point oracle agrees with hom counting") {
  // h0 = dim Hom(k, M) for a sample of modules
  for (const GroupPtr& g : {cyclic_group(4), symmetric_group(3), alternating4()}) {
    Field f2 = FieldParams::prime(2);
    GModule reg = regular_module(g, f2);
    CHECK(oracle::h0_dim(reg) == hom_space(GModule::trivial(g, f2), reg).size());
    CHECK(oracle::h0_dim(reg) == 1);
  }
}
