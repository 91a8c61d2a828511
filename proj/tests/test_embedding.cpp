#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "embedding.hpp"

using namespace kani;

namespace {

ExtensionData onto_trivial(const GroupPtr& g, const GroupPtr& one, uint32_t p) {
  std::vector<uint16_t> zeros(g->gens.size(), 0);
  return make_extension(g, one, make_hom(g, one, zeros), p);
}

bool all_slack_nonneg(const std::vector<SlackRow>& rows) {
  for (const auto& r : rows)
    if (r.slack < 0) return false;
  return true;
}

}  // namespace

TEST_CASE("slack rows over a free base") {
  GroupPtr one = trivial_group();
  CoverDatum x2 = ordinary_cover(one, 2, 2);

  GroupPtr c2 = cyclic_group(2);
  EmbeddingProblem pb = make_problem(x2, onto_trivial(c2, one, 2));
  auto rows = kani_check(pb);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].h1_G == 1);
  CHECK(rows[0].h1_H == 0);
  CHECK(rows[0].delta == 2);
  CHECK(rows[0].slack == 1);
  Verdict v = decide_strong_solvability(pb);
  CHECK(v.solvable);
  REQUIRE(v.base_cases.size() == 1);
  CHECK(v.base_cases[0].kernel_dim == 1);

  // three independent involutions against two handles
  GroupPtr e8 = from_permutations({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}});
  REQUIRE(e8->n == 8);
  EmbeddingProblem tight = make_problem(x2, onto_trivial(e8, one, 2));
  auto r8 = kani_check(tight);
  REQUIRE(r8.size() == 1);
  CHECK(r8[0].slack == -1);
  Verdict v8 = decide_strong_solvability(tight);
  CHECK_FALSE(v8.solvable);
  CHECK(!v8.trace.empty());
  CHECK(v8.to_text().find("not strongly solvable") != std::string::npos);
}

TEST_CASE("identity extension keeps the delta column") {
  GroupPtr s3 = symmetric_group(3);
  CoverDatum y = ordinary_cover(s3, 2, 2);
  EmbeddingProblem pb = make_problem(y, make_extension(s3, s3, identity_hom(s3), 2));
  auto rows = kani_check(pb);
  REQUIRE(rows.size() == y.simples.size());
  for (const auto& r : rows) {
    CHECK(r.h1_G == r.h1_H);
    CHECK(r.slack == int64_t(r.delta));
  }
  Verdict v = decide_strong_solvability(pb);
  CHECK(v.solvable);
  REQUIRE(v.base_cases.size() == 1);
  CHECK(v.base_cases[0].kernel_dim == 0);
}

TEST_CASE("minimal generator count against the cover rank") {
  GroupPtr one = trivial_group();
  std::vector<GroupPtr> ps = {cyclic_group(2), cyclic_group(4), cyclic_group(8), klein4(),
                              dihedral8(), quaternion8()};
  for (uint32_t gamma = 0; gamma <= 2; ++gamma) {
    CoverDatum y = ordinary_cover(one, 2, gamma);
    for (const GroupPtr& p : ps) {
      uint32_t d = frattini_of_p_group(p, 2).d;
      Verdict v = decide_strong_solvability(make_problem(y, onto_trivial(p, one, 2)));
      CHECK(v.solvable == (d <= gamma));
    }
  }

  // the first collapse flattens the Frattini subgroup
  CoverDatum y2 = ordinary_cover(one, 2, 2);
  auto trace_d4 = reduction_trace(make_problem(y2, onto_trivial(dihedral8(), one, 2)));
  REQUIRE(!trace_d4.empty());
  CHECK(trace_d4[0].kind == ReductionStep::Kind::FrattiniQuotient);
  CHECK(trace_d4[0].collapsed_order == 2);
  CHECK(trace_d4[0].child_order == 4);

  auto trace_c8 = reduction_trace(make_problem(y2, onto_trivial(cyclic_group(8), one, 2)));
  REQUIRE(!trace_c8.empty());
  CHECK(trace_c8[0].kind == ReductionStep::Kind::FrattiniQuotient);
  CHECK(trace_c8[0].collapsed_order == 4);
  CHECK(trace_c8[0].child_order == 2);

  auto trace_v4 = reduction_trace(make_problem(y2, onto_trivial(klein4(), one, 2)));
  REQUIRE(!trace_v4.empty());
  CHECK(trace_v4[0].kind == ReductionStep::Kind::SimpleQuotient);
  CHECK(trace_v4[0].collapsed_order == 2);
  CHECK(trace_v4[0].child_order == 2);
}

TEST_CASE("base cases split by the class") {
  GroupPtr c2 = cyclic_group(2);
  GroupPtr c4 = cyclic_group(4);
  ExtensionData e42 = make_extension(c4, c2, make_hom(c4, c2, {c2->gens[0]}), 2);

  // nonsplit tower over a genus 1 base: delta is 0 yet the problem solves
  CoverDatum y1 = ordinary_cover(c2, 2, 1);
  CHECK(y1.delta == std::vector<uint32_t>{0});
  BaseCase bc = classify_base_case(make_problem(y1, e42));
  CHECK(bc.kernel_dim == 1);
  CHECK_FALSE(bc.class_trivial);
  CHECK(bc.solvable);
  Verdict v = decide_strong_solvability(make_problem(y1, e42));
  CHECK(v.solvable);
  REQUIRE(v.slack.size() == 1);
  CHECK(v.slack[0].slack == 0);

  // a nonzero class ignores the delta column entirely
  for (uint32_t d : {0u, 5u}) {
    Verdict vu = decide_strong_solvability(make_problem(user_cover(c2, 2, 1, {d}), e42));
    CHECK(vu.solvable);
  }

  // split square: everything rides on delta
  GroupPtr v4 = klein4();
  ExtensionData esplit = make_extension(v4, c2, make_hom(v4, c2, {c2->gens[0], 0}), 2);
  BaseCase bs2 = classify_base_case(make_problem(ordinary_cover(c2, 2, 2), esplit));
  CHECK(bs2.class_trivial);
  CHECK(bs2.solvable);
  BaseCase bs1 = classify_base_case(make_problem(y1, esplit));
  CHECK(bs1.class_trivial);
  CHECK_FALSE(bs1.solvable);
  CHECK_FALSE(decide_strong_solvability(make_problem(y1, esplit)).solvable);

  // center of the quaternions under its Klein quotient: again nonsplit
  GroupPtr q8 = quaternion8();
  uint16_t z = 0;
  for (uint16_t x = 1; x < q8->n; ++x)
    if (q8->element_order(x) == 2) z = x;
  auto qr = quotient_group(q8, subgroup_generated(q8, {z}));
  ExtensionData eq = make_extension(q8, qr.quotient, qr.proj, 2);
  for (uint32_t d : {0u, 4u}) {
    BaseCase b = classify_base_case(make_problem(user_cover(qr.quotient, 2, 1, {d}), eq));
    CHECK_FALSE(b.class_trivial);
    CHECK(b.solvable);
  }

  // not a base case when the kernel module is reducible
  GroupPtr one = trivial_group();
  CHECK_THROWS_AS(classify_base_case(make_problem(ordinary_cover(one, 2, 2),
                                                  onto_trivial(klein4(), one, 2))),
                  error);
}

TEST_CASE("split extensions add one h1 dimension per dividing simple") {
  GroupPtr c3 = cyclic_group(3);
  Field f2 = FieldParams::prime(2);
  SimpleSet sims = simple_modules(c3, f2);
  CoverDatum y = ordinary_cover(c3, 2, 2);
  for (const GModule& V : sims.simples) {
    ExtensionData e = extension_from_cocycle(zero_cocycle(V));
    for (const GModule& W : decompose_over_extension(V, y.field)) {
      CHECK(h1(inflate(W, e.q)) == h1(W) + 1);
    }
    Verdict v = decide_strong_solvability(make_problem(y, e));
    CHECK(v.solvable);  // ordinary deltas at genus 2 are 2, 1, 1
  }

  // the faithful plane over genus 1 has delta 0 and the split class loses
  GModule W = sims.simples[1];
  REQUIRE(W.dim == 2);
  ExtensionData ea4 = extension_from_cocycle(zero_cocycle(W));
  CHECK(ea4.G->n == 12);
  Verdict v1 = decide_strong_solvability(make_problem(ordinary_cover(c3, 2, 1), ea4));
  CHECK_FALSE(v1.solvable);
  CHECK_FALSE(all_slack_nonneg(v1.slack));
}

TEST_CASE("counting identity") {
  GroupPtr one = trivial_group();
  Field f2 = FieldParams::prime(2);
  HomCount free3 = hom_count(ordinary_cover(one, 2, 3), GModule::trivial(one, f2));
  CHECK(free3.deg == 1);
  CHECK(free3.hom_dim == 3);
  CHECK(free3.h2_side == 0);

  GroupPtr c3 = cyclic_group(3);
  SimpleSet sims = simple_modules(c3, f2);
  HomCount plane = hom_count(ordinary_cover(c3, 2, 2), sims.simples[1]);
  CHECK(plane.deg == 2);
  CHECK(plane.hom_dim == 2);
  CHECK(plane.h2_side == 0);

  // more maps than obstructions: a surjective solution of the split problem
  GroupPtr c2 = cyclic_group(2);
  HomCount line = hom_count(ordinary_cover(c2, 2, 2), GModule::trivial(c2, f2));
  CHECK(line.deg == 1);
  CHECK(line.hom_dim == 2);
  CHECK(line.h2_side == 1);
  CHECK(line.hom_dim > line.h2_side);

  CHECK_THROWS_AS(hom_count(ordinary_cover(c3, 2, 2), GModule::trivial(one, f2)), error);
  CHECK_THROWS_AS(hom_count(ordinary_cover(c3, 2, 2),
                            GModule::trivial(c3, FieldParams::make(2, 2))),
                  error);
}

TEST_CASE("free quotient route") {
  GroupPtr one = trivial_group();
  for (uint32_t gamma = 0; gamma <= 3; ++gamma) {
    CoverDatum y = ordinary_cover(one, 2, gamma);
    for (const GroupPtr& p : {cyclic_group(2), cyclic_group(4), klein4(), dihedral8(), quaternion8()}) {
      uint32_t d = frattini_of_p_group(p, 2).d;
      CHECK(decide_pprime_profinite(p, y, {}) == (d <= gamma));
      RouteReport rep = cross_check_routes(p, y, {});
      CHECK(rep.solvable == (d <= gamma));
      CHECK(rep.pprime == rep.strong.solvable);
    }
  }

  // cycling the involutions of the Klein group builds the alternating group
  GroupPtr v4 = klein4();
  GroupPtr c3 = cyclic_group(3);
  uint16_t a = v4->gens[0], b = v4->gens[1], ab = v4->mulv(a, b);
  std::vector<uint16_t> cyc(4, 0);
  cyc[a] = b;
  cyc[b] = ab;
  cyc[ab] = a;
  CHECK_FALSE(decide_pprime_profinite(v4, ordinary_cover(c3, 2, 1), {cyc}));
  CHECK(decide_pprime_profinite(v4, ordinary_cover(c3, 2, 2), {cyc}));
  CHECK(cross_check_routes(v4, ordinary_cover(c3, 2, 2), {cyc}).solvable);
  CHECK_FALSE(cross_check_routes(v4, ordinary_cover(c3, 2, 1), {cyc}).solvable);

  // trivial action: the direct product only needs the trivial-simple slot
  GroupPtr c2 = cyclic_group(2);
  std::vector<uint16_t> id2 = {0, 1};
  CHECK(decide_pprime_profinite(c2, ordinary_cover(c3, 2, 1), {id2}));
  CHECK(cross_check_routes(c2, ordinary_cover(c3, 2, 1), {id2}).solvable);
  std::vector<uint16_t> id4 = {0, 1, 2, 3};
  CHECK_FALSE(decide_pprime_profinite(v4, ordinary_cover(c3, 2, 1), {id4}));
  CHECK_FALSE(cross_check_routes(v4, ordinary_cover(c3, 2, 1), {id4}).solvable);

  // the route needs prime-to-p order downstairs
  CHECK_THROWS_AS(decide_pprime_profinite(c2, ordinary_cover(c2, 2, 2), {id2}), error);
}

TEST_CASE("problem validation") {
  GroupPtr c2 = cyclic_group(2);
  GroupPtr c4 = cyclic_group(4);
  ExtensionData e42 = make_extension(c4, c2, make_hom(c4, c2, {c2->gens[0]}), 2);
  // wrong group instance behind the cover
  CHECK_THROWS_AS(make_problem(ordinary_cover(cyclic_group(2), 2, 2), e42), error);
  // kernel is a 2-group, cover speaks of p = 3
  CHECK_THROWS_AS(make_problem(ordinary_cover(c2, 3, 2), e42), error);

  Verdict v = decide_strong_solvability(make_problem(ordinary_cover(c2, 2, 2), e42));
  CHECK(v.to_text().find("verdict: strongly solvable") != std::string::npos);
  CHECK(!v.notes.empty());
}
