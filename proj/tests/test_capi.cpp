#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "kani.h"

TEST_CASE("version and group handles") {
  CHECK(kani_version() != nullptr);
  kani_group* g = kani_group_from_text("S3", nullptr);
  REQUIRE(g != nullptr);
  CHECK(kani_group_order(g) == 6);
  CHECK(kani_group_is_abelian(g) == 0);
  kani_group_free(g);

  kani_group* c = kani_group_from_text("perm: (0 1 2 3)", nullptr);
  REQUIRE(c != nullptr);
  CHECK(kani_group_order(c) == 4);
  CHECK(kani_group_is_abelian(c) == 1);
  kani_group_free(c);

  CHECK(kani_group_from_text("nope", nullptr) == nullptr);
  CHECK(kani_last_error() != nullptr);
  CHECK(kani_group_is_abelian(nullptr) == -1);
  CHECK(kani_group_order(nullptr) == 0);
}

TEST_CASE("simples and cohom through the interface") {
  kani_result* r = kani_run_simples("C3", 2, "{\"seed\": 0}");
  REQUIRE(r != nullptr);
  CHECK(kani_result_exit_code(r) == 0);
  CHECK(std::string(kani_result_human(r)).find("order 3") != std::string::npos);
  CHECK(kani_result_machine(r)[0] == '{');
  kani_result_free(r);

  kani_result* ch = kani_run_cohom("C2", 2, "trivial", nullptr);
  REQUIRE(ch != nullptr);
  CHECK(kani_result_exit_code(ch) == 0);
  CHECK(std::string(kani_result_human(ch)).find("h1 = 1") != std::string::npos);
  kani_result_free(ch);

  // engine-level error comes back as a result with exit 2, not NULL
  kani_result* bad = kani_run_simples("C3", 4, nullptr);
  REQUIRE(bad != nullptr);
  CHECK(kani_result_exit_code(bad) == 2);
  kani_result_free(bad);

  // interface-level errors return NULL with a message
  CHECK(kani_run_simples(nullptr, 2, nullptr) == nullptr);
  CHECK(kani_last_error() != nullptr);
  CHECK(kani_run_simples("C3", 2, "{\"wat\": 1}") == nullptr);
  CHECK(std::string(kani_last_error()).find("unknown option") != std::string::npos);
}

TEST_CASE("decide and reduce through the interface") {
  const char* text =
      "cover { group = C1  p = 2  g_X = 2  delta = ordinary }\n"
      "extension { total = V4  images = [e, e] }\n";
  kani_result* r = kani_run_decide(text, 1, nullptr);
  REQUIRE(r != nullptr);
  CHECK(kani_result_exit_code(r) == 0);
  CHECK(std::string(kani_result_human(r)).find("strongly solvable") != std::string::npos);
  kani_result_free(r);

  const char* blocked =
      "cover { group = C1  p = 2  g_X = 1  delta = ordinary }\n"
      "extension { total = V4  images = [e, e] }\n";
  kani_result* b = kani_run_decide(blocked, 0, nullptr);
  REQUIRE(b != nullptr);
  CHECK(kani_result_exit_code(b) == 1);
  kani_result_free(b);

  kani_result* broken = kani_run_decide("cover {", 0, nullptr);
  REQUIRE(broken != nullptr);
  CHECK(kani_result_exit_code(broken) == 2);
  CHECK(std::string(kani_result_human(broken)).find("parse error") != std::string::npos);
  kani_result_free(broken);

  kani_result* red = kani_run_reduce(text, nullptr);
  REQUIRE(red != nullptr);
  CHECK(kani_result_exit_code(red) == 0);
  CHECK(std::string(kani_result_human(red)).find("base case") != std::string::npos);
  kani_result_free(red);
}
