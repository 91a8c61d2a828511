#pragma once

#include "embedding.hpp"

namespace kani {

// group shortcuts (C<n>, S<n> up to 5, A4, D4, Q8, V4) and explicit
// permutation generators: "perm: (0 1)(2 3); (4 5)"
GroupPtr group_from_ref(const std::string& ref, const Options& opt = Options());

// Problem files, line oriented:
//   cover     { group = C2  p = 2  g_X = 1  delta = ordinary }   (or [d0, d1, ...])
//   extension { total = C4  images = [h0] }                       (quotient form)
//   extension { module = simple0  cocycle = zero }                (cocycle form)
//   options   { seed = 0  field_cap = 12  group_cap = 2000 }
// '#' starts a comment. Images are words in the base group's generators
// (h0, h1*h0, e) or raw element indices (@3). Errors carry line and column.
struct ParsedProblem {
  EmbeddingProblem problem;
  Options options;
};
ParsedProblem parse_problem(const std::string& text, const Options& defaults = Options());

// one command's output in both shapes plus the process exit code
// (0 solved / 1 not solved for decide, 0 otherwise; 2 on any error)
struct Report {
  std::string human;
  std::string machine;
  int exit_code = 0;
};

Report run_simples(const std::string& groupref, uint32_t p, const Options& opt = Options());
Report run_cohom(const std::string& groupref, uint32_t p, const std::string& moduleref,
                 const Options& opt = Options());
Report run_decide(const std::string& problem_text, bool with_trace, const Options& defaults = Options());
Report run_reduce(const std::string& problem_text, const Options& defaults = Options());
Report run_selftest(const Options& opt = Options());

}  // namespace kani
