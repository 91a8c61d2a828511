#pragma once

#include "modrep.hpp"

namespace kani {

// Group cohomology with coefficients in a finite module, by exact linear
// algebra over the coefficient field. h1/h2 work on the bar complex cut down
// to generator equations: a normalized cochain satisfying the cocycle
// identity for every (generator, element, element) triple satisfies it for
// all triples, by induction along words.

uint32_t h0(const GModule& M);
uint32_t h1(const GModule& M, const Options& opt = Options());
uint32_t h2(const GModule& M, const Options& opt = Options());

// normalized 2-cocycle on H with values in the module; vals is indexed
// (a*n + b)*dim + i with zero rows whenever a or b is the identity
struct TwoCocycle {
  GModule mod;
  std::vector<uint32_t> vals;

  std::vector<uint32_t> value(uint16_t a, uint16_t b) const;
};

TwoCocycle zero_cocycle(const GModule& M);
// full normalization + cocycle identity check over all triples
bool cocycle_valid(const TwoCocycle& f);
TwoCocycle cocycle_diff(const TwoCocycle& a, const TwoCocycle& b);

// class of 1 -> K -> G -> H -> 1 in the kernel chart coordinates, via the
// section picking the preimage with the least (word length, word, index)
TwoCocycle extension_class(const ExtensionData& e);

// is f a coboundary: dc = f solvable for a normalized 1-cochain c
bool is_trivial_class(const TwoCocycle& f, const Options& opt = Options());

// the group K x|_f H on pairs (v, h), product (x,a)(y,b) = (x + a.y + f(a,b), ab),
// element index v*|H| + h; comes back with projection, kernel and chart set
ExtensionData extension_from_cocycle(const TwoCocycle& f, const Options& opt = Options());

}  // namespace kani
