#pragma once

#include "modrep.hpp"

namespace kani {

// Jacobson radical of F_q[G]: rows are coefficient vectors (indexed by group
// elements) spanning the intersection of the kernels of all simple
// representation maps. Verified nilpotent before returning.
FqMatrix algebra_radical(const GroupPtr& g, const Field& f, const Options& opt = Options());

// dimensions of the projective indecomposables, keyed by the canonical
// simple order, plus radical and Heller-translate bookkeeping for the
// trivial module
struct ProjectiveTable {
  GroupPtr group;
  Field field;
  SimpleSet simples;
  std::vector<std::vector<uint32_t>> idempotents;  // lifted primitive idempotent per simple
  std::vector<uint32_t> proj_dims;                 // dim P(V)
  std::vector<uint32_t> endo_dims;                 // dim End(V)
  uint32_t trivial_index = 0;
  uint32_t rad_dim = 0;
  uint32_t omega1_dim = 0;  // dim of ker(P(k) ->> k)
  uint32_t omega2_dim = 0;  // dim of ker(P(Omega k) ->> Omega k)

  std::string to_text() const;
};

ProjectiveTable projective_table(const GroupPtr& g, const Field& f, const Options& opt = Options());

// P(V) realized inside the regular module as the left ideal generated by the
// lifted idempotent
GModule projective_module(const ProjectiveTable& t, uint32_t index);

// For 1 -> P -> G -> H -> 1 with p-group kernel: checks, for every simple U
// of G, that the fixed-point module P_G(U)^P pushed down to H is P_H(V) when
// U is inflated from V and zero otherwise.
struct FixedPartReport {
  bool ok = true;
  std::vector<std::string> lines;  // one verdict per simple U
};
FixedPartReport verify_fixed_part_of_projectives(const ExtensionData& e, const Field& f,
                                                 const Options& opt = Options());

}  // namespace kani
