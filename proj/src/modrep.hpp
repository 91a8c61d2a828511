#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ff.hpp"
#include "group.hpp"

namespace kani {

// A finite-dimensional left k[G]-module, stored as one invertible matrix per
// group generator. Vectors are coordinate rows v acted on by g as rho(g).v
// (so subspace bases spin with the transposed generator matrices). The
// constructor verifies invertibility and, within a cost budget, that the
// assignment respects the multiplication table.
struct GModule {
  GroupPtr group;
  Field field;
  uint32_t dim = 0;
  std::vector<FqMatrix> gen_mats;

  static GModule make(GroupPtr g, Field f, uint32_t dim, std::vector<FqMatrix> mats, bool verify = true);
  static GModule trivial(GroupPtr g, Field f, uint32_t dim = 1);
};

FqMatrix element_matrix(const GModule& M, uint16_t g);
GModule regular_module(const GroupPtr& g, const Field& f);

// rho(g).v and rho(g)^T.v for coordinate rows
std::vector<uint32_t> apply_element(const GModule& M, uint16_t g, const std::vector<uint32_t>& v);
std::vector<uint32_t> apply_gen(const GModule& M, size_t gen_idx, const std::vector<uint32_t>& v);
std::vector<uint32_t> apply_gen_T(const GModule& M, size_t gen_idx, const std::vector<uint32_t>& v);

// echelonized basis of the smallest invariant subspace containing the seeds
FqMatrix spin(const GModule& M, const std::vector<std::vector<uint32_t>>& seeds);

struct MeataxeResult {
  bool irreducible = false;
  // on reducible: rows span a proper nonzero invariant subspace
  FqMatrix invariant_subspace;
  uint32_t attempts_used = 0;
};

// Norton-style irreducibility test, deterministic given the seed. A verdict
// is always produced: random singular algebra elements are tried first, then
// a systematic sweep; certification requires every kernel vector (up to
// scalar) to spin onto the module and one transpose-kernel vector to spin
// onto the dual.
MeataxeResult meataxe_is_irreducible(const GModule& M, uint64_t seed, uint32_t retry_budget = 200);

std::vector<GModule> composition_factors(const GModule& M, uint64_t seed);

// submodule given by independent spanning rows; quotient by the same
GModule submodule_module(const GModule& M, const FqMatrix& basis_rows);
GModule quotient_module(const GModule& M, const FqMatrix& basis_rows);
GModule direct_sum(const GModule& A, const GModule& B);
GModule dual_module(const GModule& M);

// Hom_{k[G]}(A, B) as matrices T with rho_A(g) T = T rho_B(g); rows of the
// result enumerate a basis, each flattened row-major to dim_A * dim_B.
std::vector<FqMatrix> hom_space(const GModule& A, const GModule& B);
uint32_t endo_dim(const GModule& M);

// explicit isomorphism search over the Hom space (full enumeration over
// small scalar fields, seeded sampling beyond)
std::optional<FqMatrix> are_isomorphic(const GModule& A, const GModule& B, uint64_t seed = 0);

// complete list of simple k[G]-modules in canonical order: by dimension,
// then by the least serialized generator-matrix tuple over spin bases from
// every seed vector
struct SimpleSet {
  GroupPtr group;
  Field field;
  std::vector<GModule> simples;
  std::vector<std::vector<uint32_t>> canonical_keys;

  uint32_t size() const { return uint32_t(simples.size()); }
  // index of the member isomorphic to M, errc::domain if none
  uint32_t index_of(const GModule& M, uint64_t seed = 0) const;
};
SimpleSet simple_modules(const GroupPtr& g, const Field& f, uint64_t seed = 0);

std::vector<uint32_t> canonical_key(const GModule& simple);

// least m <= cap with every simple F_{p^m}[G]-module absolutely irreducible,
// certified by recomputation (dim End = 1 for each simple)
uint32_t splitting_field_degree(const GroupPtr& g, uint32_t p, uint32_t cap = Options().field_cap,
                                uint64_t seed = 0);

GModule inflate(const GModule& V_over_H, const GroupHom& q);  // q: G ->> H

// fixed points M^P as a module over G/P (P normal, acting trivially on it)
GModule fixed_point_module(const GModule& M, const Subgroup& P, const GroupHom& q);

// base change of a simple F_p-module to F_{p^m} and its simple summands;
// errc::anomaly if any summand repeats (multiplicity must be 1)
std::vector<GModule> decompose_over_extension(const GModule& simple_over_prime, const Field& target,
                                              uint64_t seed = 0);

// does the F_{p^m}-simple V appear in the base change of the F_p-simple W?
bool divides(const GModule& V, const GModule& W, uint64_t seed = 0);

// identification of an elementary abelian kernel with F_p^d plus the
// conjugation module of H on it
struct KernelChart {
  GModule mod;                        // over F_p, dim d, group H
  std::vector<uint16_t> basis_elts;   // images of the standard basis in G
  std::vector<uint16_t> vec_to_elt;   // p^d entries: packed vector -> element of G
  std::vector<uint32_t> elt_to_vec;   // per G element: packed vector or ~0u
};
std::shared_ptr<const KernelChart> kernel_chart(const ExtensionData& e, uint32_t p);

// text form: header "module dim=<d> field=p^m" then one matrix block per generator
std::string module_to_text(const GModule& M);
GModule module_from_text(const GroupPtr& g, const std::string& text);

}  // namespace kani
