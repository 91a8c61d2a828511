#pragma once

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"

namespace kani {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;
struct TwoCocycle;  // defined with the cohomology routines

// A finite group as a full multiplication table. Element 0 is the identity.
// Every element carries a word in the generators (breadth-first shortest in
// generator order); all construction paths verify the table axioms before
// the group is released, and groups are immutable afterwards.
struct FiniteGroup {
  uint32_t n = 0;
  std::vector<uint16_t> mul;   // n*n, mul[a*n+b] = a.b
  std::vector<uint16_t> inv;   // n
  std::vector<uint16_t> gens;  // generator element indices, fixed order
  std::vector<std::vector<uint16_t>> words;  // per element, generator indices
  std::vector<std::string> labels;           // optional, same length as n or empty

  uint16_t mulv(uint16_t a, uint16_t b) const { return mul[size_t(a) * n + b]; }
  uint16_t conj(uint16_t g, uint16_t x) const { return mulv(mulv(g, x), inv[g]); }
  uint32_t element_order(uint16_t a) const;
  bool is_abelian() const;
  std::string describe() const;  // "order 12" plus labels when present
};

struct GroupHom {
  GroupPtr src, dst;
  std::vector<uint16_t> images;  // per src element

  uint16_t operator()(uint16_t a) const { return images[a]; }
};

struct Subgroup {
  GroupPtr parent;
  std::vector<uint16_t> members;  // sorted, contains 0

  uint32_t order() const { return uint32_t(members.size()); }
  bool contains(uint16_t x) const;
};

struct KernelChart;  // modrep.hpp: identifies an elementary abelian kernel with F_p^d

// Extension 1 -> kernel -> G -> H -> 1 presented by the projection q.
struct ExtensionData {
  GroupPtr G, H;
  Subgroup kernel;
  GroupHom q;  // surjective, kernel as stated
  std::shared_ptr<const KernelChart> chart;       // optional
  std::shared_ptr<const TwoCocycle> cocycle;      // optional, when built from one
};

// permutations act on 0-based points internally; one-line images
using Perm = std::vector<uint16_t>;

GroupPtr from_permutations(const std::vector<Perm>& gens, uint32_t closure_cap = Options().closure_cap);
// full table, identity at index 0; inverses are found and axioms verified
GroupPtr group_from_table(uint32_t n, std::vector<uint16_t> mul, std::vector<uint16_t> gens);
GroupPtr trivial_group();
GroupPtr cyclic_group(uint32_t n);
GroupPtr symmetric_group(uint32_t n);  // n <= 5
GroupPtr dihedral8();
GroupPtr quaternion8();
GroupPtr alternating4();
GroupPtr klein4();

GroupHom make_hom(const GroupPtr& src, const GroupPtr& dst, const std::vector<uint16_t>& gen_images);
GroupHom identity_hom(const GroupPtr& g);
GroupHom compose(const GroupHom& second, const GroupHom& first);  // second(first(x))

Subgroup subgroup_generated(const GroupPtr& g, std::vector<uint16_t> seeds);
Subgroup normal_closure(const GroupPtr& g, const std::vector<uint16_t>& seeds);
bool is_normal(const Subgroup& s);

struct QuotientResult {
  GroupPtr quotient;
  GroupHom proj;
};
QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n, uint32_t group_cap = Options().group_cap);

Subgroup kernel_of(const GroupHom& h);
bool is_epimorphism(const GroupHom& h);
bool is_p_group(const FiniteGroup& g, uint32_t p);
bool is_p_prime(const FiniteGroup& g, uint32_t p);  // p does not divide |g|

// Frattini subgroup of a p-group together with the minimal generator count
// d(P) = log_p [P : Phi(P)].
struct FrattiniResult {
  Subgroup phi;
  uint32_t d;
};
FrattiniResult frattini_of_p_group(const GroupPtr& pgrp, uint32_t p);

// Semidirect product P x| H. The action maps each generator of H to an
// automorphism of P given as a permutation of P's elements; the assignment
// must extend to a homomorphism H -> Aut(P), which is verified on the full
// table. Trivial action gives the direct product.
struct SemidirectResult {
  GroupPtr G;
  GroupHom incl;  // P -> G
  GroupHom proj;  // G -> H
};
SemidirectResult semidirect_product(const GroupPtr& P, const GroupPtr& H,
                                    const std::vector<std::vector<uint16_t>>& action_on_gens,
                                    uint32_t group_cap = Options().group_cap);

// all automorphisms of a small group, as element permutations (deterministic order)
std::vector<std::vector<uint16_t>> automorphisms(const GroupPtr& g);

ExtensionData make_extension(const GroupPtr& G, const GroupPtr& H, const GroupHom& q, uint32_t p);

// test/oracle helper: group isomorphism by generator-image backtracking
bool groups_isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace kani
