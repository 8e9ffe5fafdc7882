#pragma once

// Automorphisms of n-tuple vector spaces and double affine spaces, their
// distinguished subgroups, and brute-force enumeration over F_p.

#include <map>
#include <random>
#include <vector>

#include "npb/graded.hpp"
#include "npb/group.hpp"
#include "npb/principal.hpp"

namespace npb {

/// An invertible weight-preserving map of a multi signature without base
/// coordinates: the component of multi-degree sigma only has monomials whose
/// factors' degrees sum to sigma.
struct NVectAutomorphism {
  PolyMap map;
  PolyMap inverse;
};

struct AutTerm {
  std::size_t target;
  Exponents exponents;
  Scalar coef;
};

/// Validates the shape (IllegalMonomial names the first bad slot) and
/// inverts (NotInvertible names the singular block).
NVectAutomorphism make_automorphism(const PolyMap& map);
NVectAutomorphism make_automorphism(const GradedSignature& sig, Field field, const std::vector<AutTerm>& terms);
/// a o b.
NVectAutomorphism compose(const NVectAutomorphism& a, const NVectAutomorphism& b);

/// Every linear block is the identity (the remaining terms are products).
bool is_statomorphism(const NVectAutomorphism& a);
/// The block of degree e_i (1-based i) is mapped by the identity.
bool gi_membership(const NVectAutomorphism& a, std::size_t i);

/// One coefficient slot of the legal shape.
struct AutSlot {
  std::size_t target;
  Exponents exponents;
  bool linear;
};
std::vector<AutSlot> automorphism_slots(const GradedSignature& sig);

/// Aut over F_p as a finite group. The product is composition: a*b = a o b.
struct AutGroup {
  GradedSignature sig;
  Field field;
  FiniteGroup group;
  /// elements[k] is group element k, in lexicographic order of slot values.
  std::vector<NVectAutomorphism> elements;
  std::vector<AutSlot> slots;
  /// Size of the coefficient grid p^slots.
  std::size_t candidates = 0;
  /// Group index per grid position, -1 for filtered candidates.
  std::vector<Index> by_candidate;
  /// Grid position of a map of the legal shape; throws IllegalMonomial otherwise.
  std::size_t candidate_of(const PolyMap& map) const;
  /// Index of an automorphism; throws InvalidInput if it is not in the store.
  Index index_of(const PolyMap& map) const;
};

/// Fills the coefficient grid, keeps the maps with invertible linear blocks,
/// and asserts closure while building the table. Throws
/// EnumerationCapExceeded when p^slots > max_candidates or the group is
/// larger than max_order.
AutGroup enumerate_aut(const GradedSignature& sig, Field field, std::size_t max_candidates = 1000000,
                       std::size_t max_order = 4096);

struct P54Report {
  AutGroup aut;
  /// G^1..G^n.
  std::vector<Subgroup> gi;
  /// Order of the intersection of G^i over the bits of each mask 1..2^n-1.
  std::map<unsigned, std::size_t> intersection_orders;
  Subgroup statomorphisms;
  bool statomorphisms_normal = false;
  bool statomorphisms_in_core = false;
  /// Every e_i component only has degree e_i monomials.
  bool linear_in_factors = false;
  /// Every G^i is normal (conjugation stable) and closed.
  bool gi_normal = false;
  NTupleWitness witness;
};
P54Report verify_p54(const GradedSignature& sig, Field field, std::size_t max_candidates = 1000000,
                     std::size_t max_order = 4096);

/// Random automorphism (symbolic mode; use over Q).
NVectAutomorphism random_automorphism(const GradedSignature& sig, Field field, std::mt19937_64& rng,
                                      std::size_t max_terms = 3);

/// Affine automorphism: the component of degree sigma may also contain
/// monomials of every degree tau <= sigma, including constants.
struct AffineAutomorphism {
  PolyMap map;
  PolyMap inverse;
};
AffineAutomorphism make_affine_automorphism(const PolyMap& map);
AffineAutomorphism make_affine_automorphism(const GradedSignature& sig, Field field,
                                            const std::vector<AutTerm>& terms);
AffineAutomorphism compose(const AffineAutomorphism& a, const AffineAutomorphism& b);
/// Drops every monomial below the degree of its component.
NVectAutomorphism linear_part(const AffineAutomorphism& a);
/// linear_part(a o b) == linear_part(a) o linear_part(b).
bool linear_part_is_multiplicative(const AffineAutomorphism& a, const AffineAutomorphism& b);
AffineAutomorphism random_affine_automorphism(const GradedSignature& sig, Field field, std::mt19937_64& rng,
                                              std::size_t max_terms = 3);

}  // namespace npb
