#pragma once

// Exact finite-group arithmetic on index-coded multiplication tables.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "npb/error.hpp"

namespace npb {

/// A finite group given by its multiplication table. Elements are the dense
/// indices 0..order-1; the identity is discovered, not assumed to be 0.
/// Copies share the immutable table.
class FiniteGroup {
 public:
  /// Validates a square table: entries in range, identity, Latin square,
  /// two-sided inverses, associativity over all triples. Throws Error naming
  /// the first violating element or triple.
  static FiniteGroup from_table(const std::vector<std::vector<Index>>& table);

  /// Closure of permutation generators on {0..degree-1}. Element 0 is the
  /// identity permutation; the rest appear in breadth-first discovery order.
  /// The product is "apply left factor first": (a*b)(x) = b(a(x)).
  static FiniteGroup from_permutations(const std::vector<std::vector<Index>>& generators,
                                       std::size_t degree, std::size_t max_order = 10000);

  /// Table assembled by a trusted construction (closure under a known
  /// associative product). Checks Latin square and identity only.
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Index> flat);

  std::size_t order() const { return data_->order; }
  Index identity() const { return data_->identity; }
  Index inverse(Index a) const { return data_->inverse[static_cast<std::size_t>(a)]; }
  Index mul(Index a, Index b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + static_cast<std::size_t>(b)];
  }
  /// Row a of the table: b -> a*b.
  std::span<const Index> row(Index a) const {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order, data_->order};
  }
  /// a^-1 b a.
  Index conjugate(Index b, Index a) const { return mul(mul(inverse(a), b), a); }
  Index power(Index a, long long k) const;
  std::size_t element_order(Index a) const;
  bool is_abelian() const;

  /// Permutations the group was generated from, if built by from_permutations.
  const std::vector<std::vector<Index>>& permutations() const { return data_->perms; }

  /// The whole table as rows (for serialization).
  std::vector<std::vector<Index>> table_rows() const;

  bool same_as(const FiniteGroup& other) const { return data_ == other.data_; }
  bool valid_index(Index a) const { return a >= 0 && static_cast<std::size_t>(a) < order(); }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Index> table;
    Index identity = 0;
    std::vector<Index> inverse;
    std::vector<std::vector<Index>> perms;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static std::shared_ptr<Data> build(std::size_t order, std::vector<Index> flat, bool check_assoc);

  std::shared_ptr<const Data> data_;
};

/// A subgroup as a sorted member list of a parent group.
class Subgroup {
 public:
  /// Validates closure, identity and inverses; throws InvalidInput otherwise.
  Subgroup(FiniteGroup parent, std::vector<Index> members);

  static Subgroup whole(const FiniteGroup& g);
  static Subgroup trivial(const FiniteGroup& g);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Index a) const { return mask_[static_cast<std::size_t>(a)] != 0; }
  bool is_subset_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const {
    return parent_.same_as(other.parent_) && members_ == other.members_;
  }

 private:
  struct Trusted {};
  Subgroup(FiniteGroup parent, std::vector<Index> members, Trusted);
  friend Subgroup subgroup_closure(const FiniteGroup&, std::span<const Index>);
  friend Subgroup intersect(const Subgroup&, const Subgroup&);

  FiniteGroup parent_;
  std::vector<Index> members_;
  std::vector<unsigned char> mask_;
};

/// Smallest subgroup containing the generators.
Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Index> generators);
inline Subgroup subgroup_closure(const FiniteGroup& g, std::initializer_list<Index> gens) {
  return subgroup_closure(g, std::span<const Index>(gens.begin(), gens.size()));
}

/// Least g (by index) with g^-1 H g != H, if any.
std::optional<Index> normality_witness(const Subgroup& h);
inline bool is_normal(const Subgroup& h) { return !normality_witness(h).has_value(); }

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Closure of the union of the subgroups.
Subgroup join(const FiniteGroup& g, std::span<const Subgroup> parts);
/// Whether the union of the subgroups generates g.
bool generates(const FiniteGroup& g, std::span<const Subgroup> parts);

/// A validated homomorphism between two finite groups.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Index> map);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  Index operator()(Index a) const { return map_[static_cast<std::size_t>(a)]; }
  const std::vector<Index>& map() const { return map_; }

  Subgroup kernel() const;
  Subgroup image(const Subgroup& h) const;
  bool is_injective() const;
  bool is_surjective() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Index> map_;
};

/// A subgroup as a group in its own right; element k is h.members()[k].
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Index> embedding;
};
EmbeddedGroup as_group(const Subgroup& h);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// representatives[c] = least element of coset c.
  std::vector<Index> representatives;
};

/// G/N on cosets labelled by their least element, ordered by that element.
/// Throws NotNormal with the least conjugating witness.
Quotient quotient(const Subgroup& n);

enum class Side { Right, Left };

/// A group action on {0..points-1}. Stored internally as a right action;
/// left actions are converted through g -> g^-1 and keep their tag.
class FiniteAction {
 public:
  /// act[g][p] is the image of point p under g in the declared convention.
  /// Throws NotAnAction naming the first violating pair of elements.
  FiniteAction(FiniteGroup group, std::size_t points, const std::vector<std::vector<Index>>& act,
               Side side = Side::Right);

  /// Right translation p -> p*h of the parent group on itself by the
  /// subgroup h, acting through as_group(h) (index k is h.members()[k]).
  static FiniteAction right_translation(const Subgroup& h);
  static FiniteAction right_regular(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  std::size_t points() const { return points_; }
  Side side() const { return side_; }
  /// Right-action image p.g.
  Index apply(Index p, Index g) const {
    return right_[static_cast<std::size_t>(g) * points_ + static_cast<std::size_t>(p)];
  }
  /// The permutation p -> p.g.
  std::span<const Index> permutation(Index g) const {
    return {right_.data() + static_cast<std::size_t>(g) * points_, points_};
  }

 private:
  FiniteAction(FiniteGroup group, std::size_t points, std::vector<Index> right, Side side)
      : group_(std::move(group)), points_(points), right_(std::move(right)), side_(side) {}
  FiniteGroup group_;
  std::size_t points_;
  std::vector<Index> right_;
  Side side_;
};

struct ActionReport {
  bool is_free = false;
  Subgroup kernel;
  /// orbit_of[p] = orbit id; orbits numbered by least point.
  std::vector<Index> orbit_of;
  std::vector<std::vector<Index>> orbits;
  /// For a non-free action: least (point, element != e) with p.g = p.
  std::optional<std::pair<Index, Index>> fixed_witness;
};

ActionReport action_check(const FiniteAction& a);

/// Order/abelian/element-order fingerprint used to compare groups in reports.
struct GroupFingerprint {
  std::size_t order;
  bool abelian;
  std::vector<std::size_t> order_histogram;  // index k: elements of order k
  bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const FiniteGroup& g);

/// Some standard groups.
namespace catalog {
FiniteGroup trivial();
FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n; rotations r^k are 0..n-1, reflections s r^k are n..2n-1.
FiniteGroup dihedral(std::size_t n);
/// Quaternion group, elements ordered {1,-1,i,-i,j,-j,k,-k}.
FiniteGroup quaternion();
FiniteGroup symmetric(std::size_t n);
/// Pairs (a,b) indexed a*|H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
}  // namespace catalog

}  // namespace npb
