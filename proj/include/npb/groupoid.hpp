#pragma once

// Finite groupoids, gauge groupoids (P x P)/G, group actions on groupoids,
// quotient groupoids and the split presentation of a G-groupoid.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "npb/group.hpp"

namespace npb {

/// A finite groupoid with arrows 0..arrows-1 over objects 0..objects-1.
/// An arrow g goes from src(g) to tgt(g); g*h is defined iff src(g) == tgt(h).
class FiniteGroupoid {
 public:
  struct MulEntry {
    Index g, h, gh;
  };

  /// Validates every groupoid axiom; throws NotAGroupoid naming the failure.
  FiniteGroupoid(std::size_t objects, std::vector<Index> src, std::vector<Index> tgt,
                 std::vector<Index> unit, std::vector<Index> inv, const std::vector<MulEntry>& mul);

  /// Pair groupoid on n objects; arrow (x,y) from y to x has index x*n + y.
  static FiniteGroupoid pair(std::size_t n);
  /// One-object groupoid with arrow group g.
  static FiniteGroupoid from_group(const FiniteGroup& g);

  std::size_t objects() const { return objects_; }
  std::size_t arrows() const { return src_.size(); }
  Index src(Index a) const { return src_[static_cast<std::size_t>(a)]; }
  Index tgt(Index a) const { return tgt_[static_cast<std::size_t>(a)]; }
  Index unit(Index x) const { return unit_[static_cast<std::size_t>(x)]; }
  Index inv(Index a) const { return inv_[static_cast<std::size_t>(a)]; }
  bool composable(Index g, Index h) const { return src(g) == tgt(h); }
  /// g*h; throws InvalidInput if not composable.
  Index mul(Index g, Index h) const;
  /// Arrows with the given target (candidates h for g*h).
  const std::vector<Index>& arrows_into(Index x) const { return into_[static_cast<std::size_t>(x)]; }
  /// Every composable product, ordered by (g, h).
  std::vector<MulEntry> mul_entries() const;

 private:
  static std::uint64_t key(Index g, Index h) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(h);
  }
  std::size_t objects_;
  std::vector<Index> src_, tgt_, unit_, inv_;
  std::unordered_map<std::uint64_t, Index> mul_;
  std::vector<std::vector<Index>> into_;
};

/// A right action of a finite group on the arrows of a groupoid.
class GroupoidAction {
 public:
  /// act[g][a] = a.g. Throws NotAnAction if not a bijective right action.
  GroupoidAction(FiniteGroupoid groupoid, FiniteGroup group, const std::vector<std::vector<Index>>& act);

  const FiniteGroupoid& groupoid() const { return groupoid_; }
  const FiniteGroup& group() const { return group_; }
  Index apply(Index arrow, Index g) const {
    return act_[static_cast<std::size_t>(g) * groupoid_.arrows() + static_cast<std::size_t>(arrow)];
  }
  std::vector<std::vector<Index>> rows() const;

 private:
  FiniteGroupoid groupoid_;
  FiniteGroup group_;
  std::vector<Index> act_;
};

struct CompatReport {
  bool compatible = false;
  /// Elements acting trivially on every arrow.
  Subgroup kernel;
  /// The action of G/kernel on arrows is free (properness is automatic here).
  bool pre_principal = false;
  /// Induced action on objects; present iff compatible.
  std::optional<FiniteAction> object_action;
  /// G/kernel acts freely on objects. Agrees with pre_principal when compatible.
  bool free_on_objects_mod_kernel = false;
  /// First failing check, e.g. "element 3 does not preserve composition of (5,2)".
  std::string failure;
};

/// Each a -> a.g must be a groupoid automorphism covering some permutation
/// of the objects (not necessarily the identity).
CompatReport check_compatible(const GroupoidAction& ga);

struct GaugeGroupoid {
  FiniteGroupoid groupoid;
  /// arrow_of[p * |P| + q] = <p,q>.
  std::vector<Index> arrow_of;
  /// Least (p,q) of each orbit; arrows are numbered in this order.
  std::vector<std::pair<Index, Index>> representative;
  /// Orbit map P -> P/G; objects numbered by least point.
  std::vector<Index> object_of;
  Index label(Index p, Index q) const {
    return arrow_of[static_cast<std::size_t>(p) * object_of.size() + static_cast<std::size_t>(q)];
  }
};

/// (P x P)/G with <p,q><q,r> = <p,r>, src<p,q> = [q], tgt<p,q> = [p].
/// Throws ActionNotFree naming a fixed point.
GaugeGroupoid gauge_groupoid(const FiniteAction& a);

/// The action <p,q>.h = <p.h, q.h> of another group on the gauge groupoid of
/// a. Returns the failing (arrow, element) when it is not well defined.
struct InducedGaugeAction {
  std::optional<GroupoidAction> action;
  std::string failure;
};
InducedGaugeAction induced_gauge_action(const GaugeGroupoid& gauge, const FiniteAction& other);

struct QuotientGroupoid {
  FiniteGroupoid groupoid;
  /// pi: arrows -> arrows of the quotient.
  std::vector<Index> arrow_map;
  /// p: objects -> objects of the quotient.
  std::vector<Index> object_map;
};

/// G-orbits of arrows and objects with the induced structure. Requires a
/// compatible pre-principal action (free modulo its kernel). Verifies that
/// (pi, p) is a groupoid morphism.
QuotientGroupoid quotient_groupoid(const GroupoidAction& ga);

struct SplitPresentation {
  QuotientGroupoid quotient;
  /// Induced G-action on the objects M.
  FiniteAction units_bundle;
  /// Fiber product {(y0, x) : p(x) = src(y0)} in (y0, x) lexicographic order.
  std::vector<std::pair<Index, Index>> fiber_product;
  /// S(y) = (pi(y), s(y)) as an index into fiber_product.
  std::vector<Index> S;
  /// t_action[y0 * |M| + x] = y0.x, or -1 outside the fiber product.
  std::vector<Index> t_action;
  Index act(Index y0, Index x) const {
    return t_action[static_cast<std::size_t>(y0) * units_bundle.points() + static_cast<std::size_t>(x)];
  }
};

/// Builds S, checks it is a bijection onto the fiber product, extracts
/// y0.x := t(S^-1(y0, x)) and checks properties (i)-(iv) pointwise.
/// Throws SplitFailure naming the violated property and its witnesses.
SplitPresentation split(const GroupoidAction& ga);

/// Identification of the objects with M0 x G: object x <-> (base[x], coord[x])
/// with (m0, g).h = (m0, g h).
struct Trivialization {
  std::vector<Index> base;
  std::vector<Index> coord;
};

/// Uses the least object of each orbit as the section. Requires G to act
/// freely on objects; throws NotTrivialized otherwise.
Trivialization canonical_trivialization(const SplitPresentation& sp);

struct MultiplicativeFunction {
  FiniteGroupoid base;
  FiniteGroup group;
  /// b[y0] in G.
  std::vector<Index> b;
};

/// Reads b off y0.(src(y0), g) = (tgt(y0), b(y0) g) and checks
/// b(y0) b(y0') = b(y0 y0') on all composable pairs. Throws NotTrivialized or
/// NotMultiplicative with a witness.
MultiplicativeFunction multiplicative_function(const SplitPresentation& sp, const Trivialization& triv);
MultiplicativeFunction multiplicative_function(const SplitPresentation& sp);

struct TrivialGGroupoid {
  GroupoidAction action;
  /// Objects (x0, g) are numbered x0 * |G| + g; arrows (y0, g) likewise.
  Trivialization trivialization;
};

/// G0 x^b G: s(y0,g) = (src y0, g), t(y0,g) = (tgt y0, b(y0) g),
/// (y0,g1)(y0',g2) = (y0 y0', g2), with G acting on the second factor.
/// Throws NotMultiplicative if b is not a groupoid morphism.
TrivialGGroupoid build_from_morphism(const MultiplicativeFunction& mf);

/// Checks that arrow_map/object_map form an isomorphism of G-groupoids
/// between two actions of the same group. Returns the first failure.
std::optional<std::string> check_g_isomorphism(const GroupoidAction& a, const GroupoidAction& b,
                                               const std::vector<Index>& arrow_map,
                                               const std::vector<Index>& object_map);

/// The canonical isomorphism y -> (pi(y), coord(s(y))) from ga to
/// build_from_morphism(multiplicative_function(split(ga))). Returns the first
/// failure, or nullopt when it is an isomorphism.
std::optional<std::string> check_split_round_trip(const GroupoidAction& ga);

}  // namespace npb
