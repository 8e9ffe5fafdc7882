#pragma once

// Transition data over abstract cover nerves: cocycle laws, associated and
// frame cocycles, coboundary search, and the second-order tangent law.

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "npb/aut.hpp"
#include "npb/group.hpp"

namespace npb {

/// Charts 0..n-1 with symmetric, reflexive pair overlaps and triple overlaps.
class CoverNerve {
 public:
  /// Pairs and triples in any order; throws InvalidInput for out-of-range
  /// charts or a triple whose pairs do not overlap.
  CoverNerve(std::size_t charts, std::vector<std::pair<std::size_t, std::size_t>> overlaps,
             std::vector<std::array<std::size_t, 3>> triples = {});
  /// Empty nerve without charts (a placeholder).
  CoverNerve() = default;
  /// Every pair and triple overlaps.
  static CoverNerve full(std::size_t charts);

  std::size_t charts() const { return charts_; }
  bool overlaps(std::size_t i, std::size_t j) const;
  bool has_triple(std::size_t i, std::size_t j, std::size_t k) const;
  /// Sorted pairs i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }
  /// Sorted triples i < j < k.
  const std::vector<std::array<std::size_t, 3>>& triples() const { return triples_; }

 private:
  std::size_t charts_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::array<std::size_t, 3>> triples_;
};

/// Values g_ij for every ordered overlapping pair, the diagonal included.
template <class T>
struct Cocycle {
  CoverNerve nerve;
  std::map<std::pair<std::size_t, std::size_t>, T> values;

  const T& at(std::size_t i, std::size_t j) const {
    auto it = values.find({i, j});
    if (it == values.end())
      throw Error(ErrorKind::InvalidInput, "no value on (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
  }
};

/// A permutation of a finite fiber; products compose as maps, (a*b)(x) = a(b(x)).
using Perm = std::vector<Index>;

struct CocycleCheck {
  bool valid = true;
  /// "missing", "identity", "inverse" or "triple".
  std::string law;
  std::vector<std::size_t> witness;
  std::string message() const;
};

CocycleCheck check_cocycle(const Cocycle<Index>& c, const FiniteGroup& g);
CocycleCheck check_cocycle(const Cocycle<Perm>& c);
CocycleCheck check_cocycle(const Cocycle<PolyMap>& c);
CocycleCheck check_cocycle(const Cocycle<NVectAutomorphism>& c);

/// Fills g_ii = e and g_ji = g_ij^-1 from values on pairs i < j; pairs
/// without a value get e.
Cocycle<Index> group_cocycle(const CoverNerve& nerve, const FiniteGroup& g,
                             const std::map<std::pair<std::size_t, std::size_t>, Index>& upper);
Cocycle<NVectAutomorphism> aut_cocycle(const CoverNerve& nerve,
                                       const std::map<std::pair<std::size_t, std::size_t>, NVectAutomorphism>& upper);

/// Random valid cocycle: pairs inside a triple get h_i h_j^-1, the others
/// are uniform.
Cocycle<Index> random_cocycle(const CoverNerve& nerve, const FiniteGroup& g, std::mt19937_64& rng);

/// A Gamma-action on a finite fiber M with two projections (labels per point).
struct FiberedSpace {
  FiniteAction action;
  std::vector<Index> rho;
  std::vector<Index> rho_prime;
};

struct AssociatedBundle {
  /// Fiber transitions g.p (the left form of the action).
  Cocycle<Perm> fiber;
  /// Induced transitions on M/rho and M/rho', points numbered by least member.
  Cocycle<Perm> quotient;
  Cocycle<Perm> quotient_prime;
  /// Transitions on M0 = M modulo both projections, reached through either side.
  Cocycle<Perm> core;
  bool corners_commute = false;
  bool core_trivial = false;
  CocycleCheck fiber_check, quotient_check, quotient_prime_check;
};

/// Aut acting on the points of F_p^coords by evaluation (point index
/// sum_c v_c p^c), fibered over the blocks of degree e_1 and e_2.
/// Needs n >= 2 and at most max_points points.
FiberedSpace standard_fibered_space(const AutGroup& aut, std::size_t max_points = 100000);

/// Throws ActionIncompatibleWithFibration if some element does not descend
/// to a projection, NotACocycle for an invalid input. With tau, values are
/// pushed through tau and the action is of tau's target.
AssociatedBundle associated_cocycle(const Cocycle<Index>& c, const FiberedSpace& m, const GroupHom* tau = nullptr);

/// Transitions of an n-tuple vector bundle and of its n side bundles (the
/// blocks of degree e_i, each as a vector space of its own).
struct VectorBundleCocycle {
  Cocycle<PolyMap> total;
  std::vector<Cocycle<PolyMap>> sides;
  CocycleCheck total_check;
  std::vector<CocycleCheck> side_checks;
};

VectorBundleCocycle associated_cocycle(const Cocycle<NVectAutomorphism>& c);
VectorBundleCocycle associated_cocycle(const Cocycle<Index>& c, const AutGroup& aut);

/// The same transitions as a principal Aut-cocycle. Throws NotACocycle for
/// invalid input and IllegalMonomial / NotInvertible for bad values.
Cocycle<NVectAutomorphism> frame_cocycle(const Cocycle<PolyMap>& dvb);
/// Values as indices of the enumerated group.
Cocycle<Index> frame_cocycle(const Cocycle<PolyMap>& dvb, const AutGroup& aut);

struct CohomologyResult {
  bool cohomologous = false;
  /// g'_ij = lambda_i g_ij lambda_j^-1 when cohomologous.
  std::vector<Index> lambda;
  /// Root choices tried (one free chart per connected component).
  std::size_t families_examined = 0;
};

/// Exhaustive coboundary search. Throws SearchCapExceeded when
/// |G|^charts > max_families.
CohomologyResult are_cohomologous(const Cocycle<Index>& c1, const Cocycle<Index>& c2, const FiniteGroup& g,
                                  std::size_t max_families = 1000000);

/// Signature of T^2 over m coordinates: base x, then xdot (weight 1), then xddot (weight 2).
GradedSignature t2_signature(std::size_t m);
/// Transition of T^2 induced by the chart change x' = f(x):
///   xdot'  = (df/dx) xdot
///   xddot' = (df/dx) xddot + (d^2 f/dx dx)(xdot, xdot).
/// Throws NotInvertibleChart if df/dx(0) is singular.
PolyMap t2_transition(const std::vector<Polynomial>& chart_change);
/// Every component of positive weight is linear in the positive-weight coordinates.
bool is_fiber_linear(const PolyMap& m);

}  // namespace npb
