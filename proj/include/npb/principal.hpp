#pragma once

// Double and n-tuple principal groups, dressing actions, the semidirect
// product G' x| G, and the construction of Gamma from two commuting-up-to-
// dressing principal actions on a finite set.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "npb/group.hpp"
#include "npb/groupoid.hpp"

namespace npb {

/// (Gamma; G, G') with both normal and jointly generating.
struct DoublePrincipalGroup {
  FiniteGroup gamma;
  Subgroup g1, g2;
  /// G0 = G n G'.
  Subgroup core;
  /// [G] = G/G0 and [G'] = G'/G0.
  FiniteGroup q1, q2;
};

struct Violation {
  ErrorKind kind;  // NotNormal or NotGenerating
  /// 1-based position of the offending subgroup, 0 for generation.
  int subgroup;
  /// Least conjugating element, or least element missed by the join.
  Index witness;
  std::string message;
};

struct DoubleVerdict {
  std::optional<DoublePrincipalGroup> dpg;
  std::optional<Violation> violation;
  bool ok() const { return dpg.has_value(); }
};

DoubleVerdict verify_double(const Subgroup& g1, const Subgroup& g2);
/// Throws the violation as an Error.
DoublePrincipalGroup make_double(const Subgroup& g1, const Subgroup& g2);

/// One node of the recursive n-tuple check. The ambient group of a sub-system
/// is a subgroup of the original Gamma; everything stays in Gamma's indices.
struct NTupleNode {
  /// Chosen i at each level (1-based), empty at the root.
  std::vector<int> path;
  Subgroup ambient;
  std::vector<Subgroup> subgroups;
  bool ok = false;
  std::optional<Violation> violation;
  /// e.g. "(G1; G2nG1, G3nG1)".
  std::string label;
};

struct NTupleWitness {
  FiniteGroup gamma;
  std::vector<Subgroup> subgroups;
  bool verdict = false;
  /// Pre-order listing of every sub-system visited.
  std::vector<NTupleNode> trace;
  /// When verdict holds: every pair (Gamma; G^i, G^j) is a double principal group.
  bool pairwise_double = false;
};

/// n = 1: G^1 = Gamma. n = 2: verify_double. n >= 3: normality and
/// generation, then each (G^i; G^j n G^i, j != i) as an (n-1)-tuple.
NTupleWitness verify_ntuple(const FiniteGroup& gamma, const std::vector<Subgroup>& subgroups);

struct VacancyReport {
  bool vacant = false;
  bool product_bijective = false;
  /// Smallest and largest fiber of m: G x G' -> Gamma over all of Gamma.
  std::size_t min_fiber = 0, max_fiber = 0;
};
/// Throws InternalInconsistency if vacant and bijective disagree.
VacancyReport vacancy(const DoublePrincipalGroup& dpg);

/// Dressing tables, values in Gamma's indices.
struct DressingAction {
  const DoublePrincipalGroup* dpg = nullptr;
  /// g_on_gprime[a * |G'| + b] = g_{g'} for g = g1.members()[a], g' = g2.members()[b].
  std::vector<Index> g_on_gprime;
  /// gprime_on_g[b * |G| + a] = g'_g.
  std::vector<Index> gprime_on_g;
  /// Names of the laws verified and how many instances each covered.
  std::vector<std::pair<std::string, std::size_t>> laws;
};

/// g_{g'} = g'^-1 g g' and g'_g = g^-1 g' g, with the action laws, both
/// factorizations gg' = g'g_{g'} = g'_{g^-1}g and g'g = gg'_g = g_{g'^-1}g',
/// and (g')_{g^-1}(g')^-1 = g (g_{g'^-1})^-1 checked on every pair.
/// Throws InternalInconsistency on any failure.
DressingAction dressing(const DoublePrincipalGroup& dpg);

/// act(g, g') = g_{g'}: a right action of G' on G by automorphisms.
using DressingFn = std::function<Index(Index g, Index gprime)>;

struct Semidirect {
  /// Element (g', g) has index g' * |G| + g.
  FiniteGroup group;
  FiniteGroup gprime, g;
  /// {(e', g)} and {(g', e)}.
  Subgroup normal_g, gprime_part;
  Index pair(Index gprime_el, Index g_el) const {
    return static_cast<Index>(static_cast<std::size_t>(gprime_el) * g.order() + static_cast<std::size_t>(g_el));
  }
};

/// (g', g)(g'1, g1) = (g'g'1, g_{g'1} g1). Checks the action laws and throws
/// NotAnActionByAutomorphisms with the least violating pair; verifies
/// (g', g)^-1 = (g'^-1, (g^-1)_{g'^-1}) and normality of G.
Semidirect semidirect(const FiniteGroup& gprime, const FiniteGroup& g, const DressingFn& act);

/// G' x| G for the dressing action of a double principal group, and the
/// multiplication hom (g', g) -> g'g onto Gamma with kernel {(c, c^-1) : c in G0}.
struct DressingProduct {
  Semidirect semidirect;
  GroupHom multiply;
};
DressingProduct dressing_product(const DoublePrincipalGroup& dpg);

struct ExactnessReport {
  /// phi(gamma) = (gamma G', gamma G) into Gamma/G' x Gamma/G.
  bool is_hom = false;
  bool kernel_is_core = false;
  std::size_t kernel_order = 0;
  std::size_t image_order = 0;
  /// |Gamma/G'| = |[G]| and |Gamma/G| = |[G']|.
  bool quotient_orders_match = false;
};
ExactnessReport exact_sequence(const DoublePrincipalGroup& dpg);

/// phi(G1) in G2 and phi(G'1) in G'2.
bool dpg_morphism_check(const GroupHom& phi, const DoublePrincipalGroup& source, const DoublePrincipalGroup& target);

struct CompatibilityReport {
  /// rho' acts compatibly and pre-principally on the gauge groupoid of rho.
  bool forward = false;
  /// Roles swapped.
  bool backward = false;
  std::string failure;
  bool both() const { return forward && backward; }
};
/// Throws PreconditionNotFree if either action has a fixed point.
CompatibilityReport check_compatibility(const FiniteAction& rho, const FiniteAction& rho_prime);

struct PipelineResult {
  /// g_{g'} from p g g' = p g' g_{g'}; dress[g * |G'| + g'].
  std::vector<Index> dress;
  Semidirect semidirect;
  /// Pairs acting as the identity on P.
  Subgroup g0;
  Quotient gamma;
  /// Free right action of Gamma on P.
  FiniteAction action;
  /// Orbit maps P -> M = P/G, P -> M' = P/G', P -> M0 = P/Gamma.
  std::vector<Index> to_m, to_mprime, to_m0;
  /// Induced projections M -> M0 and M' -> M0.
  std::vector<Index> m_to_m0, mprime_to_m0;
  std::size_t m_count = 0, mprime_count = 0, m0_count = 0;
  /// Gamma with the images of G and G'.
  std::optional<DoublePrincipalGroup> as_double;
  std::string note = "finite: proper automatically";
};

/// Throws PreconditionNotFree, NotCompatible (least (g, g') with no valid
/// g_{g'}), NotAnActionByAutomorphisms, NotFree or DiagramFailure.
PipelineResult gamma_from_actions(const FiniteAction& rho, const FiniteAction& rho_prime);

/// Permutations of P induced by the elements of Gamma.
std::vector<std::vector<Index>> permutation_image(const FiniteAction& a);

}  // namespace npb
