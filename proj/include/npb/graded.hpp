#pragma once

// Weight-graded signatures, polynomial maps between them, dilations, weight
// vector fields and graded-morphism checks.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "npb/polynomial.hpp"

namespace npb {

struct SignatureCaps {
  std::size_t max_n = 4;
  std::size_t max_coords = 24;
  int max_weight = 6;
};

/// Coordinates grouped in blocks. Simple mode: a base block of weight 0 and
/// blocks of weight 1..k. Multi mode: a base block and one block per nonzero
/// sigma in {0,1}^n, ordered by |sigma| and then by the bitmask with bit i-1
/// for sigma_i (for n = 2: y, y', z).
class GradedSignature {
 public:
  enum class Mode { Simple, Multi };
  struct Block {
    /// Weight vector (length 1 in simple mode, n in multi mode).
    std::vector<int> weight;
    /// Simple: the weight. Multi: the bitmask of sigma. Base block: 0.
    unsigned key;
    std::size_t start, dim;
  };

  /// dims[i] = number of coordinates of weight i+1.
  static GradedSignature simple(std::vector<std::size_t> dims, std::size_t base = 0, const SignatureCaps& caps = {});
  /// dims[mask] for mask in 1..2^n-1 (dims[0] is ignored; base given separately).
  static GradedSignature multi(std::size_t n, std::vector<std::size_t> dims_by_mask, std::size_t base = 0,
                               const SignatureCaps& caps = {});
  /// Multi signature with dims listed in block order (for n = 2: d, d', d0 of y, y', z).
  static GradedSignature multi_ordered(std::size_t n, const std::vector<std::size_t>& dims, std::size_t base = 0,
                                       const SignatureCaps& caps = {});

  Mode mode() const { return mode_; }
  /// Number of gradings: 1 (simple) or n (multi).
  std::size_t gradings() const { return gradings_; }
  std::size_t coords() const { return weights_.size(); }
  std::size_t base_dim() const { return base_; }
  const std::vector<int>& weight(std::size_t c) const { return weights_[c]; }
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  /// Weight in grading g (0-based).
  int weight(std::size_t c, std::size_t g) const { return weights_[c][g]; }
  int total_weight(std::size_t c) const;
  /// Weights in one grading, one per coordinate.
  std::vector<int> grading(std::size_t g) const;
  /// Nonempty blocks in coordinate order (base first).
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t c) const { return block_of_[c]; }
  int max_total_weight() const;
  /// Simple: dims per weight. Multi: dims per block in canonical order (zeros included).
  std::vector<std::size_t> dims() const { return dims_; }
  /// Coordinate names: simple "x<w>_<j>" (base "x0_<j>"); multi "y<mask>_<j>".
  std::string coord_name(std::size_t c) const;
  std::string describe() const;

  bool operator==(const GradedSignature& o) const { return mode_ == o.mode_ && weights_ == o.weights_ && base_ == o.base_; }

  /// Block order of masks for n gradings.
  static std::vector<unsigned> mask_order(std::size_t n);

 private:
  GradedSignature() = default;
  void finish(const SignatureCaps& caps);
  Mode mode_ = Mode::Simple;
  std::size_t gradings_ = 1;
  std::size_t base_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<int>> weights_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

/// A polynomial map between graded signatures: one polynomial in
/// sig_in.coords() variables per coordinate of sig_out.
class PolyMap {
 public:
  PolyMap(GradedSignature sig_in, GradedSignature sig_out, Field field, std::vector<Polynomial> components);
  static PolyMap identity(const GradedSignature& sig, Field field);

  const GradedSignature& sig_in() const { return in_; }
  const GradedSignature& sig_out() const { return out_; }
  Field field() const { return field_; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& component(std::size_t c) const { return comps_[c]; }
  std::vector<Scalar> evaluate(const std::vector<Scalar>& point) const;
  bool operator==(const PolyMap& o) const {
    return in_ == o.in_ && out_ == o.out_ && field_ == o.field_ && comps_ == o.comps_;
  }
  std::string to_string() const;

 private:
  GradedSignature in_, out_;
  Field field_;
  std::vector<Polynomial> comps_;
};

using Matrix = std::vector<std::vector<Scalar>>;
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> matrix_inverse(const Matrix& m);

/// f o g. Throws SignatureMismatch unless f.sig_in == g.sig_out.
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Inverse of a map that is triangular along the total-weight filtration:
/// block w of the image is an invertible constant linear map of block w plus
/// a polynomial in strictly lower blocks (constants allowed). The base block
/// must be affine. Throws NotInvertible naming the offending block, or
/// SignatureMismatch if sig_in != sig_out. Both compositions are checked.
PolyMap invert(const PolyMap& f);

/// Components of f by weight in grading g of sig (zero components dropped).
std::map<long, Polynomial> weight_components(const Polynomial& f, const GradedSignature& sig, std::size_t g = 0);
/// True iff f has no component other than w (so 0 is homogeneous of every degree).
bool is_homogeneous(const Polynomial& f, long w, const GradedSignature& sig, std::size_t g = 0);
/// f(h_t(y)) as a polynomial in (y, t): the coefficient of t^w is the weight-w component.
Polynomial dilate(const Polynomial& f, const GradedSignature& sig, std::size_t g = 0);

/// Vector field sum_i a_i d/dy_i.
struct Derivation {
  std::vector<Polynomial> coeffs;
  Polynomial apply(const Polynomial& f) const;
  /// [X, Y] with [X,Y]_j = X(Y_j) - Y(X_j).
  Derivation bracket(const Derivation& other) const;
  bool is_zero() const;
};

/// sum_c w_c y_c d/dy_c in grading g.
Derivation weight_vector_field(const GradedSignature& sig, Field field, std::size_t g = 0);

/// Dilation family g of sig as a map in the ring (y, t): y_c -> t^{w_c} y_c.
/// The ring has sig.coords() + extra variables; t is variable t_index.
std::vector<Polynomial> dilation(const GradedSignature& sig, Field field, std::size_t g, std::size_t extra,
                                 std::size_t t_index);

/// h_t o h_s = h_ts and h_1 = id as identities in (y, t, s), for every grading.
bool check_dilation_laws(const GradedSignature& sig, Field field);

struct GradedMorphismReport {
  bool weight_preserving = false;
  /// Phi o h_t = h_t o Phi in the ring (y, t) for every grading.
  bool intertwines = false;
  /// First offending (target coordinate, monomial, grading) when not weight preserving.
  std::string witness;
};
/// Both checks; throws InternalInconsistency if they disagree.
GradedMorphismReport graded_morphism_report(const PolyMap& phi);
inline bool is_graded_morphism(const PolyMap& phi) { return graded_morphism_report(phi).weight_preserving; }

/// h_t = conj^-1 o D_t o conj with D_t the diagonal dilation y_c -> t^{weights[c]} y_c.
struct HomogeneityStructure {
  std::vector<int> weights;
  PolyMap conj;
};
/// h_t as a map in the ring (y, extra...), t being variable t_index.
std::vector<Polynomial> homogeneity_map(const HomogeneityStructure& h, std::size_t extra, std::size_t t_index);
/// d/dt h_t at t = 1.
Derivation generator(const HomogeneityStructure& h);

struct CompatibilityVerdicts {
  bool commute = false;
  bool brackets_vanish = false;
  /// First non-commuting or non-bracket-free pair (i, j), when any.
  std::pair<int, int> pair{-1, -1};
};
/// Formal commutation h^i_t o h^j_s = h^j_s o h^i_t and [nabla^i, nabla^j] = 0
/// for all pairs. Throws InternalDisagreement if the verdicts differ.
CompatibilityVerdicts check_compatible_structures(const std::vector<HomogeneityStructure>& hs);

/// Random scalar; over Q a small fraction with |num|, den <= bound.
Scalar random_scalar(Field f, std::mt19937_64& rng, int bound = 3);
/// Random polynomial with the given weight vector (base degree <= 2), up to max_terms terms.
Polynomial random_homogeneous(const GradedSignature& sig, Field f, const std::vector<int>& weight,
                              std::mt19937_64& rng, std::size_t max_terms = 4);
/// Random weight-preserving map sig -> sig (may be singular).
PolyMap random_graded_map(const GradedSignature& sig, Field f, std::mt19937_64& rng, std::size_t max_terms = 3);
/// Random invertible map of the triangular shape accepted by invert; weight
/// preserving when affine is false.
PolyMap random_triangular_automorphism(const GradedSignature& sig, Field f, std::mt19937_64& rng,
                                       bool affine = false, std::size_t max_terms = 3);

}  // namespace npb
