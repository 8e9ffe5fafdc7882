#pragma once

// Sparse multivariate polynomials over an exact field.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "npb/scalar.hpp"

namespace npb {

using Exponents = std::vector<std::uint16_t>;

class Polynomial {
 public:
  Polynomial(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
  static Polynomial constant(const Scalar& c, std::size_t nvars);
  static Polynomial variable(Field f, std::size_t nvars, std::size_t i);
  static Polynomial monomial(const Scalar& c, Exponents e);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  /// Lexicographic by exponent vector; no zero coefficients.
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of x^e (zero if absent).
  Scalar coefficient(const Exponents& e) const;
  /// Adds c x^e.
  void add_term(const Exponents& e, const Scalar& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(unsigned k) const;
  bool operator==(const Polynomial& o) const { return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// d/dx_i.
  Polynomial derivative(std::size_t i) const;
  /// Replace x_i by images[i]; all images share one ring, which the result lives in.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  /// Same polynomial in a ring with extra trailing variables.
  Polynomial extended(std::size_t nvars) const;
  /// Drops trailing variables; throws InvalidInput if any of them occurs.
  Polynomial truncated(std::size_t nvars) const;
  /// Largest total degree, -1 for zero.
  int degree() const;
  /// Whether the variables at the given positions occur.
  bool uses_any(const std::vector<bool>& vars) const;

  /// "3*x0^2*x1 + x2"; variable names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  Field field_;
  std::size_t nvars_;
  std::map<Exponents, Scalar> terms_;
};

/// Weighted degree sum_i e_i w_i.
long weighted_degree(const Exponents& e, const std::vector<int>& weights);

/// Exponent vectors over nvars variables whose weight vectors sum exactly to
/// target. weights[v] is the weight vector of variable v. Variables of weight
/// zero in every grading get total degree at most max_free_degree.
std::vector<Exponents> monomials_of_weight(const std::vector<std::vector<int>>& weights,
                                           const std::vector<int>& target, unsigned max_free_degree = 0);

}  // namespace npb
