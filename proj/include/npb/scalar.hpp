#pragma once

// Exact scalars: rationals (GMP) or elements of a prime field F_p.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "npb/error.hpp"

namespace npb {

/// Q when p == 0, otherwise F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidInput unless p is a prime <= max_p.
  static Field prime(std::uint32_t p, std::uint32_t max_p = 97);
  /// "Q", "Fp:3" (also accepts "F3").
  static Field parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;
  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

class Scalar {
 public:
  Scalar() : Scalar(Field::rationals(), 0) {}
  Scalar(Field f, long value);
  /// num / den; for F_p the denominator must be a unit.
  static Scalar fraction(Field f, const std::string& num, const std::string& den = "1");
  static Scalar from_mpq(const mpq_class& q);
  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  /// Throws InvalidInput for zero.
  Scalar inverse() const;
  Scalar pow(unsigned k) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Lowest terms; for F_p the representative in [0, p).
  std::string numerator() const;
  std::string denominator() const;
  /// "3", "-1/2"; F_p values print as their representative.
  std::string to_string() const;
  /// F_p representative; throws for Q.
  std::int64_t residue() const;

 private:
  void check_same(const Scalar& o) const;
  Field field_;
  std::variant<std::int64_t, mpq_class> v_;
};

}  // namespace npb
