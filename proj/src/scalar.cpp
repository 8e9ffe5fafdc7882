#include "npb/scalar.hpp"

namespace npb {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

}  // namespace

Field Field::prime(std::uint32_t p, std::uint32_t max_p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (p > max_p) throw Error(ErrorKind::InvalidInput, "prime " + std::to_string(p) + " exceeds the cap " + std::to_string(max_p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string digits;
  if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
  else if (text.rfind("F", 0) == 0) digits = text.substr(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::InvalidInput, "unknown field '" + text + "'");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational()) v_ = mpq_class(value);
  else v_ = mod(value, f.characteristic());
}

Scalar Scalar::fraction(Field f, const std::string& num, const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0 || d.set_str(den, 10) != 0)
    throw Error(ErrorKind::InvalidInput, "bad rational '" + num + "/" + den + "'");
  if (d == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  if (f.is_rational()) {
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(q);
  }
  const std::int64_t dm = mpz_mod(d, f.characteristic());
  if (dm == 0) throw Error(ErrorKind::InvalidInput, "denominator " + den + " vanishes in " + f.name());
  return Scalar(f, static_cast<long>(mpz_mod(n, f.characteristic()))) / Scalar(f, static_cast<long>(dm));
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s(Field::rationals(), 0);
  s.v_ = q;
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 0;
  return std::get<std::int64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_) == 1;
  return std::get<std::int64_t>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_rational()) r.v_ = mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_));
  else r.v_ = mod(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), field_.characteristic());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_rational()) r.v_ = mpq_class(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_));
  else r.v_ = mod(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), field_.characteristic());
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r = *this;
  if (field_.is_rational()) r.v_ = mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_));
  else r.v_ = mod(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), field_.characteristic());
  return r;
}

Scalar Scalar::operator-() const { return Scalar(field_, 0) - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.v_ = mpq_class(1 / std::get<mpq_class>(v_));
  } else {
    // Fermat: a^(p-2)
    r = pow(field_.characteristic() - 2);
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::pow(unsigned k) const {
  Scalar result = one(field_), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }

std::string Scalar::numerator() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_).get_num().get_str();
  return std::to_string(std::get<std::int64_t>(v_));
}

std::string Scalar::denominator() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_).get_den().get_str();
  return "1";
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(v_).get_str();
  return std::to_string(std::get<std::int64_t>(v_));
}

std::int64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "residue of a rational");
  return std::get<std::int64_t>(v_);
}

}  // namespace npb
