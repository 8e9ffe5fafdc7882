#include "npb/polynomial.hpp"

#include <algorithm>

namespace npb {

Polynomial Polynomial::constant(const Scalar& c, std::size_t nvars) {
  Polynomial p(c.field(), nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(Field f, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw Error(ErrorKind::InvalidInput, "variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  Polynomial p(f, nvars);
  p.add_term(e, Scalar::one(f));
  return p;
}

Polynomial Polynomial::monomial(const Scalar& c, Exponents e) {
  Polynomial p(c.field(), e.size());
  p.add_term(e, c);
  return p;
}

Scalar Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) throw Error(ErrorKind::InvalidInput, "exponent vector has wrong length");
  if (!(c.field() == field_)) throw Error(ErrorKind::FieldMismatch, c.field().name() + " vs " + field_.name());
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void same_ring(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, a.field().name() + " vs " + b.field().name());
  if (a.nvars() != b.nvars()) throw Error(ErrorKind::InvalidInput, "polynomials in different rings");
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  same_ring(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  same_ring(*this, o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(field_)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  same_ring(*this, o);
  Polynomial r(field_, nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(Scalar::one(field_), nvars_), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    --d[i];
    r.add_term(d, c * Scalar(field_, e[i]));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw Error(ErrorKind::InvalidInput, "substitution needs one image per variable");
  if (images.empty()) {
    // constant polynomial in zero variables
    throw Error(ErrorKind::InvalidInput, "substitution into a ring without variables");
  }
  const std::size_t m = images[0].nvars();
  for (const auto& im : images) same_ring(im, images[0]);
  if (!(images[0].field() == field_)) throw Error(ErrorKind::FieldMismatch, "substitution across fields");

  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(Scalar::one(field_), m));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial r(field_, m);
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(c, m);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * power(i, e[i]);
    r = r + t;
  }
  return r;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw Error(ErrorKind::InvalidInput, "point has wrong dimension");
  Scalar r = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= point[i].pow(e[i]);
    r += t;
  }
  return r;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(ErrorKind::InvalidInput, "cannot extend to fewer variables");
  Polynomial r(field_, nvars);
  for (const auto& [e, c] : terms_) {
    Exponents x = e;
    x.resize(nvars, 0);
    r.add_term(x, c);
  }
  return r;
}

Polynomial Polynomial::truncated(std::size_t nvars) const {
  Polynomial r(field_, nvars);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = nvars; i < nvars_; ++i)
      if (e[i]) throw Error(ErrorKind::InvalidInput, "dropped variable " + std::to_string(i) + " occurs");
    r.add_term(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(nvars)), c);
  }
  return r;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::uses_any(const std::vector<bool>& vars) const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_ && i < vars.size(); ++i)
      if (vars[i] && e[i]) return true;
  return false;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef = c.to_string();
    std::string term;
    if (mono.empty()) term = coef;
    else if (c.is_one()) term = mono;
    else term = coef + "*" + mono;
    if (!first) out += " + ";
    out += term;
    first = false;
  }
  return out;
}

long weighted_degree(const Exponents& e, const std::vector<int>& weights) {
  long s = 0;
  for (std::size_t i = 0; i < e.size() && i < weights.size(); ++i) s += static_cast<long>(e[i]) * weights[i];
  return s;
}

namespace {

void enumerate(const std::vector<std::vector<int>>& w, std::vector<int>& remaining, unsigned free_left,
               std::size_t v, Exponents& cur, std::vector<Exponents>& out) {
  if (v == w.size()) {
    if (std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; })) out.push_back(cur);
    return;
  }
  const bool is_free = std::all_of(w[v].begin(), w[v].end(), [](int x) { return x == 0; });
  for (unsigned k = 0;; ++k) {
    if (is_free && k > free_left) break;
    bool fits = true;
    for (std::size_t g = 0; g < remaining.size(); ++g)
      if (static_cast<long>(w[v][g]) * k > remaining[g]) fits = false;
    if (!fits) break;
    for (std::size_t g = 0; g < remaining.size(); ++g) remaining[g] -= w[v][g] * static_cast<int>(k);
    cur[v] = static_cast<std::uint16_t>(k);
    enumerate(w, remaining, is_free ? free_left - k : free_left, v + 1, cur, out);
    for (std::size_t g = 0; g < remaining.size(); ++g) remaining[g] += w[v][g] * static_cast<int>(k);
    cur[v] = 0;
  }
}

}  // namespace

std::vector<Exponents> monomials_of_weight(const std::vector<std::vector<int>>& weights,
                                           const std::vector<int>& target, unsigned max_free_degree) {
  for (const auto& w : weights) {
    if (w.size() != target.size()) throw Error(ErrorKind::InvalidInput, "weight vectors of different lengths");
    for (int x : w)
      if (x < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
  }
  for (int x : target)
    if (x < 0) return {};
  std::vector<Exponents> out;
  std::vector<int> remaining = target;
  Exponents cur(weights.size(), 0);
  enumerate(weights, remaining, max_free_degree, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace npb
