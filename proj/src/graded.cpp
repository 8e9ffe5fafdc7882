#include "npb/graded.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace npb {

// ---------------------------------------------------------------- signatures

std::vector<unsigned> GradedSignature::mask_order(std::size_t n) {
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  return masks;
}

GradedSignature GradedSignature::simple(std::vector<std::size_t> dims, std::size_t base, const SignatureCaps& caps) {
  if (dims.size() > static_cast<std::size_t>(caps.max_weight))
    throw Error(ErrorKind::CapExceeded, "weight " + std::to_string(dims.size()) + " exceeds the cap " +
                                            std::to_string(caps.max_weight));
  GradedSignature s;
  s.mode_ = Mode::Simple;
  s.gradings_ = 1;
  s.base_ = base;
  s.dims_ = dims;
  for (std::size_t i = 0; i < base; ++i) s.weights_.push_back({0});
  for (std::size_t w = 0; w < dims.size(); ++w)
    for (std::size_t j = 0; j < dims[w]; ++j) s.weights_.push_back({static_cast<int>(w + 1)});
  s.finish(caps);
  return s;
}

GradedSignature GradedSignature::multi(std::size_t n, std::vector<std::size_t> dims_by_mask, std::size_t base,
                                       const SignatureCaps& caps) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "multi signature needs n >= 1");
  if (n > caps.max_n)
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(caps.max_n));
  if (dims_by_mask.size() != (std::size_t{1} << n))
    throw Error(ErrorKind::InvalidInput, "multi signature needs 2^n dimension entries");
  GradedSignature s;
  s.mode_ = Mode::Multi;
  s.gradings_ = n;
  s.base_ = base;
  for (std::size_t i = 0; i < base; ++i) s.weights_.push_back(std::vector<int>(n, 0));
  for (unsigned m : mask_order(n)) {
    s.dims_.push_back(dims_by_mask[m]);
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = (m >> i) & 1u;
    for (std::size_t j = 0; j < dims_by_mask[m]; ++j) s.weights_.push_back(w);
  }
  s.finish(caps);
  return s;
}

GradedSignature GradedSignature::multi_ordered(std::size_t n, const std::vector<std::size_t>& dims, std::size_t base,
                                               const SignatureCaps& caps) {
  if (n == 0 || n > caps.max_n)
    throw Error(ErrorKind::CapExceeded, "n = " + std::to_string(n) + " outside 1.." + std::to_string(caps.max_n));
  const auto order = mask_order(n);
  if (dims.size() != order.size())
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(order.size()) + " block dimensions");
  std::vector<std::size_t> by_mask(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) by_mask[order[i]] = dims[i];
  return multi(n, by_mask, base, caps);
}

void GradedSignature::finish(const SignatureCaps& caps) {
  if (weights_.empty()) throw Error(ErrorKind::InvalidInput, "signature has no coordinates");
  if (weights_.size() > caps.max_coords)
    throw Error(ErrorKind::CapExceeded, std::to_string(weights_.size()) + " coordinates exceed the cap " +
                                            std::to_string(caps.max_coords));
  block_of_.assign(weights_.size(), 0);
  for (std::size_t c = 0; c < weights_.size(); ++c) {
    if (blocks_.empty() || blocks_.back().weight != weights_[c]) {
      unsigned key = 0;
      if (mode_ == Mode::Simple) {
        key = static_cast<unsigned>(weights_[c][0]);
      } else {
        for (std::size_t i = 0; i < gradings_; ++i)
          if (weights_[c][i]) key |= 1u << i;
      }
      blocks_.push_back(Block{weights_[c], key, c, 0});
    }
    ++blocks_.back().dim;
    block_of_[c] = blocks_.size() - 1;
  }
}

int GradedSignature::total_weight(std::size_t c) const {
  return std::accumulate(weights_[c].begin(), weights_[c].end(), 0);
}

std::vector<int> GradedSignature::grading(std::size_t g) const {
  if (g >= gradings_) throw Error(ErrorKind::InvalidInput, "grading index out of range");
  std::vector<int> out(weights_.size());
  for (std::size_t c = 0; c < weights_.size(); ++c) out[c] = weights_[c][g];
  return out;
}

int GradedSignature::max_total_weight() const {
  int m = 0;
  for (std::size_t c = 0; c < coords(); ++c) m = std::max(m, total_weight(c));
  return m;
}

std::string GradedSignature::coord_name(std::size_t c) const {
  const Block& b = blocks_[block_of_[c]];
  const std::string j = std::to_string(c - b.start + 1);
  if (mode_ == Mode::Simple) return "x" + std::to_string(b.key) + "_" + j;
  return "y" + std::to_string(b.key) + "_" + j;
}

std::string GradedSignature::describe() const {
  std::string out = mode_ == Mode::Simple ? "simple(" : "multi(n=" + std::to_string(gradings_) + "; ";
  out += "base=" + std::to_string(base_) + "; d=";
  for (std::size_t i = 0; i < dims_.size(); ++i) out += (i ? "," : "") + std::to_string(dims_[i]);
  return out + ")";
}

// ---------------------------------------------------------------- maps

namespace {

std::vector<std::string> names_of(const GradedSignature& sig) {
  std::vector<std::string> n;
  for (std::size_t c = 0; c < sig.coords(); ++c) n.push_back(sig.coord_name(c));
  return n;
}

std::vector<Polynomial> variables(Field f, std::size_t nvars, std::size_t count) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(Polynomial::variable(f, nvars, i));
  return v;
}

std::vector<Polynomial> substitute_all(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& images) {
  std::vector<Polynomial> r;
  r.reserve(outer.size());
  for (const auto& p : outer) r.push_back(p.substitute(images));
  return r;
}

}  // namespace

PolyMap::PolyMap(GradedSignature sig_in, GradedSignature sig_out, Field field, std::vector<Polynomial> components)
    : in_(std::move(sig_in)), out_(std::move(sig_out)), field_(field), comps_(std::move(components)) {
  if (comps_.size() != out_.coords())
    throw Error(ErrorKind::SignatureMismatch, "need one component per target coordinate (" +
                                                  std::to_string(out_.coords()) + "), got " +
                                                  std::to_string(comps_.size()));
  for (const auto& p : comps_) {
    if (p.nvars() != in_.coords())
      throw Error(ErrorKind::SignatureMismatch, "component over " + std::to_string(p.nvars()) +
                                                    " variables, source has " + std::to_string(in_.coords()));
    if (!(p.field() == field_)) throw Error(ErrorKind::FieldMismatch, p.field().name() + " vs " + field_.name());
  }
}

PolyMap PolyMap::identity(const GradedSignature& sig, Field field) {
  return PolyMap(sig, sig, field, variables(field, sig.coords(), sig.coords()));
}

std::vector<Scalar> PolyMap::evaluate(const std::vector<Scalar>& point) const {
  std::vector<Scalar> r;
  for (const auto& p : comps_) r.push_back(p.evaluate(point));
  return r;
}

std::string PolyMap::to_string() const {
  const auto names = names_of(in_);
  std::string out = "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) out += (i ? ", " : "") + comps_[i].to_string(names);
  return out + ")";
}

std::optional<Matrix> matrix_inverse(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Matrix{};
  const Field f = m[0][0].field();
  Matrix a = m, inv(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::InvalidInput, "matrix is not square");
    inv[i][i] = Scalar::one(f);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Scalar s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Scalar k = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= k * a[col][j];
        inv[r][j] -= k * inv[col][j];
      }
    }
  }
  return inv;
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (!(f.sig_in() == g.sig_out()))
    throw Error(ErrorKind::SignatureMismatch, f.sig_in().describe() + " vs " + g.sig_out().describe());
  if (!(f.field() == g.field())) throw Error(ErrorKind::FieldMismatch, f.field().name() + " vs " + g.field().name());
  return PolyMap(g.sig_in(), f.sig_out(), f.field(), substitute_all(f.components(), g.components()));
}

PolyMap invert(const PolyMap& f) {
  const GradedSignature& sig = f.sig_in();
  if (!(sig == f.sig_out()))
    throw Error(ErrorKind::SignatureMismatch, "invert needs sig_in == sig_out");
  const Field field = f.field();
  const std::size_t n = sig.coords();

  std::map<int, std::vector<std::size_t>> levels;
  for (std::size_t c = 0; c < n; ++c) levels[sig.total_weight(c)].push_back(c);

  const auto u = variables(field, n, n);
  std::vector<Polynomial> g(n, Polynomial(field, n));
  std::vector<bool> lower(n, false);

  for (const auto& [level, coords] : levels) {
    std::vector<bool> same(n, false);
    for (auto c : coords) same[c] = true;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = i;

    Matrix a(coords.size(), std::vector<Scalar>(coords.size(), Scalar::zero(field)));
    std::vector<Polynomial> rest;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Polynomial r(field, n);
      for (const auto& [e, coef] : f.component(coords[i]).terms()) {
        bool only_lower = true;
        std::size_t deg = 0, var = n;
        for (std::size_t v = 0; v < n; ++v) {
          if (!e[v]) continue;
          if (!lower[v]) only_lower = false;
          deg += e[v];
          var = v;
        }
        if (only_lower) {
          r.add_term(e, coef);
        } else if (deg == 1 && same[var]) {
          a[i][pos[var]] = coef;
        } else {
          throw Error(ErrorKind::NotInvertible,
                      "component " + sig.coord_name(coords[i]) + " is not triangular at total weight " +
                          std::to_string(level) + " (" + Polynomial::monomial(coef, e).to_string(names_of(sig)) + ")");
        }
      }
      rest.push_back(r);
    }
    auto ainv = matrix_inverse(a);
    if (!ainv)
      throw Error(ErrorKind::NotInvertible, "linear block of total weight " + std::to_string(level) + " is singular");

    // g_level = A^-1 (u_level - R(g_lower))
    std::vector<Polynomial> images(n, Polynomial(field, n));
    for (std::size_t v = 0; v < n; ++v)
      if (lower[v]) images[v] = g[v];
    std::vector<Polynomial> rhs;
    for (std::size_t i = 0; i < coords.size(); ++i) rhs.push_back(u[coords[i]] - rest[i].substitute(images));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Polynomial acc(field, n);
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!(*ainv)[i][j].is_zero()) acc = acc + rhs[j].scaled((*ainv)[i][j]);
      g[coords[i]] = acc;
    }
    for (auto c : coords) lower[c] = true;
  }

  PolyMap inv(sig, sig, field, std::move(g));
  const PolyMap id = PolyMap::identity(sig, field);
  if (!(compose(f, inv) == id) || !(compose(inv, f) == id))
    throw Error(ErrorKind::InternalInconsistency, "triangular inverse failed the composition check");
  return inv;
}

// ---------------------------------------------------------------- weights

std::map<long, Polynomial> weight_components(const Polynomial& f, const GradedSignature& sig, std::size_t g) {
  if (f.nvars() != sig.coords()) throw Error(ErrorKind::SignatureMismatch, "polynomial ring does not match signature");
  const auto w = sig.grading(g);
  std::map<long, Polynomial> out;
  for (const auto& [e, c] : f.terms()) {
    auto it = out.try_emplace(weighted_degree(e, w), f.field(), f.nvars()).first;
    it->second.add_term(e, c);
  }
  return out;
}

bool is_homogeneous(const Polynomial& f, long w, const GradedSignature& sig, std::size_t g) {
  const auto parts = weight_components(f, sig, g);
  return parts.empty() || (parts.size() == 1 && parts.begin()->first == w);
}

std::vector<Polynomial> dilation(const GradedSignature& sig, Field field, std::size_t g, std::size_t extra,
                                 std::size_t t_index) {
  const std::size_t n = sig.coords() + extra;
  if (t_index >= n || t_index < sig.coords()) throw Error(ErrorKind::InvalidInput, "t must be an extra variable");
  const Polynomial t = Polynomial::variable(field, n, t_index);
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < sig.coords(); ++c)
    out.push_back(t.pow(static_cast<unsigned>(sig.weight(c, g))) * Polynomial::variable(field, n, c));
  return out;
}

Polynomial dilate(const Polynomial& f, const GradedSignature& sig, std::size_t g) {
  return f.substitute(dilation(sig, f.field(), g, 1, sig.coords()));
}

bool check_dilation_laws(const GradedSignature& sig, Field field) {
  const std::size_t m = sig.coords(), n = m + 2;
  const Polynomial t = Polynomial::variable(field, n, m), s = Polynomial::variable(field, n, m + 1);
  for (std::size_t g = 0; g < sig.gradings(); ++g) {
    const auto ht = dilation(sig, field, g, 2, m);
    const auto hs = dilation(sig, field, g, 2, m + 1);
    auto images = hs;
    images.push_back(t);
    images.push_back(s);
    const auto lhs = substitute_all(ht, images);
    std::vector<Polynomial> ts_images = variables(field, n, m);
    ts_images.push_back(t * s);
    ts_images.push_back(s);
    const auto rhs = substitute_all(ht, ts_images);
    if (lhs != rhs) return false;
    std::vector<Polynomial> one_images = variables(field, n, m);
    one_images.push_back(Polynomial::constant(Scalar::one(field), n));
    one_images.push_back(s);
    if (substitute_all(ht, one_images) != variables(field, n, m)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- derivations

Polynomial Derivation::apply(const Polynomial& f) const {
  if (coeffs.size() != f.nvars()) throw Error(ErrorKind::SignatureMismatch, "derivation and polynomial rings differ");
  Polynomial r(f.field(), f.nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    const Polynomial d = f.derivative(i);
    if (!d.is_zero()) r = r + coeffs[i] * d;
  }
  return r;
}

Derivation Derivation::bracket(const Derivation& other) const {
  if (coeffs.size() != other.coeffs.size()) throw Error(ErrorKind::SignatureMismatch, "derivations on different rings");
  Derivation r;
  for (std::size_t j = 0; j < coeffs.size(); ++j) r.coeffs.push_back(apply(other.coeffs[j]) - other.apply(coeffs[j]));
  return r;
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Derivation weight_vector_field(const GradedSignature& sig, Field field, std::size_t g) {
  Derivation d;
  const std::size_t n = sig.coords();
  for (std::size_t c = 0; c < n; ++c)
    d.coeffs.push_back(Polynomial::variable(field, n, c).scaled(Scalar(field, sig.weight(c, g))));
  return d;
}

// ---------------------------------------------------------------- morphisms

GradedMorphismReport graded_morphism_report(const PolyMap& phi) {
  const GradedSignature& in = phi.sig_in();
  const GradedSignature& out = phi.sig_out();
  if (in.gradings() != out.gradings())
    throw Error(ErrorKind::SignatureMismatch, "source and target have different numbers of gradings");
  GradedMorphismReport rep;
  rep.weight_preserving = true;
  const auto names = names_of(in);
  for (std::size_t g = 0; g < in.gradings() && rep.weight_preserving; ++g) {
    const auto w = in.grading(g);
    for (std::size_t c = 0; c < out.coords() && rep.weight_preserving; ++c)
      for (const auto& [e, coef] : phi.component(c).terms())
        if (weighted_degree(e, w) != out.weight(c, g)) {
          rep.weight_preserving = false;
          rep.witness = out.coord_name(c) + ": " + Polynomial::monomial(coef, e).to_string(names) + " in grading " +
                        std::to_string(g + 1);
          break;
        }
  }

  rep.intertwines = true;
  const std::size_t m = in.coords(), n = m + 1;
  const Polynomial t = Polynomial::variable(phi.field(), n, m);
  for (std::size_t g = 0; g < in.gradings() && rep.intertwines; ++g) {
    const auto h_in = dilation(in, phi.field(), g, 1, m);
    for (std::size_t c = 0; c < out.coords(); ++c) {
      const Polynomial lhs = phi.component(c).substitute(h_in);
      const Polynomial rhs = t.pow(static_cast<unsigned>(out.weight(c, g))) * phi.component(c).extended(n);
      if (lhs != rhs) {
        rep.intertwines = false;
        break;
      }
    }
  }
  if (rep.intertwines != rep.weight_preserving)
    throw Error(ErrorKind::InternalInconsistency, "monomial weights and symbolic intertwining disagree");
  return rep;
}

// ---------------------------------------------------------------- homogeneity structures

std::vector<Polynomial> homogeneity_map(const HomogeneityStructure& h, std::size_t extra, std::size_t t_index) {
  const GradedSignature& sig = h.conj.sig_in();
  const std::size_t m = sig.coords(), n = m + extra;
  if (h.weights.size() != m) throw Error(ErrorKind::SignatureMismatch, "one weight per coordinate expected");
  if (t_index < m || t_index >= n) throw Error(ErrorKind::InvalidInput, "t must be an extra variable");
  const Field field = h.conj.field();
  const PolyMap inv = invert(h.conj);
  const Polynomial t = Polynomial::variable(field, n, t_index);
  std::vector<Polynomial> mid;
  for (std::size_t c = 0; c < m; ++c) {
    if (h.weights[c] < 0) throw Error(ErrorKind::InvalidInput, "negative weight");
    mid.push_back(t.pow(static_cast<unsigned>(h.weights[c])) * h.conj.component(c).extended(n));
  }
  return substitute_all(inv.components(), mid);
}

Derivation generator(const HomogeneityStructure& h) {
  const std::size_t m = h.conj.sig_in().coords(), n = m + 1;
  const Field field = h.conj.field();
  const auto ht = homogeneity_map(h, 1, m);
  auto at_one = variables(field, n, m);
  at_one.push_back(Polynomial::constant(Scalar::one(field), n));
  Derivation d;
  for (const auto& p : ht) d.coeffs.push_back(p.derivative(m).substitute(at_one).truncated(m));
  return d;
}

CompatibilityVerdicts check_compatible_structures(const std::vector<HomogeneityStructure>& hs) {
  CompatibilityVerdicts v;
  v.commute = v.brackets_vanish = true;
  if (hs.empty()) return v;
  const GradedSignature& sig = hs[0].conj.sig_in();
  const Field field = hs[0].conj.field();
  for (const auto& h : hs) {
    if (!(h.conj.sig_in() == sig)) throw Error(ErrorKind::SignatureMismatch, "structures on different coordinates");
    if (!(h.conj.field() == field)) throw Error(ErrorKind::FieldMismatch, "structures over different fields");
  }
  // d/dt at t = 1 loses information in positive characteristic
  if (!field.is_rational())
    throw Error(ErrorKind::FieldMismatch, "compatibility is checked over Q only");

  const std::size_t m = sig.coords(), n = m + 2;
  std::vector<std::vector<Polynomial>> ht, hs_;
  std::vector<Derivation> gens;
  for (const auto& h : hs) {
    ht.push_back(homogeneity_map(h, 2, m));
    hs_.push_back(homogeneity_map(h, 2, m + 1));
    gens.push_back(generator(h));
  }
  const Polynomial t = Polynomial::variable(field, n, m), s = Polynomial::variable(field, n, m + 1);
  auto with_ts = [&](std::vector<Polynomial> ys) {
    ys.push_back(t);
    ys.push_back(s);
    return ys;
  };
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const bool commute = substitute_all(ht[i], with_ts(hs_[j])) == substitute_all(hs_[j], with_ts(ht[i]));
      const bool bracket = gens[i].bracket(gens[j]).is_zero();
      if (commute != bracket)
        throw Error(ErrorKind::InternalDisagreement, "commutation and bracket verdicts differ for structures " +
                                                         std::to_string(i + 1) + " and " + std::to_string(j + 1));
      if (!commute && v.commute) {
        v.commute = v.brackets_vanish = false;
        v.pair = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  return v;
}

// ---------------------------------------------------------------- random instances

Scalar random_scalar(Field f, std::mt19937_64& rng, int bound) {
  if (f.is_rational()) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return Scalar(f, num(rng)) / Scalar(f, den(rng));
  }
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.characteristic()) - 1);
  return Scalar(f, d(rng));
}

namespace {

Scalar random_nonzero(Field f, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(f, rng);
    if (!s.is_zero()) return s;
  }
}

Polynomial random_from(const std::vector<Exponents>& monos, Field f, std::size_t nvars, std::mt19937_64& rng,
                       std::size_t max_terms) {
  Polynomial p(f, nvars);
  if (monos.empty() || max_terms == 0) return p;
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1), count(1, max_terms);
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) p.add_term(monos[pick(rng)], random_nonzero(f, rng));
  return p;
}

Matrix random_invertible(Field f, std::size_t dim, std::mt19937_64& rng) {
  for (;;) {
    Matrix a(dim, std::vector<Scalar>(dim, Scalar::zero(f)));
    for (auto& row : a)
      for (auto& x : row) x = random_scalar(f, rng);
    if (matrix_inverse(a)) return a;
  }
}

}  // namespace

Polynomial random_homogeneous(const GradedSignature& sig, Field f, const std::vector<int>& weight,
                              std::mt19937_64& rng, std::size_t max_terms) {
  return random_from(monomials_of_weight(sig.weights(), weight, 2), f, sig.coords(), rng, max_terms);
}

PolyMap random_graded_map(const GradedSignature& sig, Field f, std::mt19937_64& rng, std::size_t max_terms) {
  std::vector<Polynomial> comps;
  for (std::size_t c = 0; c < sig.coords(); ++c) comps.push_back(random_homogeneous(sig, f, sig.weight(c), rng, max_terms));
  return PolyMap(sig, sig, f, std::move(comps));
}

PolyMap random_triangular_automorphism(const GradedSignature& sig, Field f, std::mt19937_64& rng, bool affine,
                                       std::size_t max_terms) {
  const std::size_t n = sig.coords();
  std::vector<Polynomial> comps(n, Polynomial(f, n));
  for (const auto& b : sig.blocks()) {
    const Matrix a = random_invertible(f, b.dim, rng);
    const int level = std::accumulate(b.weight.begin(), b.weight.end(), 0);
    std::vector<Exponents> lower_monos;
    for (const auto& e : monomials_of_weight(sig.weights(), b.weight, 2)) {
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v)
        if (e[v] && sig.total_weight(v) >= level) ok = false;
      if (ok) lower_monos.push_back(e);
    }
    for (std::size_t i = 0; i < b.dim; ++i) {
      Polynomial p = random_from(lower_monos, f, n, rng, max_terms);
      for (std::size_t j = 0; j < b.dim; ++j) {
        Exponents e(n, 0);
        e[b.start + j] = 1;
        p.add_term(e, a[i][j]);
      }
      if (affine) p.add_term(Exponents(n, 0), random_scalar(f, rng));
      comps[b.start + i] = p;
    }
  }
  return PolyMap(sig, sig, f, std::move(comps));
}

}  // namespace npb
