#include "npb/aut.hpp"

#include <algorithm>
#include <bit>

#include "npb/parallel.hpp"

namespace npb {

namespace {

void require_vector_signature(const GradedSignature& sig) {
  if (sig.mode() != GradedSignature::Mode::Multi)
    throw Error(ErrorKind::SignatureMismatch, "n-tuple vector spaces use multi signatures");
  if (sig.base_dim() != 0) throw Error(ErrorKind::SignatureMismatch, "n-tuple vector spaces have no base block");
}

std::string slot_name(const GradedSignature& sig, std::size_t target, const Exponents& e) {
  std::string mono;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (!e[v]) continue;
    if (!mono.empty()) mono += "*";
    mono += sig.coord_name(v);
    if (e[v] > 1) mono += "^" + std::to_string(e[v]);
  }
  return sig.coord_name(target) + " <- " + (mono.empty() ? "1" : mono);
}

bool weight_at_most(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<int> monomial_weight(const GradedSignature& sig, const Exponents& e) {
  std::vector<int> w(sig.gradings(), 0);
  for (std::size_t v = 0; v < e.size(); ++v)
    for (std::size_t g = 0; g < w.size(); ++g) w[g] += e[v] * sig.weight(v, g);
  return w;
}

bool linear_blocks_identity(const PolyMap& m) {
  const auto& sig = m.sig_in();
  for (std::size_t c = 0; c < sig.coords(); ++c) {
    for (const auto& [e, coef] : m.component(c).terms()) {
      std::size_t deg = 0, var = 0;
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) {
          deg += e[v];
          var = v;
        }
      if (deg == 1 && sig.block_of(var) == sig.block_of(c) && !(var == c ? coef.is_one() : coef.is_zero()))
        return false;
    }
    Exponents self(sig.coords(), 0);
    self[c] = 1;
    if (!m.component(c).coefficient(self).is_one()) return false;
  }
  return true;
}

}  // namespace

NVectAutomorphism make_automorphism(const PolyMap& map) {
  const auto& sig = map.sig_in();
  require_vector_signature(sig);
  if (!(sig == map.sig_out())) throw Error(ErrorKind::SignatureMismatch, "automorphisms map a signature to itself");
  for (std::size_t c = 0; c < sig.coords(); ++c)
    for (const auto& [e, coef] : map.component(c).terms())
      if (monomial_weight(sig, e) != sig.weight(c))
        throw Error(ErrorKind::IllegalMonomial, slot_name(sig, c, e));
  return NVectAutomorphism{map, invert(map)};
}

NVectAutomorphism make_automorphism(const GradedSignature& sig, Field field, const std::vector<AutTerm>& terms) {
  std::vector<Polynomial> comps(sig.coords(), Polynomial(field, sig.coords()));
  for (const auto& t : terms) {
    if (t.target >= sig.coords()) throw Error(ErrorKind::InvalidInput, "target coordinate out of range");
    comps[t.target].add_term(t.exponents, t.coef);
  }
  return make_automorphism(PolyMap(sig, sig, field, std::move(comps)));
}

NVectAutomorphism compose(const NVectAutomorphism& a, const NVectAutomorphism& b) {
  return NVectAutomorphism{compose(a.map, b.map), compose(b.inverse, a.inverse)};
}

bool is_statomorphism(const NVectAutomorphism& a) { return linear_blocks_identity(a.map); }

bool gi_membership(const NVectAutomorphism& a, std::size_t i) {
  const auto& sig = a.map.sig_in();
  if (i == 0 || i > sig.gradings()) throw Error(ErrorKind::InvalidInput, "factor index out of range");
  const unsigned mask = 1u << (i - 1);
  for (const auto& b : sig.blocks()) {
    if (b.key != mask) continue;
    for (std::size_t c = b.start; c < b.start + b.dim; ++c)
      if (!(a.map.component(c) == Polynomial::variable(a.map.field(), sig.coords(), c))) return false;
  }
  return true;
}

std::vector<AutSlot> automorphism_slots(const GradedSignature& sig) {
  require_vector_signature(sig);
  std::vector<AutSlot> slots;
  for (std::size_t c = 0; c < sig.coords(); ++c)
    for (const auto& e : monomials_of_weight(sig.weights(), sig.weight(c), 0)) {
      std::size_t deg = 0;
      for (auto x : e) deg += x;
      slots.push_back(AutSlot{c, e, deg == 1});
    }
  return slots;
}

std::size_t AutGroup::candidate_of(const PolyMap& map) const {
  const std::uint32_t p = field.characteristic();
  std::size_t code = 0;
  std::size_t matched = 0;
  for (const auto& s : slots) {
    const Scalar v = map.component(s.target).coefficient(s.exponents);
    code = code * p + static_cast<std::size_t>(v.residue());
    if (!v.is_zero()) ++matched;
  }
  std::size_t total = 0;
  for (const auto& comp : map.components()) total += comp.size();
  if (total != matched) throw Error(ErrorKind::IllegalMonomial, "map has terms outside the legal slots");
  return code;
}

Index AutGroup::index_of(const PolyMap& map) const {
  const std::size_t code = candidate_of(map);
  if (code >= by_candidate.size() || by_candidate[code] < 0)
    throw Error(ErrorKind::InvalidInput, "map is not an enumerated automorphism");
  return by_candidate[code];
}

AutGroup enumerate_aut(const GradedSignature& sig, Field field, std::size_t max_candidates, std::size_t max_order) {
  if (field.is_rational()) throw Error(ErrorKind::FieldMismatch, "enumeration needs a prime field");
  auto slots = automorphism_slots(sig);
  const std::size_t p = field.characteristic();
  std::size_t candidates = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (candidates > max_candidates / p)
      throw Error(ErrorKind::EnumerationCapExceeded,
                  std::to_string(p) + "^" + std::to_string(slots.size()) + " candidates exceed the cap " +
                      std::to_string(max_candidates));
    candidates *= p;
  }

  // linear slot positions per block, row-major
  struct BlockSlots {
    std::size_t start, dim;
    std::vector<std::size_t> pos;
  };
  std::vector<BlockSlots> blocks;
  for (const auto& b : sig.blocks()) blocks.push_back({b.start, b.dim, std::vector<std::size_t>(b.dim * b.dim)});
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k].linear) continue;
    auto& bs = blocks[sig.block_of(slots[k].target)];
    std::size_t var = 0;
    while (!slots[k].exponents[var]) ++var;
    bs.pos[(slots[k].target - bs.start) * bs.dim + (var - bs.start)] = k;
  }

  // digits of a grid position; slot 0 is the most significant
  auto digits_of = [&](std::size_t code) {
    std::vector<std::int64_t> d(slots.size());
    for (std::size_t k = slots.size(); k-- > 0;) {
      d[k] = static_cast<std::int64_t>(code % p);
      code /= p;
    }
    return d;
  };

  std::vector<unsigned char> keep(candidates, 0);
  parallel_for(candidates, [&](std::size_t code) {
    const auto d = digits_of(code);
    for (const auto& bs : blocks) {
      Matrix a(bs.dim, std::vector<Scalar>(bs.dim, Scalar::zero(field)));
      for (std::size_t i = 0; i < bs.dim; ++i)
        for (std::size_t j = 0; j < bs.dim; ++j) a[i][j] = Scalar(field, d[bs.pos[i * bs.dim + j]]);
      if (!matrix_inverse(a)) return;
    }
    keep[code] = 1;
  });

  std::vector<Index> by_candidate(candidates, -1);
  std::vector<std::size_t> codes;
  for (std::size_t code = 0; code < candidates; ++code)
    if (keep[code]) {
      by_candidate[code] = static_cast<Index>(codes.size());
      codes.push_back(code);
    }

  const std::size_t n = codes.size();
  if (n > max_order)
    throw Error(ErrorKind::EnumerationCapExceeded, "group of order " + std::to_string(n) + " exceeds the table cap " +
                                                       std::to_string(max_order));
  std::vector<PolyMap> maps(n, PolyMap::identity(sig, field));
  parallel_for(n, [&](std::size_t k) {
    const auto d = digits_of(codes[k]);
    std::vector<Polynomial> comps(sig.coords(), Polynomial(field, sig.coords()));
    for (std::size_t s = 0; s < slots.size(); ++s)
      comps[slots[s].target].add_term(slots[s].exponents, Scalar(field, static_cast<long>(d[s])));
    maps[k] = PolyMap(sig, sig, field, std::move(comps));
  });

  AutGroup out{sig, field, FiniteGroup::from_table({{0}}), {}, slots, candidates, by_candidate};
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  parallel_for(n, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t code = out.candidate_of(compose(maps[a], maps[b]));
      if (by_candidate[code] < 0)
        throw Error(ErrorKind::InternalInconsistency, "composition left the enumerated set");
      table[a][b] = by_candidate[code];
    }
  });
  out.group = FiniteGroup::from_table(table);

  out.elements.resize(n, NVectAutomorphism{maps[0], maps[0]});
  for (std::size_t k = 0; k < n; ++k)
    out.elements[k] = NVectAutomorphism{maps[k], maps[static_cast<std::size_t>(out.group.inverse(static_cast<Index>(k)))]};
  return out;
}

P54Report verify_p54(const GradedSignature& sig, Field field, std::size_t max_candidates, std::size_t max_order) {
  AutGroup aut = enumerate_aut(sig, field, max_candidates, max_order);
  const std::size_t n = sig.gradings(), order = aut.group.order();

  std::vector<Subgroup> gi;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Index> members;
    for (std::size_t k = 0; k < order; ++k)
      if (gi_membership(aut.elements[k], i)) members.push_back(static_cast<Index>(k));
    gi.emplace_back(aut.group, std::move(members));
  }
  std::vector<Index> stat;
  for (std::size_t k = 0; k < order; ++k)
    if (is_statomorphism(aut.elements[k])) stat.push_back(static_cast<Index>(k));
  Subgroup statomorphisms(aut.group, std::move(stat));

  std::map<unsigned, std::size_t> orders;
  Subgroup core = Subgroup::whole(aut.group);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subgroup acc = Subgroup::whole(aut.group);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) acc = intersect(acc, gi[i]);
    orders[mask] = acc.order();
    if (mask == (1u << n) - 1) core = acc;
  }

  bool linear = true;
  for (const auto& a : aut.elements)
    for (const auto& b : sig.blocks()) {
      if (std::popcount(b.key) != 1) continue;
      for (std::size_t c = b.start; c < b.start + b.dim; ++c)
        for (const auto& [e, coef] : a.map.component(c).terms())
          if (monomial_weight(sig, e) != b.weight) linear = false;
    }

  bool gi_normal = std::all_of(gi.begin(), gi.end(), [](const Subgroup& h) { return is_normal(h); });
  auto witness = verify_ntuple(aut.group, gi);
  const bool stat_normal = is_normal(statomorphisms);
  const bool stat_core = statomorphisms.is_subset_of(core);
  return P54Report{std::move(aut), std::move(gi), std::move(orders), std::move(statomorphisms), stat_normal,
                   stat_core, linear, gi_normal, std::move(witness)};
}

NVectAutomorphism random_automorphism(const GradedSignature& sig, Field field, std::mt19937_64& rng,
                                      std::size_t max_terms) {
  require_vector_signature(sig);
  return make_automorphism(random_triangular_automorphism(sig, field, rng, false, max_terms));
}

AffineAutomorphism make_affine_automorphism(const PolyMap& map) {
  const auto& sig = map.sig_in();
  require_vector_signature(sig);
  if (!(sig == map.sig_out())) throw Error(ErrorKind::SignatureMismatch, "automorphisms map a signature to itself");
  for (std::size_t c = 0; c < sig.coords(); ++c)
    for (const auto& [e, coef] : map.component(c).terms()) {
      if (!weight_at_most(monomial_weight(sig, e), sig.weight(c)))
        throw Error(ErrorKind::IllegalMonomial, slot_name(sig, c, e));
    }
  return AffineAutomorphism{map, invert(map)};
}

AffineAutomorphism make_affine_automorphism(const GradedSignature& sig, Field field,
                                            const std::vector<AutTerm>& terms) {
  std::vector<Polynomial> comps(sig.coords(), Polynomial(field, sig.coords()));
  for (const auto& t : terms) {
    if (t.target >= sig.coords()) throw Error(ErrorKind::InvalidInput, "target coordinate out of range");
    comps[t.target].add_term(t.exponents, t.coef);
  }
  return make_affine_automorphism(PolyMap(sig, sig, field, std::move(comps)));
}

AffineAutomorphism compose(const AffineAutomorphism& a, const AffineAutomorphism& b) {
  return AffineAutomorphism{compose(a.map, b.map), compose(b.inverse, a.inverse)};
}

NVectAutomorphism linear_part(const AffineAutomorphism& a) {
  const auto& sig = a.map.sig_in();
  std::vector<Polynomial> comps;
  for (std::size_t c = 0; c < sig.coords(); ++c) {
    Polynomial p(a.map.field(), sig.coords());
    for (const auto& [e, coef] : a.map.component(c).terms())
      if (monomial_weight(sig, e) == sig.weight(c)) p.add_term(e, coef);
    comps.push_back(p);
  }
  return make_automorphism(PolyMap(sig, sig, a.map.field(), std::move(comps)));
}

bool linear_part_is_multiplicative(const AffineAutomorphism& a, const AffineAutomorphism& b) {
  return linear_part(compose(a, b)).map == compose(linear_part(a), linear_part(b)).map;
}

AffineAutomorphism random_affine_automorphism(const GradedSignature& sig, Field field, std::mt19937_64& rng,
                                              std::size_t max_terms) {
  require_vector_signature(sig);
  PolyMap m = random_triangular_automorphism(sig, field, rng, true, max_terms);
  // add lower-degree terms tau < sigma built from other blocks
  std::vector<Polynomial> comps = m.components();
  for (const auto& b : sig.blocks()) {
    if (std::popcount(b.key) < 2) continue;
    for (unsigned sub = (b.key - 1) & b.key; sub; sub = (sub - 1) & b.key) {
      std::vector<int> w(sig.gradings());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = (sub >> i) & 1u;
      for (std::size_t c = b.start; c < b.start + b.dim; ++c)
        comps[c] = comps[c] + random_homogeneous(sig, field, w, rng, 1);
    }
  }
  return make_affine_automorphism(PolyMap(sig, sig, field, std::move(comps)));
}

}  // namespace npb
