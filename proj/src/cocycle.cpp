#include "npb/cocycle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "npb/parallel.hpp"

namespace npb {

// ---------------------------------------------------------------- nerves

CoverNerve::CoverNerve(std::size_t charts, std::vector<std::pair<std::size_t, std::size_t>> pair_list,
                       std::vector<std::array<std::size_t, 3>> triples)
    : charts_(charts) {
  if (charts == 0) throw Error(ErrorKind::InvalidInput, "a nerve needs at least one chart");
  std::set<std::pair<std::size_t, std::size_t>> ps;
  for (auto [i, j] : pair_list) {
    if (i >= charts || j >= charts) throw Error(ErrorKind::InvalidInput, "overlap names a missing chart");
    if (i != j) ps.insert({std::min(i, j), std::max(i, j)});
  }
  pairs_.assign(ps.begin(), ps.end());
  std::set<std::array<std::size_t, 3>> ts;
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    if (t[2] >= charts) throw Error(ErrorKind::InvalidInput, "triple names a missing chart");
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorKind::InvalidInput, "triple repeats a chart");
    if (!overlaps(t[0], t[1]) || !overlaps(t[1], t[2]) || !overlaps(t[0], t[2]))
      throw Error(ErrorKind::InvalidInput, "triple (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                               std::to_string(t[2]) + ") without its pair overlaps");
    ts.insert(t);
  }
  triples_.assign(ts.begin(), ts.end());
}

CoverNerve CoverNerve::full(std::size_t charts) {
  std::vector<std::pair<std::size_t, std::size_t>> ps;
  std::vector<std::array<std::size_t, 3>> ts;
  for (std::size_t i = 0; i < charts; ++i)
    for (std::size_t j = i + 1; j < charts; ++j) {
      ps.push_back({i, j});
      for (std::size_t k = j + 1; k < charts; ++k) ts.push_back({i, j, k});
    }
  return CoverNerve(charts, ps, ts);
}

bool CoverNerve::overlaps(std::size_t i, std::size_t j) const {
  if (i == j) return i < charts_;
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{std::min(i, j), std::max(i, j)});
}

bool CoverNerve::has_triple(std::size_t i, std::size_t j, std::size_t k) const {
  std::array<std::size_t, 3> t{i, j, k};
  std::sort(t.begin(), t.end());
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

// ---------------------------------------------------------------- laws

std::string CocycleCheck::message() const {
  if (valid) return "valid";
  std::string w;
  for (std::size_t k = 0; k < witness.size(); ++k) w += (k ? "," : "") + std::to_string(witness[k]);
  return law + " law fails at (" + w + ")";
}

namespace {

template <class T, class Mul, class Eq, class IsId>
CocycleCheck check_generic(const Cocycle<T>& c, Mul mul, Eq eq, IsId is_id) {
  const auto& nv = c.nerve;
  auto fail = [](std::string law, std::vector<std::size_t> w) { return CocycleCheck{false, std::move(law), std::move(w)}; };
  for (const auto& [key, v] : c.values)
    if (!nv.overlaps(key.first, key.second)) return fail("extra", {key.first, key.second});
  for (std::size_t i = 0; i < nv.charts(); ++i) {
    auto it = c.values.find({i, i});
    if (it == c.values.end()) return fail("missing", {i, i});
    if (!is_id(it->second)) return fail("identity", {i, i});
  }
  for (auto [i, j] : nv.pairs()) {
    auto a = c.values.find({i, j}), b = c.values.find({j, i});
    if (a == c.values.end()) return fail("missing", {i, j});
    if (b == c.values.end()) return fail("missing", {j, i});
    if (!is_id(mul(a->second, b->second))) return fail("inverse", {i, j});
  }
  for (const auto& t : nv.triples())
    if (!eq(mul(c.at(t[0], t[1]), c.at(t[1], t[2])), c.at(t[0], t[2]))) return fail("triple", {t[0], t[1], t[2]});
  return {};
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

bool perm_is_id(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<Index>(x)) return false;
  return true;
}

bool map_is_id(const PolyMap& m) { return m.sig_in() == m.sig_out() && m == PolyMap::identity(m.sig_in(), m.field()); }

void require_valid(const CocycleCheck& chk, const std::string& what) {
  if (!chk.valid) throw Error(ErrorKind::NotACocycle, what + ": " + chk.message());
}

}  // namespace

CocycleCheck check_cocycle(const Cocycle<Index>& c, const FiniteGroup& g) {
  for (const auto& [k, v] : c.values)
    if (!g.valid_index(v)) throw Error(ErrorKind::InvalidInput, "cocycle value outside the group");
  return check_generic(
      c, [&](Index a, Index b) { return g.mul(a, b); }, [](Index a, Index b) { return a == b; },
      [&](Index a) { return a == g.identity(); });
}

CocycleCheck check_cocycle(const Cocycle<Perm>& c) {
  return check_generic(c, perm_mul, [](const Perm& a, const Perm& b) { return a == b; }, perm_is_id);
}

CocycleCheck check_cocycle(const Cocycle<PolyMap>& c) {
  return check_generic(
      c, [](const PolyMap& a, const PolyMap& b) { return compose(a, b); },
      [](const PolyMap& a, const PolyMap& b) { return a == b; }, map_is_id);
}

CocycleCheck check_cocycle(const Cocycle<NVectAutomorphism>& c) {
  Cocycle<PolyMap> maps{c.nerve, {}};
  for (const auto& [k, v] : c.values) maps.values.insert_or_assign(k, v.map);
  return check_cocycle(maps);
}

Cocycle<Index> group_cocycle(const CoverNerve& nerve, const FiniteGroup& g,
                             const std::map<std::pair<std::size_t, std::size_t>, Index>& upper) {
  Cocycle<Index> c{nerve, {}};
  for (std::size_t i = 0; i < nerve.charts(); ++i) c.values[{i, i}] = g.identity();
  for (auto [i, j] : nerve.pairs()) c.values[{i, j}] = c.values[{j, i}] = g.identity();
  for (const auto& [key, v] : upper) {
    auto [i, j] = key;
    if (!nerve.overlaps(i, j) || i == j) throw Error(ErrorKind::InvalidInput, "value on a non-overlapping pair");
    if (!g.valid_index(v)) throw Error(ErrorKind::InvalidInput, "cocycle value outside the group");
    c.values[{i, j}] = v;
    c.values[{j, i}] = g.inverse(v);
  }
  return c;
}

Cocycle<NVectAutomorphism> aut_cocycle(const CoverNerve& nerve,
                                       const std::map<std::pair<std::size_t, std::size_t>, NVectAutomorphism>& upper) {
  if (upper.empty()) throw Error(ErrorKind::InvalidInput, "aut_cocycle needs at least one value to fix the model");
  const auto& any = upper.begin()->second;
  const NVectAutomorphism id{PolyMap::identity(any.map.sig_in(), any.map.field()),
                             PolyMap::identity(any.map.sig_in(), any.map.field())};
  Cocycle<NVectAutomorphism> c{nerve, {}};
  for (std::size_t i = 0; i < nerve.charts(); ++i) c.values.insert_or_assign({i, i}, id);
  for (auto [i, j] : nerve.pairs()) {
    c.values.insert_or_assign({i, j}, id);
    c.values.insert_or_assign({j, i}, id);
  }
  for (const auto& [key, v] : upper) {
    auto [i, j] = key;
    if (!nerve.overlaps(i, j) || i == j) throw Error(ErrorKind::InvalidInput, "value on a non-overlapping pair");
    c.values.insert_or_assign({i, j}, v);
    c.values.insert_or_assign({j, i}, NVectAutomorphism{v.inverse, v.map});
  }
  return c;
}

Cocycle<Index> random_cocycle(const CoverNerve& nerve, const FiniteGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order()) - 1);
  std::vector<Index> h(nerve.charts());
  for (auto& x : h) x = pick(rng);
  std::set<std::pair<std::size_t, std::size_t>> in_triple;
  for (const auto& t : nerve.triples()) {
    in_triple.insert({t[0], t[1]});
    in_triple.insert({t[1], t[2]});
    in_triple.insert({t[0], t[2]});
  }
  std::map<std::pair<std::size_t, std::size_t>, Index> upper;
  for (auto [i, j] : nerve.pairs())
    upper[{i, j}] = in_triple.count({i, j}) ? g.mul(h[i], g.inverse(h[j])) : pick(rng);
  return group_cocycle(nerve, g, upper);
}

// ---------------------------------------------------------------- associated bundles (finite fibers)

namespace {

// Dense labels numbered by least point.
std::vector<Index> densify(const std::vector<Index>& labels) {
  std::map<Index, Index> seen;
  std::vector<Index> out(labels.size());
  for (std::size_t p = 0; p < labels.size(); ++p) {
    auto [it, fresh] = seen.try_emplace(labels[p], static_cast<Index>(seen.size()));
    out[p] = it->second;
  }
  return out;
}

Index classes(const std::vector<Index>& dense) {
  return dense.empty() ? 0 : *std::max_element(dense.begin(), dense.end()) + 1;
}

// Permutation of the classes induced by a fiber permutation; nullopt if it does not descend.
std::optional<Perm> descend(const Perm& p, const std::vector<Index>& label) {
  Perm q(static_cast<std::size_t>(classes(label)), -1);
  for (std::size_t x = 0; x < p.size(); ++x) {
    Index& slot = q[static_cast<std::size_t>(label[x])];
    const Index img = label[static_cast<std::size_t>(p[x])];
    if (slot == -1) slot = img;
    else if (slot != img) return std::nullopt;
  }
  return q;
}

Cocycle<Perm> map_values(const Cocycle<Perm>& c, const std::function<Perm(const Perm&)>& f) {
  Cocycle<Perm> r{c.nerve, {}};
  for (const auto& [k, v] : c.values) r.values[k] = f(v);
  return r;
}

}  // namespace

AssociatedBundle associated_cocycle(const Cocycle<Index>& c, const FiberedSpace& m, const GroupHom* tau) {
  const FiniteAction& act = m.action;
  const FiniteGroup& source = tau ? tau->source() : act.group();
  if (tau && !tau->target().same_as(act.group()))
    throw Error(ErrorKind::InvalidInput, "the action must be of the target of tau");
  require_valid(check_cocycle(c, source), "associated_cocycle");
  const std::size_t n = act.points();
  if (m.rho.size() != n || m.rho_prime.size() != n)
    throw Error(ErrorKind::InvalidInput, "projections need one label per fiber point");

  const auto rho = densify(m.rho), rho2 = densify(m.rho_prime);
  const FiniteGroup& g1 = act.group();
  auto left = [&](Index g) {
    Perm p(n);
    const Index inv = g1.inverse(g);
    for (std::size_t x = 0; x < n; ++x) p[x] = act.apply(static_cast<Index>(x), inv);
    return p;
  };
  for (std::size_t g = 0; g < g1.order(); ++g) {
    const Perm p = left(static_cast<Index>(g));
    if (!descend(p, rho))
      throw Error(ErrorKind::ActionIncompatibleWithFibration, "element " + std::to_string(g) + " does not preserve rho");
    if (!descend(p, rho2))
      throw Error(ErrorKind::ActionIncompatibleWithFibration,
                  "element " + std::to_string(g) + " does not preserve rho'");
  }

  // M0: points joined through either projection
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::map<Index, Index> first1, first2;
  for (std::size_t x = 0; x < n; ++x) {
    for (auto* fm : {&first1, &first2}) {
      const Index lab = fm == &first1 ? rho[x] : rho2[x];
      auto [it, fresh] = fm->try_emplace(lab, static_cast<Index>(x));
      if (!fresh) {
        const Index a = find(it->second), b = find(static_cast<Index>(x));
        parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::vector<Index> root(n);
  for (std::size_t x = 0; x < n; ++x) root[x] = find(static_cast<Index>(x));
  const auto core = densify(root);
  // class of M/rho -> class of M0
  std::vector<Index> rho_to_core(static_cast<std::size_t>(classes(rho))), rho2_to_core(static_cast<std::size_t>(classes(rho2)));
  for (std::size_t x = 0; x < n; ++x) {
    rho_to_core[static_cast<std::size_t>(rho[x])] = core[x];
    rho2_to_core[static_cast<std::size_t>(rho2[x])] = core[x];
  }

  AssociatedBundle out;
  out.fiber = Cocycle<Perm>{c.nerve, {}};
  for (const auto& [k, v] : c.values) out.fiber.values[k] = left(tau ? (*tau)(v) : v);
  out.quotient = map_values(out.fiber, [&](const Perm& p) { return *descend(p, rho); });
  out.quotient_prime = map_values(out.fiber, [&](const Perm& p) { return *descend(p, rho2); });
  const auto via1 = map_values(out.quotient, [&](const Perm& p) { return *descend(p, rho_to_core); });
  const auto via2 = map_values(out.quotient_prime, [&](const Perm& p) { return *descend(p, rho2_to_core); });
  out.core = via1;
  out.corners_commute = via1.values == via2.values &&
                        via1.values == map_values(out.fiber, [&](const Perm& p) { return *descend(p, core); }).values;
  out.core_trivial = std::all_of(out.core.values.begin(), out.core.values.end(),
                                 [](const auto& kv) { return perm_is_id(kv.second); });
  out.fiber_check = check_cocycle(out.fiber);
  out.quotient_check = check_cocycle(out.quotient);
  out.quotient_prime_check = check_cocycle(out.quotient_prime);
  return out;
}

FiberedSpace standard_fibered_space(const AutGroup& aut, std::size_t max_points) {
  const auto& sig = aut.sig;
  if (sig.gradings() < 2) throw Error(ErrorKind::InvalidInput, "a fibered model needs two sides");
  const std::size_t p = aut.field.characteristic(), m = sig.coords();
  std::size_t points = 1;
  for (std::size_t c = 0; c < m; ++c) {
    if (points > max_points / p) throw Error(ErrorKind::CapExceeded, "fiber model has too many points");
    points *= p;
  }
  auto decode = [&](std::size_t x) {
    std::vector<Scalar> v;
    for (std::size_t c = 0; c < m; ++c, x /= p) v.emplace_back(aut.field, static_cast<long>(x % p));
    return v;
  };
  auto encode = [&](const std::vector<Scalar>& v) {
    std::size_t x = 0;
    for (std::size_t c = m; c-- > 0;) x = x * p + static_cast<std::size_t>(v[c].residue());
    return static_cast<Index>(x);
  };
  std::vector<std::vector<Index>> act(aut.group.order(), std::vector<Index>(points));
  parallel_for(aut.group.order(), [&](std::size_t g) {
    for (std::size_t x = 0; x < points; ++x) act[g][x] = encode(aut.elements[g].map.evaluate(decode(x)));
  });
  auto projection = [&](unsigned mask) {
    std::vector<Index> label(points);
    for (std::size_t x = 0; x < points; ++x) {
      const auto v = decode(x);
      std::size_t key = 0;
      for (std::size_t c = m; c-- > 0;)
        if (sig.blocks()[sig.block_of(c)].key == mask) key = key * p + static_cast<std::size_t>(v[c].residue());
      label[x] = static_cast<Index>(key);
    }
    return label;
  };
  return FiberedSpace{FiniteAction(aut.group, points, act, Side::Left), projection(1u), projection(2u)};
}

// ---------------------------------------------------------------- n-tuple vector bundles

namespace {

PolyMap side_map(const PolyMap& m, const GradedSignature::Block& b, const GradedSignature& side) {
  const std::size_t n = m.sig_in().coords();
  std::vector<Polynomial> images(n, Polynomial(m.field(), b.dim));
  for (std::size_t j = 0; j < b.dim; ++j) images[b.start + j] = Polynomial::variable(m.field(), b.dim, j);
  std::vector<Polynomial> comps;
  for (std::size_t j = 0; j < b.dim; ++j) comps.push_back(m.component(b.start + j).substitute(images));
  return PolyMap(side, side, m.field(), std::move(comps));
}

}  // namespace

VectorBundleCocycle associated_cocycle(const Cocycle<NVectAutomorphism>& c) {
  require_valid(check_cocycle(c), "associated_cocycle");
  VectorBundleCocycle out;
  out.total = Cocycle<PolyMap>{c.nerve, {}};
  for (const auto& [k, v] : c.values) out.total.values.insert_or_assign(k, v.map);
  const GradedSignature& sig = c.values.begin()->second.map.sig_in();
  for (std::size_t i = 0; i < sig.gradings(); ++i) {
    const auto it = std::find_if(sig.blocks().begin(), sig.blocks().end(),
                                 [&](const auto& b) { return b.key == (1u << i); });
    if (it == sig.blocks().end())
      throw Error(ErrorKind::InvalidInput, "side " + std::to_string(i + 1) + " has dimension zero");
    const auto side = GradedSignature::multi_ordered(1, {it->dim});
    Cocycle<PolyMap> s{c.nerve, {}};
    for (const auto& [k, v] : c.values) s.values.insert_or_assign(k, side_map(v.map, *it, side));
    out.side_checks.push_back(check_cocycle(s));
    out.sides.push_back(std::move(s));
  }
  out.total_check = check_cocycle(out.total);
  return out;
}

VectorBundleCocycle associated_cocycle(const Cocycle<Index>& c, const AutGroup& aut) {
  require_valid(check_cocycle(c, aut.group), "associated_cocycle");
  Cocycle<NVectAutomorphism> a{c.nerve, {}};
  for (const auto& [k, v] : c.values) a.values.insert_or_assign(k, aut.elements[static_cast<std::size_t>(v)]);
  return associated_cocycle(a);
}

Cocycle<NVectAutomorphism> frame_cocycle(const Cocycle<PolyMap>& dvb) {
  require_valid(check_cocycle(dvb), "frame_cocycle");
  Cocycle<NVectAutomorphism> out{dvb.nerve, {}};
  for (const auto& [k, v] : dvb.values) out.values.insert_or_assign(k, make_automorphism(v));
  return out;
}

Cocycle<Index> frame_cocycle(const Cocycle<PolyMap>& dvb, const AutGroup& aut) {
  require_valid(check_cocycle(dvb), "frame_cocycle");
  Cocycle<Index> out{dvb.nerve, {}};
  for (const auto& [k, v] : dvb.values) out.values[k] = aut.index_of(v);
  return out;
}

// ---------------------------------------------------------------- coboundaries

CohomologyResult are_cohomologous(const Cocycle<Index>& c1, const Cocycle<Index>& c2, const FiniteGroup& g,
                                  std::size_t max_families) {
  const auto& nv = c1.nerve;
  if (nv.charts() != c2.nerve.charts() || nv.pairs() != c2.nerve.pairs() || nv.triples() != c2.nerve.triples())
    throw Error(ErrorKind::InvalidInput, "cocycles over different nerves");
  require_valid(check_cocycle(c1, g), "first cocycle");
  require_valid(check_cocycle(c2, g), "second cocycle");
  std::size_t families = 1;
  for (std::size_t i = 0; i < nv.charts(); ++i) {
    if (families > max_families / g.order())
      throw Error(ErrorKind::SearchCapExceeded, std::to_string(g.order()) + "^" + std::to_string(nv.charts()) +
                                                    " families exceed the cap " + std::to_string(max_families));
    families *= g.order();
  }

  // breadth-first order per component; lambda of a non-root chart is forced
  std::vector<std::vector<std::size_t>> adj(nv.charts());
  for (auto [i, j] : nv.pairs()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> seen(nv.charts(), 0);
  CohomologyResult res;
  res.lambda.assign(nv.charts(), g.identity());
  for (std::size_t r = 0; r < nv.charts(); ++r) {
    if (seen[r]) continue;
    std::vector<std::size_t> order{r};
    std::vector<std::size_t> via(nv.charts(), r);
    seen[r] = 1;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (auto j : adj[order[k]])
        if (!seen[j]) {
          seen[j] = 1;
          via[j] = order[k];
          order.push_back(j);
        }
    auto attempt = [&](Index root, std::vector<Index>& lam) {
      lam[r] = root;
      for (std::size_t k = 1; k < order.size(); ++k) {
        const std::size_t j = order[k], i = via[j];
        // g'_ij = l_i g_ij l_j^-1  =>  l_j = g'_ij^-1 l_i g_ij
        lam[j] = g.mul(g.mul(g.inverse(c2.at(i, j)), lam[i]), c1.at(i, j));
      }
      for (auto i : order)
        for (auto j : adj[i])
          if (c2.at(i, j) != g.mul(g.mul(lam[i], c1.at(i, j)), g.inverse(lam[j]))) return false;
      return true;
    };
    auto hit = parallel_find_first(g.order(), [&](std::size_t root) {
      std::vector<Index> lam(nv.charts(), g.identity());
      return attempt(static_cast<Index>(root), lam);
    });
    if (!hit) {
      res.families_examined += g.order();
      res.lambda.clear();
      return res;
    }
    res.families_examined += *hit + 1;
    attempt(static_cast<Index>(*hit), res.lambda);
  }
  res.cohomologous = true;
  return res;
}

// ---------------------------------------------------------------- second-order tangent law

GradedSignature t2_signature(std::size_t m) { return GradedSignature::simple({m, m}, m); }

PolyMap t2_transition(const std::vector<Polynomial>& chart_change) {
  const std::size_t m = chart_change.size();
  if (m == 0) throw Error(ErrorKind::InvalidInput, "empty chart change");
  const Field f = chart_change[0].field();
  for (const auto& p : chart_change)
    if (p.nvars() != m || !(p.field() == f))
      throw Error(ErrorKind::InvalidInput, "chart change must be m polynomials in m variables over one field");

  Matrix jac0(m, std::vector<Scalar>(m, Scalar::zero(f)));
  const std::vector<Scalar> origin(m, Scalar::zero(f));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) jac0[a][b] = chart_change[a].derivative(b).evaluate(origin);
  if (!matrix_inverse(jac0)) throw Error(ErrorKind::NotInvertibleChart, "Jacobian at the origin is singular");

  const auto sig = t2_signature(m);
  const std::size_t n = 3 * m;
  auto xd = [&](std::size_t b) { return Polynomial::variable(f, n, m + b); };
  auto xdd = [&](std::size_t b) { return Polynomial::variable(f, n, 2 * m + b); };
  std::vector<Polynomial> comps(n, Polynomial(f, n));
  for (std::size_t a = 0; a < m; ++a) {
    comps[a] = chart_change[a].extended(n);
    for (std::size_t b = 0; b < m; ++b) {
      const Polynomial d = chart_change[a].derivative(b);
      comps[m + a] = comps[m + a] + d.extended(n) * xd(b);
      comps[2 * m + a] = comps[2 * m + a] + d.extended(n) * xdd(b);
      for (std::size_t c = 0; c < m; ++c)
        comps[2 * m + a] = comps[2 * m + a] + d.derivative(c).extended(n) * xd(b) * xd(c);
    }
  }
  PolyMap out(sig, sig, f, std::move(comps));
  if (!is_graded_morphism(out)) throw Error(ErrorKind::InternalInconsistency, "T2 transition is not weight preserving");
  return out;
}

bool is_fiber_linear(const PolyMap& m) {
  const auto& in = m.sig_in();
  const auto& out = m.sig_out();
  for (std::size_t c = 0; c < out.coords(); ++c) {
    if (out.total_weight(c) == 0) continue;
    for (const auto& [e, coef] : m.component(c).terms()) {
      unsigned deg = 0;
      for (std::size_t v = 0; v < e.size(); ++v)
        if (in.total_weight(v) > 0) deg += e[v];
      if (deg > 1) return false;
    }
  }
  return true;
}

}  // namespace npb
