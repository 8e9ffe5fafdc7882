#include "npb/principal.hpp"

#include <algorithm>
#include <set>

#include "npb/parallel.hpp"

namespace npb {

namespace {

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }
std::string str(Index i) { return std::to_string(i); }

void require_parent(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_as(g)) throw Error(ErrorKind::ParentMismatch, "subgroup of a different group");
}

/// Least a in ambient with a^-1 H a != H.
std::optional<Index> normal_in(const Subgroup& h, const Subgroup& ambient) {
  const FiniteGroup& g = h.parent();
  for (Index a : ambient.members())
    for (Index x : h.members())
      if (!h.contains(g.conjugate(x, a))) return a;
  return std::nullopt;
}

std::optional<Index> first_missing(const Subgroup& ambient, const Subgroup& part) {
  for (Index a : ambient.members())
    if (!part.contains(a)) return a;
  return std::nullopt;
}

std::optional<Violation> check_normal(const std::vector<Subgroup>& subs, const Subgroup& ambient,
                                      const std::vector<std::string>& names, const std::string& ambient_name) {
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (auto w = normal_in(subs[i], ambient))
      return Violation{ErrorKind::NotNormal, static_cast<int>(i + 1), *w,
                       names[i] + " is not normal in " + ambient_name + ": conjugation by element " + str(*w)};
  return std::nullopt;
}

std::optional<Violation> check_generation(const std::vector<Subgroup>& subs, const Subgroup& ambient,
                                          const std::vector<std::string>& names, const std::string& ambient_name) {
  const auto j = join(ambient.parent(), subs);
  if (auto w = first_missing(ambient, j)) {
    std::string list;
    for (std::size_t i = 0; i < names.size(); ++i) list += (i ? ", " : "") + names[i];
    return Violation{ErrorKind::NotGenerating, 0, *w,
                     list + " do not generate " + ambient_name + ": element " + str(*w) + " is missing"};
  }
  return std::nullopt;
}

/// sub as a subgroup of as_group(ambient).
Subgroup localize(const EmbeddedGroup& eg, const Subgroup& sub) {
  std::vector<Index> local;
  for (std::size_t k = 0; k < eg.embedding.size(); ++k)
    if (sub.contains(eg.embedding[k])) local.push_back(static_cast<Index>(k));
  return Subgroup(eg.group, local);
}

std::vector<Index> local_index(const Subgroup& h) {
  std::vector<Index> local(h.parent().order(), -1);
  for (std::size_t k = 0; k < h.order(); ++k) local[sz(h.members()[k])] = static_cast<Index>(k);
  return local;
}

}  // namespace

// ---------------------------------------------------------------------------
// Double and n-tuple verification

DoubleVerdict verify_double(const Subgroup& g1, const Subgroup& g2) {
  const FiniteGroup& gamma = g1.parent();
  require_parent(gamma, g2);
  const auto whole = Subgroup::whole(gamma);
  const std::vector<Subgroup> subs{g1, g2};
  const std::vector<std::string> names{"G", "G'"};
  DoubleVerdict v;
  if ((v.violation = check_normal(subs, whole, names, "Gamma"))) return v;
  if ((v.violation = check_generation(subs, whole, names, "Gamma"))) return v;
  auto core = intersect(g1, g2);
  auto e1 = as_group(g1);
  auto e2 = as_group(g2);
  auto q1 = quotient(localize(e1, core)).group;
  auto q2 = quotient(localize(e2, core)).group;
  v.dpg = DoublePrincipalGroup{gamma, g1, g2, std::move(core), std::move(q1), std::move(q2)};
  return v;
}

DoublePrincipalGroup make_double(const Subgroup& g1, const Subgroup& g2) {
  auto v = verify_double(g1, g2);
  if (!v.ok()) throw Error(v.violation->kind, v.violation->message);
  return *v.dpg;
}

namespace {

bool visit_ntuple(const std::vector<int>& path, const Subgroup& ambient, const std::string& ambient_name,
                  const std::vector<Subgroup>& subs, const std::vector<std::string>& names,
                  std::vector<NTupleNode>& trace) {
  const std::size_t at = trace.size();
  std::string label = "(" + ambient_name + ";";
  for (std::size_t i = 0; i < names.size(); ++i) label += (i ? ", " : " ") + names[i];
  label += ")";
  trace.push_back(NTupleNode{path, ambient, subs, false, std::nullopt, label});

  std::optional<Violation> v = check_normal(subs, ambient, names, ambient_name);
  if (!v) v = check_generation(subs, ambient, names, ambient_name);
  bool ok = !v.has_value();
  trace[at].violation = v;

  const std::size_t n = subs.size();
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Subgroup> child;
      std::vector<std::string> child_names;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        child.push_back(intersect(subs[j], subs[i]));
        child_names.push_back(names[j] + "n" + names[i]);
      }
      auto child_path = path;
      child_path.push_back(static_cast<int>(i + 1));
      ok = visit_ntuple(child_path, subs[i], names[i], child, child_names, trace) && ok;
    }
  }
  trace[at].ok = ok;
  return ok;
}

}  // namespace

NTupleWitness verify_ntuple(const FiniteGroup& gamma, const std::vector<Subgroup>& subgroups) {
  if (subgroups.empty()) throw Error(ErrorKind::InvalidInput, "an n-tuple needs n >= 1 subgroups");
  for (const auto& s : subgroups) require_parent(gamma, s);
  NTupleWitness w{gamma, subgroups, false, {}, false};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < subgroups.size(); ++i) names.push_back("G" + std::to_string(i + 1));
  w.verdict = visit_ntuple({}, Subgroup::whole(gamma), "Gamma", subgroups, names, w.trace);
  if (w.verdict) {
    w.pairwise_double = true;
    for (std::size_t i = 0; i < subgroups.size() && w.pairwise_double; ++i)
      for (std::size_t j = i + 1; j < subgroups.size(); ++j)
        if (!verify_double(subgroups[i], subgroups[j]).ok()) {
          w.pairwise_double = false;
          break;
        }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Vacancy, dressing, semidirect products

VacancyReport vacancy(const DoublePrincipalGroup& dpg) {
  const FiniteGroup& g = dpg.gamma;
  std::vector<std::size_t> fiber(g.order());
  for (Index a : dpg.g1.members())
    for (Index b : dpg.g2.members()) ++fiber[sz(g.mul(a, b))];
  VacancyReport r;
  r.vacant = dpg.core.order() == 1;
  r.min_fiber = *std::min_element(fiber.begin(), fiber.end());
  r.max_fiber = *std::max_element(fiber.begin(), fiber.end());
  r.product_bijective = r.min_fiber == 1 && r.max_fiber == 1;
  if (r.vacant != r.product_bijective)
    throw Error(ErrorKind::InternalInconsistency, "vacancy and bijectivity of the product map disagree");
  return r;
}

DressingAction dressing(const DoublePrincipalGroup& dpg) {
  const FiniteGroup& gm = dpg.gamma;
  const auto& G = dpg.g1.members();
  const auto& H = dpg.g2.members();
  const std::size_t ng = G.size(), nh = H.size();
  const auto lg = local_index(dpg.g1);
  const auto lh = local_index(dpg.g2);

  DressingAction d;
  d.dpg = &dpg;
  d.g_on_gprime.resize(ng * nh);
  d.gprime_on_g.resize(nh * ng);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      d.g_on_gprime[a * nh + b] = gm.conjugate(G[a], H[b]);
      d.gprime_on_g[b * ng + a] = gm.conjugate(H[b], G[a]);
    }
  // g_{g'} and g'_g for arbitrary Gamma indices of members.
  auto gd = [&](Index g, Index h) { return d.g_on_gprime[sz(lg[sz(g)]) * nh + sz(lh[sz(h)])]; };
  auto hd = [&](Index h, Index g) { return d.gprime_on_g[sz(lh[sz(h)]) * ng + sz(lg[sz(g)])]; };
  auto inv = [&](Index x) { return gm.inverse(x); };
  auto mul = [&](Index x, Index y) { return gm.mul(x, y); };

  auto law = [&](const std::string& name, std::size_t outer, std::size_t inner,
                 const std::function<bool(std::size_t, std::size_t)>& holds) {
    auto bad = parallel_find_first(outer * inner, [&](std::size_t i) { return !holds(i / inner, i % inner); });
    if (bad)
      throw Error(ErrorKind::InternalInconsistency,
                  "dressing law '" + name + "' fails at pair (" + std::to_string(*bad / inner) + "," +
                      std::to_string(*bad % inner) + ")");
    d.laws.emplace_back(name, outer * inner);
  };

  law("g_{g'} in G", ng, nh, [&](std::size_t a, std::size_t b) { return dpg.g1.contains(d.g_on_gprime[a * nh + b]); });
  law("g'_g in G'", nh, ng, [&](std::size_t b, std::size_t a) { return dpg.g2.contains(d.gprime_on_g[b * ng + a]); });
  law("g_{g'1 g'2} = (g_{g'1})_{g'2}", ng, nh * nh, [&](std::size_t a, std::size_t bc) {
    const Index h1 = H[bc / nh], h2 = H[bc % nh];
    return gd(G[a], mul(h1, h2)) == gd(gd(G[a], h1), h2);
  });
  law("(g1 g2)_{g'} = (g1)_{g'} (g2)_{g'}", ng * ng, nh, [&](std::size_t ab, std::size_t c) {
    const Index g1 = G[ab / ng], g2 = G[ab % ng];
    return gd(mul(g1, g2), H[c]) == mul(gd(g1, H[c]), gd(g2, H[c]));
  });
  law("g'_{g1 g2} = (g'_{g1})_{g2}", nh, ng * ng, [&](std::size_t b, std::size_t ac) {
    const Index g1 = G[ac / ng], g2 = G[ac % ng];
    return hd(H[b], mul(g1, g2)) == hd(hd(H[b], g1), g2);
  });
  law("(g'1 g'2)_g = (g'1)_g (g'2)_g", nh * nh, ng, [&](std::size_t bc, std::size_t a) {
    const Index h1 = H[bc / nh], h2 = H[bc % nh];
    return hd(mul(h1, h2), G[a]) == mul(hd(h1, G[a]), hd(h2, G[a]));
  });
  law("g g' = g' g_{g'} = g'_{g^-1} g", ng, nh, [&](std::size_t a, std::size_t b) {
    const Index g = G[a], h = H[b];
    const Index lhs = mul(g, h);
    return lhs == mul(h, gd(g, h)) && lhs == mul(hd(h, inv(g)), g);
  });
  law("g' g = g g'_g = g_{g'^-1} g'", ng, nh, [&](std::size_t a, std::size_t b) {
    const Index g = G[a], h = H[b];
    const Index lhs = mul(h, g);
    return lhs == mul(g, hd(h, g)) && lhs == mul(gd(g, inv(h)), h);
  });
  law("(g')_{g^-1} (g')^-1 = g (g_{g'^-1})^-1", ng, nh, [&](std::size_t a, std::size_t b) {
    const Index g = G[a], h = H[b];
    return mul(hd(h, inv(g)), inv(h)) == mul(g, inv(gd(g, inv(h))));
  });
  return d;
}

Semidirect semidirect(const FiniteGroup& gprime, const FiniteGroup& g, const DressingFn& act) {
  const std::size_t nh = gprime.order(), ng = g.order();
  std::vector<Index> table(ng * nh);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      const Index v = act(static_cast<Index>(a), static_cast<Index>(b));
      if (!g.valid_index(v)) throw Error(ErrorKind::InvalidInput, "action value out of range");
      table[a * nh + b] = v;
    }
  auto at = [&](Index a, Index b) { return table[sz(a) * nh + sz(b)]; };
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NotAnActionByAutomorphisms, what); };
  const Index e = gprime.identity();
  for (std::size_t a = 0; a < ng; ++a)
    if (at(static_cast<Index>(a), e) != static_cast<Index>(a)) fail("g_{e'} != g at g=" + std::to_string(a));
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b)
      for (std::size_t c = 0; c < nh; ++c)
        if (at(static_cast<Index>(a), gprime.mul(static_cast<Index>(b), static_cast<Index>(c))) !=
            at(at(static_cast<Index>(a), static_cast<Index>(b)), static_cast<Index>(c)))
          fail("g_{g'1 g'2} != (g_{g'1})_{g'2} at g=" + std::to_string(a) + ", g'1=" + std::to_string(b) +
               ", g'2=" + std::to_string(c));
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < ng; ++b)
      for (std::size_t c = 0; c < nh; ++c)
        if (at(g.mul(static_cast<Index>(a), static_cast<Index>(b)), static_cast<Index>(c)) !=
            g.mul(at(static_cast<Index>(a), static_cast<Index>(c)), at(static_cast<Index>(b), static_cast<Index>(c))))
          fail("(g1 g2)_{g'} != (g1)_{g'} (g2)_{g'} at g1=" + std::to_string(a) + ", g2=" + std::to_string(b) +
               ", g'=" + std::to_string(c));

  const std::size_t n = ng * nh;
  std::vector<Index> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto hp = static_cast<Index>(x / ng), gp = static_cast<Index>(x % ng);
    for (std::size_t y = 0; y < n; ++y) {
      const auto h1 = static_cast<Index>(y / ng), g1 = static_cast<Index>(y % ng);
      flat[x * n + y] = static_cast<Index>(sz(gprime.mul(hp, h1)) * ng + sz(g.mul(at(gp, h1), g1)));
    }
  }
  auto group = FiniteGroup::from_trusted_table(n, std::move(flat));
  Semidirect sd{group, gprime, g, Subgroup::trivial(group), Subgroup::trivial(group)};
  for (std::size_t x = 0; x < n; ++x) {
    const auto hp = static_cast<Index>(x / ng), gp = static_cast<Index>(x % ng);
    const Index hinv = gprime.inverse(hp);
    if (group.inverse(static_cast<Index>(x)) != sd.pair(hinv, at(g.inverse(gp), hinv)))
      throw Error(ErrorKind::InternalInconsistency, "inverse formula fails at element " + std::to_string(x));
  }
  std::vector<Index> gs, hs;
  for (std::size_t a = 0; a < ng; ++a) gs.push_back(sd.pair(e, static_cast<Index>(a)));
  for (std::size_t b = 0; b < nh; ++b) hs.push_back(sd.pair(static_cast<Index>(b), g.identity()));
  sd.normal_g = Subgroup(group, gs);
  sd.gprime_part = Subgroup(group, hs);
  if (!is_normal(sd.normal_g)) throw Error(ErrorKind::InternalInconsistency, "G is not normal in G' x| G");
  return sd;
}

DressingProduct dressing_product(const DoublePrincipalGroup& dpg) {
  const FiniteGroup& gm = dpg.gamma;
  auto eg = as_group(dpg.g1);
  auto eh = as_group(dpg.g2);
  const auto lg = local_index(dpg.g1);
  auto sd = semidirect(eh.group, eg.group, [&](Index a, Index b) {
    return lg[sz(gm.conjugate(eg.embedding[sz(a)], eh.embedding[sz(b)]))];
  });
  std::vector<Index> map(sd.group.order());
  for (std::size_t b = 0; b < eh.group.order(); ++b)
    for (std::size_t a = 0; a < eg.group.order(); ++a)
      map[sz(sd.pair(static_cast<Index>(b), static_cast<Index>(a)))] = gm.mul(eh.embedding[b], eg.embedding[a]);
  GroupHom m(sd.group, gm, map);
  return {std::move(sd), std::move(m)};
}

ExactnessReport exact_sequence(const DoublePrincipalGroup& dpg) {
  const FiniteGroup& gm = dpg.gamma;
  auto by_g2 = quotient(dpg.g2);  // Gamma/G'
  auto by_g1 = quotient(dpg.g1);  // Gamma/G
  auto target = catalog::direct_product(by_g2.group, by_g1.group);
  std::vector<Index> phi(gm.order());
  for (std::size_t x = 0; x < gm.order(); ++x)
    phi[x] = static_cast<Index>(sz(by_g2.projection(static_cast<Index>(x))) * by_g1.group.order() +
                                sz(by_g1.projection(static_cast<Index>(x))));
  ExactnessReport r;
  r.quotient_orders_match = by_g2.group.order() == dpg.q1.order() && by_g1.group.order() == dpg.q2.order();
  r.image_order = std::set<Index>(phi.begin(), phi.end()).size();
  try {
    GroupHom h(gm, target, phi);
    r.is_hom = true;
    auto k = h.kernel();
    r.kernel_order = k.order();
    r.kernel_is_core = k == dpg.core;
  } catch (const Error&) {
    r.is_hom = false;
  }
  return r;
}

bool dpg_morphism_check(const GroupHom& phi, const DoublePrincipalGroup& source, const DoublePrincipalGroup& target) {
  if (!phi.source().same_as(source.gamma) || !phi.target().same_as(target.gamma))
    throw Error(ErrorKind::ParentMismatch, "homomorphism does not connect the given groups");
  return phi.image(source.g1).is_subset_of(target.g1) && phi.image(source.g2).is_subset_of(target.g2);
}

// ---------------------------------------------------------------------------
// Two principal actions on one set

namespace {

void require_free(const FiniteAction& a, const char* which) {
  auto r = action_check(a);
  if (!r.is_free)
    throw Error(ErrorKind::PreconditionNotFree, std::string(which) + " fixes point " + str(r.fixed_witness->first) +
                                                    " under element " + str(r.fixed_witness->second));
}

std::string direction(const FiniteAction& a, const FiniteAction& b, const char* name) {
  auto gauge = gauge_groupoid(a);
  auto ind = induced_gauge_action(gauge, b);
  if (!ind.action) return std::string(name) + ": " + ind.failure;
  auto rep = check_compatible(*ind.action);
  if (!rep.compatible) return std::string(name) + ": " + rep.failure;
  if (!rep.pre_principal) return std::string(name) + ": induced action is not pre-principal";
  return {};
}

}  // namespace

CompatibilityReport check_compatibility(const FiniteAction& rho, const FiniteAction& rho_prime) {
  if (rho.points() != rho_prime.points()) throw Error(ErrorKind::InvalidInput, "actions on different point sets");
  require_free(rho, "rho");
  require_free(rho_prime, "rho'");
  CompatibilityReport r;
  const auto f = direction(rho, rho_prime, "rho' on (P x P)/G");
  const auto b = direction(rho_prime, rho, "rho on (P x P)/G'");
  r.forward = f.empty();
  r.backward = b.empty();
  r.failure = !f.empty() ? f : b;
  return r;
}

std::vector<std::vector<Index>> permutation_image(const FiniteAction& a) {
  std::set<std::vector<Index>> perms;
  for (std::size_t g = 0; g < a.group().order(); ++g) {
    auto p = a.permutation(static_cast<Index>(g));
    perms.emplace(p.begin(), p.end());
  }
  return {perms.begin(), perms.end()};
}

PipelineResult gamma_from_actions(const FiniteAction& rho, const FiniteAction& rho_prime) {
  const std::size_t np = rho.points();
  if (rho_prime.points() != np) throw Error(ErrorKind::InvalidInput, "actions on different point sets");
  if (np == 0) throw Error(ErrorKind::InvalidInput, "empty point set");
  require_free(rho, "rho");
  require_free(rho_prime, "rho'");
  const FiniteGroup& G = rho.group();
  const FiniteGroup& H = rho_prime.group();
  const std::size_t ng = G.order(), nh = H.order();

  // g_{g'} from a single point, then checked at all points.
  std::vector<Index> dress(ng * nh, -1);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t h = 0; h < nh; ++h) {
      const Index target = rho_prime.apply(rho.apply(0, static_cast<Index>(g)), static_cast<Index>(h));
      const Index base = rho_prime.apply(0, static_cast<Index>(h));
      Index found = -1;
      for (std::size_t x = 0; x < ng && found < 0; ++x)
        if (rho.apply(base, static_cast<Index>(x)) == target) found = static_cast<Index>(x);
      const std::string where = "g=" + std::to_string(g) + ", g'=" + std::to_string(h);
      if (found < 0) throw Error(ErrorKind::NotCompatible, "no g_{g'} for " + where + " at point 0");
      for (std::size_t p = 1; p < np; ++p)
        if (rho_prime.apply(rho.apply(static_cast<Index>(p), static_cast<Index>(g)), static_cast<Index>(h)) !=
            rho.apply(rho_prime.apply(static_cast<Index>(p), static_cast<Index>(h)), found))
          throw Error(ErrorKind::NotCompatible, "no g_{g'} for " + where + ": point " + std::to_string(p) +
                                                    " disagrees with point 0");
      dress[g * nh + h] = found;
    }

  auto sd = semidirect(H, G, [&](Index g, Index h) { return dress[sz(g) * nh + sz(h)]; });

  std::vector<std::vector<Index>> rows(sd.group.order(), std::vector<Index>(np));
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t p = 0; p < np; ++p)
        rows[sz(sd.pair(static_cast<Index>(h), static_cast<Index>(g)))][p] =
            rho.apply(rho_prime.apply(static_cast<Index>(p), static_cast<Index>(h)), static_cast<Index>(g));
  FiniteAction big(sd.group, np, rows);
  auto g0 = action_check(big).kernel;
  auto gamma = quotient(g0);

  std::vector<std::vector<Index>> gamma_rows(gamma.group.order());
  for (std::size_t c = 0; c < gamma.representatives.size(); ++c) gamma_rows[c] = rows[sz(gamma.representatives[c])];
  FiniteAction action(gamma.group, np, gamma_rows);
  auto gamma_report = action_check(action);
  if (!gamma_report.is_free)
    throw Error(ErrorKind::NotFree, "Gamma element " + str(gamma_report.fixed_witness->second) + " fixes point " +
                                        str(gamma_report.fixed_witness->first));

  PipelineResult r{dress,
                   sd,
                   g0,
                   gamma,
                   action,
                   action_check(rho).orbit_of,
                   action_check(rho_prime).orbit_of,
                   gamma_report.orbit_of,
                   {},
                   {},
                   0,
                   0,
                   0,
                   std::nullopt};
  r.m_count = action_check(rho).orbits.size();
  r.mprime_count = action_check(rho_prime).orbits.size();
  r.m0_count = gamma_report.orbits.size();

  auto diagram = [](const std::string& what) { throw Error(ErrorKind::DiagramFailure, what); };
  r.m_to_m0.assign(r.m_count, -1);
  r.mprime_to_m0.assign(r.mprime_count, -1);
  for (std::size_t p = 0; p < np; ++p) {
    Index& a = r.m_to_m0[sz(r.to_m[p])];
    if (a == -1) a = r.to_m0[p];
    else if (a != r.to_m0[p]) diagram("P/G -> P/Gamma is not well defined at point " + std::to_string(p));
    Index& b = r.mprime_to_m0[sz(r.to_mprime[p])];
    if (b == -1) b = r.to_m0[p];
    else if (b != r.to_m0[p]) diagram("P/G' -> P/Gamma is not well defined at point " + std::to_string(p));
  }
  // [G'] acts on M = P/G and [G] on M' = P/G'; the orbit maps are equivariant.
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t h = 0; h < nh; ++h)
      for (std::size_t g = 0; g < ng; ++g) {
        const auto P = static_cast<Index>(p), Hh = static_cast<Index>(h), Gg = static_cast<Index>(g);
        if (r.to_m[sz(rho_prime.apply(rho.apply(P, Gg), Hh))] != r.to_m[sz(rho_prime.apply(P, Hh))])
          diagram("pi(p g g') != pi(p g') at p=" + std::to_string(p) + ", g=" + std::to_string(g) + ", g'=" +
                  std::to_string(h));
        if (r.to_mprime[sz(rho.apply(rho_prime.apply(P, Hh), Gg))] != r.to_mprime[sz(rho.apply(P, Gg))])
          diagram("pi'(p g' g) != pi'(p g) at p=" + std::to_string(p) + ", g=" + std::to_string(g) + ", g'=" +
                  std::to_string(h));
      }

  auto img_g = gamma.projection.image(sd.normal_g);
  auto img_h = gamma.projection.image(sd.gprime_part);
  auto v = verify_double(img_g, img_h);
  if (v.ok()) r.as_double = std::move(v.dpg);
  return r;
}

}  // namespace npb
