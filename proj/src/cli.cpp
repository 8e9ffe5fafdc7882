#include "npb/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "npb/json_io.hpp"

namespace npb::cli {

namespace {

using json_io::Json;
namespace fs = std::filesystem;

struct Options {
  std::string out_path;
  std::uint64_t seed = 1;
  std::size_t max_order = 4096;
  std::size_t max_candidates = 1000000;
  std::string field;
  std::string sig;
  std::string subgroups;
  std::vector<std::string> inputs;
};

struct Result {
  bool pass = true;
  Json details = Json::object();
  Json witnesses = Json::array();
  std::map<std::string, bool> theory;
  std::string summary;

  void fail(Json witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
};

using Handler = std::function<Result(const Options&)>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

const std::string& input_path(const Options& o, std::size_t k = 0) {
  if (o.inputs.size() <= k) bad("expected " + std::to_string(k + 1) + " input file(s)");
  return o.inputs[k];
}

Json input(const Options& o, std::size_t k = 0) { return json_io::load_file(input_path(o, k)); }

fs::path base_of(const Options& o, std::size_t k = 0) { return fs::path(input_path(o, k)).parent_path(); }

Field pick_field(const Options& o, const Json& j) {
  if (!o.field.empty()) return Field::parse(o.field);
  if (j.is_object() && j.contains("field")) return json_io::field_from_json(j["field"]);
  return Field::rationals();
}

GradedSignature pick_signature(const Options& o, const Json& j, const fs::path& base) {
  if (!o.sig.empty()) return json_io::signature_from_json(json_io::load_file(o.sig));
  if (j.is_object() && j.contains("sig")) return json_io::signature_from_json(json_io::resolve(j["sig"], base));
  if (j.is_object() && j.contains("dims")) return json_io::signature_from_json(j);
  bad("no signature: pass --sig or give \"sig\"");
}

Json violation_json(const Violation& v) {
  return {{"kind", std::string(to_string(v.kind))}, {"subgroup", v.subgroup}, {"witness", v.witness},
          {"message", v.message}};
}

Json trace_json(const NTupleWitness& w) {
  Json out = Json::array();
  for (const auto& n : w.trace) {
    Json orders = Json::array();
    for (const auto& s : n.subgroups) orders.push_back(s.order());
    Json node = {{"path", n.path},
                 {"label", n.label},
                 {"ok", n.ok},
                 {"ambient_order", n.ambient.order()},
                 {"subgroup_orders", orders}};
    if (n.violation) node["violation"] = violation_json(*n.violation);
    out.push_back(node);
  }
  return out;
}

// ---------------------------------------------------------------- groups

struct GroupInput {
  FiniteGroup group;
  std::vector<std::string> names;
  std::vector<Subgroup> subgroups;
  std::vector<std::string> labels;
};

GroupInput load_group_with_subgroups(const Options& o) {
  const Json j = input(o);
  const Json gj = j.contains("gamma") ? json_io::resolve(j["gamma"], base_of(o)) : j;
  auto g = json_io::group_from_json(gj, o.max_order);
  auto names = json_io::element_names(gj, g);
  GroupInput in{g, names, {}, {}};
  if (!o.subgroups.empty()) {
    std::stringstream ss(o.subgroups);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (j.contains("named_subgroups") && j["named_subgroups"].contains(tok)) {
        in.subgroups.push_back(json_io::subgroup_from_json(j["named_subgroups"][tok], g, names));
      } else {
        const Index a = json_io::element_from_json(Json(tok), g, names);
        in.subgroups.push_back(subgroup_closure(g, {a}));
      }
      in.labels.push_back(tok);
    }
  } else if (j.contains("subgroups")) {
    for (const auto& s : j["subgroups"]) {
      in.subgroups.push_back(json_io::subgroup_from_json(s, g, names));
      in.labels.push_back("G" + std::to_string(in.subgroups.size()));
    }
  } else {
    bad("no subgroups: pass --subgroups or give \"subgroups\"");
  }
  return in;
}

Result group_validate(const Options& o) {
  Result r;
  const Json j = input(o);
  std::optional<FiniteGroup> g;
  try {
    g = json_io::group_from_json(j, o.max_order);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NotLatinSquare:
      case ErrorKind::NoIdentity:
      case ErrorKind::NoInverse:
      case ErrorKind::NonAssociative:
        r.fail({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
        r.summary = e.what();
        return r;
      default:
        throw;
    }
  }
  auto fp = fingerprint(*g);
  r.details = {{"order", g->order()},
               {"identity", g->identity()},
               {"abelian", fp.abelian},
               {"order_histogram", fp.order_histogram},
               {"names", json_io::element_names(j, *g)}};
  bool inv = true;
  for (Index a = 0; a < static_cast<Index>(g->order()); ++a)
    inv = inv && g->mul(a, g->inverse(a)) == g->identity() && g->mul(g->inverse(a), a) == g->identity();
  r.theory["inverse_law"] = inv;
  r.summary = "group of order " + std::to_string(g->order());
  return r;
}

Result dpg_verify(const Options& o) {
  Result r;
  auto in = load_group_with_subgroups(o);
  if (in.subgroups.size() != 2) bad("dpg verify takes two subgroups");
  auto v = verify_double(in.subgroups[0], in.subgroups[1]);
  auto w = verify_ntuple(in.group, in.subgroups);
  r.details["gamma_order"] = in.group.order();
  r.details["subgroup_orders"] = {in.subgroups[0].order(), in.subgroups[1].order()};
  r.details["trace"] = trace_json(w);
  if (!v.ok()) {
    r.fail(violation_json(*v.violation));
    r.summary = v.violation->message;
    return r;
  }
  const auto& dpg = *v.dpg;
  r.details["core_order"] = dpg.core.order();
  r.details["core"] = dpg.core.members();
  r.details["quotients"] = {dpg.q1.order(), dpg.q2.order()};
  auto ex = exact_sequence(dpg);
  r.details["exactness"] = {{"kernel_order", ex.kernel_order}, {"image_order", ex.image_order}};
  r.theory["phi_is_hom"] = ex.is_hom;
  r.theory["kernel_is_core"] = ex.kernel_is_core;
  r.theory["quotient_orders_match"] = ex.quotient_orders_match;
  try {
    auto vac = vacancy(dpg);
    r.details["vacancy"] = {{"vacant", vac.vacant},
                            {"product_bijective", vac.product_bijective},
                            {"min_fiber", vac.min_fiber},
                            {"max_fiber", vac.max_fiber}};
    r.theory["product_fibers_equal_core"] = vac.min_fiber == dpg.core.order() && vac.max_fiber == dpg.core.order();
    r.theory["vacant_iff_bijective"] = true;
  } catch (const Error&) {
    r.theory["vacant_iff_bijective"] = false;
  }
  try {
    (void)dressing(dpg);
    r.theory["dressing_laws"] = true;
  } catch (const Error&) {
    r.theory["dressing_laws"] = false;
  }
  r.theory["pairwise_double"] = w.verdict && w.pairwise_double;
  r.summary = "double principal, core " + std::to_string(dpg.core.order()) + ", quotients " +
              std::to_string(dpg.q1.order()) + "/" + std::to_string(dpg.q2.order());
  return r;
}

Result ntuple_verify(const Options& o) {
  Result r;
  auto in = load_group_with_subgroups(o);
  auto w = verify_ntuple(in.group, in.subgroups);
  r.details["gamma_order"] = in.group.order();
  r.details["subgroups"] = in.labels;
  r.details["verdict"] = w.verdict;
  r.details["trace"] = trace_json(w);
  if (!w.verdict) {
    for (const auto& n : w.trace)
      if (n.violation) r.fail({{"label", n.label}, {"path", n.path}, {"violation", violation_json(*n.violation)}});
    if (r.witnesses.empty()) r.fail({{"label", "root"}, {"message", "verification failed"}});
    r.summary = "not a tuple principal group: " + r.witnesses.front()["label"].get<std::string>() + " " +
                r.witnesses.front().value("violation", Json::object()).value("kind", "");
    return r;
  }
  r.theory["pairwise_double"] = w.pairwise_double;
  r.summary = std::to_string(in.subgroups.size()) + "-tuple principal group";
  return r;
}

Result dpg_dressing(const Options& o) {
  Result r;
  auto in = load_group_with_subgroups(o);
  if (in.subgroups.size() != 2) bad("dpg dressing takes two subgroups");
  auto v = verify_double(in.subgroups[0], in.subgroups[1]);
  if (!v.ok()) {
    r.fail(violation_json(*v.violation));
    r.summary = v.violation->message;
    return r;
  }
  const auto& dpg = *v.dpg;
  const std::size_t n1 = dpg.g1.order(), n2 = dpg.g2.order();
  r.details["G"] = dpg.g1.members();
  r.details["G_prime"] = dpg.g2.members();
  try {
    auto d = dressing(dpg);
    Json a = Json::array(), b = Json::array();
    for (std::size_t x = 0; x < n1; ++x)
      a.push_back(std::vector<Index>(d.g_on_gprime.begin() + x * n2, d.g_on_gprime.begin() + (x + 1) * n2));
    for (std::size_t y = 0; y < n2; ++y)
      b.push_back(std::vector<Index>(d.gprime_on_g.begin() + y * n1, d.gprime_on_g.begin() + (y + 1) * n1));
    r.details["g_on_gprime"] = a;
    r.details["gprime_on_g"] = b;
    Json laws = Json::object();
    for (const auto& [name, count] : d.laws) laws[name] = count;
    r.details["laws"] = laws;
    r.theory["dressing_laws"] = true;
  } catch (const Error&) {
    r.theory["dressing_laws"] = false;
  }
  auto dp = dressing_product(dpg);
  r.details["semidirect_order"] = dp.semidirect.group.order();
  r.details["multiply_kernel_order"] = dp.multiply.kernel().order();
  r.theory["semidirect_order"] = dp.semidirect.group.order() == n1 * n2;
  r.theory["multiply_kernel_is_core"] = dp.multiply.kernel().order() == dpg.core.order();
  r.theory["multiply_surjective"] = dp.multiply.is_surjective();
  r.summary = "dressing laws hold on " + std::to_string(n1 * n2) + " pairs";
  return r;
}

std::vector<std::vector<Index>> sorted_perm_closure(const FiniteAction& a, const FiniteAction& b) {
  std::vector<std::vector<Index>> gens;
  for (const auto* x : {&a, &b})
    for (Index g = 0; g < static_cast<Index>(x->group().order()); ++g) {
      auto p = x->permutation(g);
      gens.emplace_back(p.begin(), p.end());
    }
  auto p = FiniteGroup::from_permutations(gens, a.points(), 1000000).permutations();
  std::sort(p.begin(), p.end());
  return p;
}

Result dpg_gamma_from_actions(const Options& o) {
  Result r;
  const Json j = input(o);
  auto rho = json_io::action_from_json(json_io::resolve(j.at("rho"), base_of(o)), base_of(o), o.max_order);
  auto rhop = json_io::action_from_json(json_io::resolve(j.at("rho_prime"), base_of(o)), base_of(o), o.max_order);
  if (j.contains("points") && (j["points"].get<std::size_t>() != rho.points() || rhop.points() != rho.points()))
    bad("points does not match the actions");
  std::optional<PipelineResult> p;
  try {
    p = gamma_from_actions(rho, rhop);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCompatible && e.kind() != ErrorKind::NotAnActionByAutomorphisms &&
        e.kind() != ErrorKind::NotFree)
      throw;
    r.fail({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
    r.summary = e.what();
    return r;
  }
  r.details = {{"gamma_order", p->gamma.group.order()},
               {"core_order", p->g0.order()},
               {"m", p->m_count},
               {"m_prime", p->mprime_count},
               {"m0", p->m0_count},
               {"to_m", p->to_m},
               {"to_m_prime", p->to_mprime},
               {"to_m0", p->to_m0},
               {"m_to_m0", p->m_to_m0},
               {"m_prime_to_m0", p->mprime_to_m0},
               {"gamma", json_io::group_to_json(p->gamma.group)},
               {"note", p->note}};
  if (p->as_double)
    r.details["double"] = {{"core_order", p->as_double->core.order()},
                           {"quotients", {p->as_double->q1.order(), p->as_double->q2.order()}}};
  r.theory["action_free"] = action_check(p->action).is_free;
  r.theory["order_count"] = p->gamma.group.order() * p->g0.order() == rho.group().order() * rhop.group().order();
  bool diagram = true;
  for (std::size_t x = 0; x < rho.points(); ++x)
    diagram = diagram && p->m_to_m0[sz(p->to_m[x])] == p->to_m0[x] && p->mprime_to_m0[sz(p->to_mprime[x])] == p->to_m0[x];
  r.theory["diagram_commutes"] = diagram;
  r.theory["gamma_is_translation_closure"] = permutation_image(p->action) == sorted_perm_closure(rho, rhop);
  r.summary = "|Gamma| = " + std::to_string(p->gamma.group.order()) + ", |M| = " + std::to_string(p->m_count) +
              ", |M'| = " + std::to_string(p->mprime_count) + ", |M0| = " + std::to_string(p->m0_count);
  return r;
}

// ---------------------------------------------------------------- groupoids

Result groupoid_gauge(const Options& o) {
  Result r;
  auto a = json_io::action_from_json(input(o), base_of(o), o.max_order);
  std::optional<GaugeGroupoid> gg;
  try {
    gg = gauge_groupoid(a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ActionNotFree) throw;
    r.fail({{"kind", "ActionNotFree"}, {"message", e.what()}});
    r.summary = e.what();
    return r;
  }
  Json reps = Json::array();
  for (const auto& [p, q] : gg->representative) reps.push_back({p, q});
  r.details = {{"groupoid", json_io::groupoid_to_json(gg->groupoid)},
               {"object_of", gg->object_of},
               {"arrow_of", gg->arrow_of},
               {"representatives", reps}};
  const std::size_t n = a.points(), g = a.group().order();
  r.theory["arrow_count"] = gg->groupoid.arrows() * g == n * n;
  r.theory["object_count"] = gg->groupoid.objects() * g == n;
  r.summary = "gauge groupoid with " + std::to_string(gg->groupoid.arrows()) + " arrows over " +
              std::to_string(gg->groupoid.objects()) + " objects";
  return r;
}

// Fails the result unless the action is compatible and pre-principal.
bool require_pre_principal(const GroupoidAction& ga, Result& r) {
  auto rep = check_compatible(ga);
  r.details["compatible"] = rep.compatible;
  r.details["pre_principal"] = rep.pre_principal;
  r.details["kernel"] = rep.kernel.members();
  if (rep.compatible) r.theory["pre_principal_iff_free_on_objects"] = rep.pre_principal == rep.free_on_objects_mod_kernel;
  if (!rep.compatible) {
    r.fail({{"check", "compatible"}, {"message", rep.failure}});
    r.summary = rep.failure;
    return false;
  }
  if (!rep.pre_principal) {
    r.fail({{"check", "pre_principal"},
            {"message", rep.failure.empty() ? "the action modulo its kernel is not free" : rep.failure}});
    r.summary = "not pre-principal";
    return false;
  }
  return true;
}

Result groupoid_quotient(const Options& o) {
  Result r;
  auto ga = json_io::groupoid_action_from_json(input(o), base_of(o), o.max_order);
  if (!require_pre_principal(ga, r)) return r;
  auto q = quotient_groupoid(ga);
  r.details["quotient"] = json_io::groupoid_to_json(q.groupoid);
  r.details["arrow_map"] = q.arrow_map;
  r.details["object_map"] = q.object_map;
  const std::size_t eff = ga.group().order() / r.details["kernel"].size();
  r.theory["orbit_count"] = q.groupoid.arrows() * eff == ga.groupoid().arrows();
  r.summary = "quotient groupoid with " + std::to_string(q.groupoid.arrows()) + " arrows";
  return r;
}

std::optional<SplitPresentation> split_or_fail(const GroupoidAction& ga, Result& r) {
  if (!require_pre_principal(ga, r)) return std::nullopt;
  try {
    return split(ga);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SplitFailure) throw;
    r.fail({{"kind", "SplitFailure"}, {"message", e.what()}});
    r.summary = e.what();
    return std::nullopt;
  }
}

Result groupoid_split(const Options& o) {
  Result r;
  auto ga = json_io::groupoid_action_from_json(input(o), base_of(o), o.max_order);
  auto sp = split_or_fail(ga, r);
  if (!sp) return r;
  Json fp = Json::array();
  for (const auto& [y0, x] : sp->fiber_product) fp.push_back({y0, x});
  const std::size_t m = sp->units_bundle.points();
  Json t = Json::array();
  for (std::size_t y0 = 0; y0 < sp->quotient.groupoid.arrows(); ++y0)
    t.push_back(std::vector<Index>(sp->t_action.begin() + y0 * m, sp->t_action.begin() + (y0 + 1) * m));
  r.details["quotient"] = json_io::groupoid_to_json(sp->quotient.groupoid);
  r.details["fiber_product"] = fp;
  r.details["S"] = sp->S;
  r.details["t_action"] = t;
  auto sorted = sp->S;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Index> iota(sorted.size());
  std::iota(iota.begin(), iota.end(), 0);
  r.theory["S_bijective"] = sorted == iota && sp->fiber_product.size() == ga.groupoid().arrows();
  r.summary = "S is a bijection onto " + std::to_string(sp->fiber_product.size()) + " pairs; (i)-(iv) hold";
  return r;
}

Result groupoid_mult_function(const Options& o) {
  Result r;
  auto ga = json_io::groupoid_action_from_json(input(o), base_of(o), o.max_order);
  auto sp = split_or_fail(ga, r);
  if (!sp) return r;
  std::optional<MultiplicativeFunction> mf;
  try {
    mf = multiplicative_function(*sp);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotTrivialized && e.kind() != ErrorKind::NotMultiplicative) throw;
    r.fail({{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}});
    r.summary = e.what();
    return r;
  }
  r.details["base"] = json_io::groupoid_to_json(mf->base);
  r.details["b"] = mf->b;
  auto rebuilt = build_from_morphism(*mf);
  r.theory["round_trip"] = !check_split_round_trip(ga).has_value();
  r.theory["b_recovered"] = multiplicative_function(split(rebuilt.action)).b == mf->b;
  r.summary = "multiplicative function on " + std::to_string(mf->b.size()) + " arrows";
  return r;
}

// ---------------------------------------------------------------- graded

Result graded_check_morphism(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  auto phi = json_io::polymap_from_json(j, f);
  auto rep = graded_morphism_report(phi);
  r.details = {{"map", phi.to_string()},
               {"weight_preserving", rep.weight_preserving},
               {"intertwines", rep.intertwines},
               {"sig_in", phi.sig_in().describe()},
               {"sig_out", phi.sig_out().describe()}};
  r.theory["checks_agree"] = rep.weight_preserving == rep.intertwines;
  if (rep.weight_preserving) {
    // pointwise intertwining at sampled points
    std::mt19937_64 rng(o.seed);
    bool ok = true;
    for (int k = 0; k < 16 && ok; ++k) {
      std::vector<Scalar> y;
      for (std::size_t c = 0; c < phi.sig_in().coords(); ++c) y.push_back(random_scalar(f, rng));
      const Scalar t = random_scalar(f, rng);
      for (std::size_t g = 0; g < phi.sig_in().gradings(); ++g) {
        auto ty = y;
        for (std::size_t c = 0; c < ty.size(); ++c) ty[c] *= t.pow(static_cast<unsigned>(phi.sig_in().weight(c, g)));
        auto lhs = phi.evaluate(ty), rhs = phi.evaluate(y);
        for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] *= t.pow(static_cast<unsigned>(phi.sig_out().weight(c, g)));
        ok = ok && lhs == rhs;
      }
    }
    r.theory["sampled_intertwining"] = ok;
    r.summary = "graded morphism";
  } else {
    r.fail({{"witness", rep.witness}});
    r.summary = "not weight preserving: " + rep.witness;
  }
  return r;
}

Result graded_check_compat(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  const auto sig = pick_signature(o, j, base_of(o));
  std::vector<HomogeneityStructure> hs;
  if (!j.contains("structures") || !j["structures"].is_array()) bad("missing \"structures\"");
  for (const auto& s : j["structures"]) {
    auto w = s.at("weights").get<std::vector<int>>();
    if (w.size() != sig.coords()) bad("one weight per coordinate expected");
    PolyMap conj = PolyMap::identity(sig, f);
    if (s.contains("conj")) {
      const auto& c = s["conj"];
      conj = json_io::polymap_from_terms(c.is_array() ? c : c.at("terms"), sig, sig, f);
    }
    hs.push_back({w, conj});
  }
  auto v = check_compatible_structures(hs);
  r.details = {{"commute", v.commute}, {"brackets_vanish", v.brackets_vanish}, {"structures", hs.size()}};
  r.theory["verdicts_agree"] = v.commute == v.brackets_vanish;
  if (v.commute) {
    r.summary = "compatible";
  } else {
    r.fail({{"pair", {v.pair.first, v.pair.second}}});
    r.summary = "structures " + std::to_string(v.pair.first) + " and " + std::to_string(v.pair.second) + " do not commute";
  }
  return r;
}

Result graded_weights(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  std::vector<Polynomial> polys;
  std::optional<GradedSignature> sig;
  if (j.contains("sig_in")) {
    auto m = json_io::polymap_from_json(j, f);
    sig = m.sig_in();
    polys = m.components();
  } else {
    sig = pick_signature(o, j, base_of(o));
    if (j.contains("polynomials"))
      for (const auto& p : j["polynomials"]) polys.push_back(json_io::polynomial_from_json(p, f, sig->coords()));
  }
  std::vector<std::string> names;
  Json coords = Json::array();
  for (std::size_t c = 0; c < sig->coords(); ++c) {
    names.push_back(sig->coord_name(c));
    coords.push_back({{"name", names.back()}, {"weight", sig->weight(c)}});
  }
  r.details["signature"] = sig->describe();
  r.details["coordinates"] = coords;
  bool euler = true, sums = true;
  Json out = Json::array();
  for (const auto& p : polys) {
    Json gradings = Json::array();
    for (std::size_t g = 0; g < sig->gradings(); ++g) {
      const auto nabla = weight_vector_field(*sig, f, g);
      Json comps = Json::array();
      Polynomial total(f, sig->coords());
      for (const auto& [w, c] : weight_components(p, *sig, g)) {
        comps.push_back({{"weight", w}, {"polynomial", c.to_string(names)}});
        euler = euler && nabla.apply(c) == c.scaled(Scalar(f, w));
        total = total + c;
      }
      sums = sums && total == p;
      gradings.push_back(comps);
    }
    out.push_back({{"polynomial", p.to_string(names)}, {"components", gradings}});
  }
  r.details["polynomials"] = out;
  r.theory["euler_field_eigenvalues"] = euler;
  r.theory["components_sum"] = sums;
  r.theory["dilation_laws"] = check_dilation_laws(*sig, f);
  r.summary = std::to_string(sig->coords()) + " coordinates, " + std::to_string(polys.size()) + " polynomial(s)";
  return r;
}

// ---------------------------------------------------------------- aut

std::size_t gl_order(std::size_t d, std::size_t p) {
  std::size_t pd = 1, out = 1;
  for (std::size_t i = 0; i < d; ++i) pd *= p;
  for (std::size_t i = 0, pi = 1; i < d; ++i, pi *= p) out *= pd - pi;
  return out;
}

std::size_t closed_form_order(const AutGroup& aut) {
  const std::size_t p = aut.field.characteristic();
  std::size_t out = 1;
  for (const auto& b : aut.sig.blocks()) out *= gl_order(b.dim, p);
  for (const auto& s : aut.slots)
    if (!s.linear) out *= p;
  return out;
}

std::pair<GradedSignature, Field> aut_inputs(const Options& o) {
  Json j = Json::object();
  if (!o.inputs.empty()) j = input(o);
  auto sig = o.sig.empty() ? pick_signature(o, j, o.inputs.empty() ? fs::path{} : base_of(o))
                           : json_io::signature_from_json(json_io::load_file(o.sig));
  const Field f = pick_field(o, j);
  if (f.is_rational()) bad("enumeration needs a prime field (--field Fp:p)");
  return {sig, f};
}

Result aut_enumerate(const Options& o) {
  Result r;
  auto [sig, f] = aut_inputs(o);
  auto aut = enumerate_aut(sig, f, o.max_candidates, o.max_order);
  Json slots = Json::array();
  for (const auto& s : aut.slots) slots.push_back({{"target", s.target}, {"exponents", s.exponents}, {"linear", s.linear}});
  auto fp = fingerprint(aut.group);
  r.details = {{"signature", sig.describe()},
               {"field", f.name()},
               {"order", aut.group.order()},
               {"candidates", aut.candidates},
               {"slots", slots},
               {"abelian", fp.abelian},
               {"order_histogram", fp.order_histogram}};
  if (aut.group.order() <= 256) {
    Json el = Json::array();
    for (const auto& e : aut.elements) el.push_back(e.map.to_string());
    r.details["elements"] = el;
  }
  r.theory["closed_form_order"] = aut.group.order() == closed_form_order(aut);
  r.theory["identity_is_id_map"] = aut.elements[sz(aut.group.identity())].map == PolyMap::identity(sig, f);
  r.summary = "|Aut| = " + std::to_string(aut.group.order());
  return r;
}

Result aut_verify_p54(const Options& o) {
  Result r;
  auto [sig, f] = aut_inputs(o);
  auto rep = verify_p54(sig, f, o.max_candidates, o.max_order);
  Json gi = Json::array(), inter = Json::object();
  for (const auto& s : rep.gi) gi.push_back(s.order());
  for (const auto& [mask, n] : rep.intersection_orders) inter[std::to_string(mask)] = n;
  r.details = {{"signature", sig.describe()},
               {"field", f.name()},
               {"aut_order", rep.aut.group.order()},
               {"gi_orders", gi},
               {"intersection_orders", inter},
               {"statomorphism_order", rep.statomorphisms.order()},
               {"verdict", rep.witness.verdict},
               {"trace", trace_json(rep.witness)}};
  r.theory["closed_form_order"] = rep.aut.group.order() == closed_form_order(rep.aut);
  r.theory["gi_normal"] = rep.gi_normal;
  r.theory["statomorphisms_normal"] = rep.statomorphisms_normal;
  r.theory["statomorphisms_in_core"] = rep.statomorphisms_in_core;
  r.theory["linear_in_factors"] = rep.linear_in_factors;
  std::string orders = std::to_string(rep.aut.group.order());
  for (const auto& s : rep.gi) orders += "/" + std::to_string(s.order());
  const unsigned full = (1u << sig.gradings()) - 1;
  if (sig.gradings() > 1 && rep.intersection_orders.count(full))
    orders += "/" + std::to_string(rep.intersection_orders.at(full));
  if (!rep.witness.verdict) {
    for (const auto& n : rep.witness.trace)
      if (n.violation) r.fail({{"label", n.label}, {"violation", violation_json(*n.violation)}});
    if (r.witnesses.empty()) r.fail({{"label", "root"}, {"message", "verification failed"}});
    r.summary = "not a tuple principal group, orders " + orders;
  } else {
    r.summary = "orders " + orders;
  }
  return r;
}

// ---------------------------------------------------------------- cocycles

bool group_valued(const Json& j) { return j.contains("group"); }

Cocycle<Index> load_group_cocycle(const Json& j, const fs::path& base, std::size_t max_order, FiniteGroup& g,
                                  Json& group_json) {
  group_json = json_io::resolve(j["group"], base);
  g = json_io::group_from_json(group_json, max_order);
  const auto names = json_io::element_names(group_json, g);
  const FiniteGroup& gr = g;
  return json_io::cocycle_from_json<Index>(
      j, [&](const Json& e) { return json_io::element_from_json(e, gr, names); },
      [&](Index a) { return gr.inverse(a); }, gr.identity());
}

Cocycle<PolyMap> load_map_cocycle(const Json& j, const GradedSignature& sig, Field f) {
  return json_io::cocycle_from_json<PolyMap>(
      j,
      [&](const Json& e) { return json_io::polymap_from_terms(e.is_array() ? e : e.at("terms"), sig, sig, f); },
      [](const PolyMap& m) { return invert(m); }, PolyMap::identity(sig, f));
}

Json map_cocycle_json(const Cocycle<PolyMap>& c) {
  return json_io::cocycle_to_json(c, [](const PolyMap& m) { return json_io::polymap_terms(m); });
}

Json perm_cocycle_json(const Cocycle<Perm>& c) {
  return json_io::cocycle_to_json(c, [](const Perm& p) { return Json(p); });
}

void check_or_fail(const CocycleCheck& chk, Result& r) {
  r.details["check"] = json_io::check_to_json(chk);
  if (!chk.valid) {
    r.fail({{"law", chk.law}, {"charts", chk.witness}, {"message", chk.message()}});
    r.summary = chk.message();
  }
}

Result cocycle_check(const Options& o) {
  Result r;
  const Json j = input(o);
  if (group_valued(j)) {
    FiniteGroup g = catalog::trivial();
    Json gj;
    auto c = load_group_cocycle(j, base_of(o), o.max_order, g, gj);
    r.details["group_order"] = g.order();
    r.details["charts"] = c.nerve.charts();
    check_or_fail(check_cocycle(c, g), r);
  } else {
    const Field f = pick_field(o, j);
    auto sig = pick_signature(o, j, base_of(o));
    auto c = load_map_cocycle(j, sig, f);
    r.details["charts"] = c.nerve.charts();
    check_or_fail(check_cocycle(c), r);
  }
  if (r.pass) r.summary = "valid cocycle";
  return r;
}

Result cocycle_associate(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  auto sig = pick_signature(o, j, base_of(o));
  auto c = load_map_cocycle(j, sig, f);
  check_or_fail(check_cocycle(c), r);
  if (!r.pass) return r;
  if (f.is_rational()) {
    Cocycle<NVectAutomorphism> a{c.nerve, {}};
    for (const auto& [k, m] : c.values) a.values.emplace(k, make_automorphism(m));
    auto v = associated_cocycle(a);
    r.details["total"] = map_cocycle_json(v.total);
    Json sides = Json::array();
    for (const auto& s : v.sides) sides.push_back(map_cocycle_json(s));
    r.details["sides"] = sides;
    r.theory["total_valid"] = v.total_check.valid;
    r.theory["sides_valid"] =
        std::all_of(v.side_checks.begin(), v.side_checks.end(), [](const CocycleCheck& s) { return s.valid; });
    auto back = frame_cocycle(v.total);
    bool same = true;
    for (const auto& [k, x] : back.values) same = same && x.map == a.values.at(k).map;
    r.theory["frame_round_trip"] = same;
  } else {
    auto aut = enumerate_aut(sig, f, o.max_candidates, o.max_order);
    Cocycle<Index> ci{c.nerve, {}};
    for (const auto& [k, m] : c.values) ci.values.emplace(k, aut.index_of(m));
    auto v = associated_cocycle(ci, aut);
    r.details["aut_order"] = aut.group.order();
    r.details["principal"] = json_io::cocycle_to_json(ci, [](Index a) { return Json(a); });
    r.details["total"] = map_cocycle_json(v.total);
    Json sides = Json::array();
    for (const auto& s : v.sides) sides.push_back(map_cocycle_json(s));
    r.details["sides"] = sides;
    r.theory["total_valid"] = v.total_check.valid;
    r.theory["sides_valid"] =
        std::all_of(v.side_checks.begin(), v.side_checks.end(), [](const CocycleCheck& s) { return s.valid; });
    r.theory["frame_round_trip"] = frame_cocycle(v.total, aut).values == ci.values;
    if (sig.gradings() >= 2) {
      auto space = standard_fibered_space(aut);
      auto b = associated_cocycle(ci, space);
      r.details["finite"] = {{"points", space.action.points()},
                             {"quotient", perm_cocycle_json(b.quotient)},
                             {"quotient_prime", perm_cocycle_json(b.quotient_prime)},
                             {"core", perm_cocycle_json(b.core)},
                             {"core_trivial", b.core_trivial}};
      r.theory["fiber_valid"] = b.fiber_check.valid;
      r.theory["quotients_valid"] = b.quotient_check.valid && b.quotient_prime_check.valid;
      r.theory["corners_commute"] = b.corners_commute;
    }
  }
  r.summary = "associated cocycle on " + std::to_string(c.nerve.charts()) + " charts";
  return r;
}

Result cocycle_frame(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  auto sig = pick_signature(o, j, base_of(o));
  auto c = load_map_cocycle(j, sig, f);
  check_or_fail(check_cocycle(c), r);
  if (!r.pass) return r;
  auto fr = frame_cocycle(c);
  r.details["frame"] = json_io::cocycle_to_json(fr, [](const NVectAutomorphism& a) {
    return Json{{"map", json_io::polymap_terms(a.map)}, {"inverse", json_io::polymap_terms(a.inverse)}};
  });
  bool inverses = true;
  for (const auto& [k, a] : fr.values) inverses = inverses && compose(a.map, a.inverse) == PolyMap::identity(sig, f);
  r.theory["stored_inverses"] = inverses;
  r.theory["associated_round_trip"] = associated_cocycle(fr).total.values == c.values;
  if (!f.is_rational()) {
    try {
      auto aut = enumerate_aut(sig, f, o.max_candidates, o.max_order);
      auto fi = frame_cocycle(c, aut);
      r.details["indices"] = json_io::cocycle_to_json(fi, [](Index a) { return Json(a); });
      r.details["aut_order"] = aut.group.order();
      r.theory["index_round_trip"] = associated_cocycle(fi, aut).total.values == c.values;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::EnumerationCapExceeded) throw;
      r.details["indices"] = nullptr;
    }
  }
  r.summary = "frame cocycle on " + std::to_string(c.nerve.charts()) + " charts";
  return r;
}

bool same_nerve(const CoverNerve& a, const CoverNerve& b) {
  return a.charts() == b.charts() && a.pairs() == b.pairs() && a.triples() == b.triples();
}

Result cocycle_cohomologous(const Options& o) {
  Result r;
  const Json a = input(o, 0), b = input(o, 1);
  Cocycle<Index> c1, c2;
  FiniteGroup g = catalog::trivial();
  if (group_valued(a)) {
    Json gj1, gj2;
    FiniteGroup g2 = catalog::trivial();
    c1 = load_group_cocycle(a, base_of(o, 0), o.max_order, g, gj1);
    if (!group_valued(b)) bad("both cocycles must take values in the same group");
    c2 = load_group_cocycle(b, base_of(o, 1), o.max_order, g2, gj2);
    if (g.table_rows() != g2.table_rows()) bad("both cocycles must take values in the same group");
  } else {
    const Field f = pick_field(o, a);
    if (f.is_rational()) bad("cohomology search needs a finite group (--field Fp:p)");
    auto sig = pick_signature(o, a, base_of(o, 0));
    auto aut = enumerate_aut(sig, f, o.max_candidates, o.max_order);
    g = aut.group;
    for (auto [src, dst] : {std::pair{&a, &c1}, std::pair{&b, &c2}}) {
      auto m = load_map_cocycle(*src, sig, f);
      dst->nerve = m.nerve;
      for (const auto& [k, x] : m.values) dst->values.emplace(k, aut.index_of(x));
    }
  }
  if (!same_nerve(c1.nerve, c2.nerve)) bad("the cocycles live on different nerves");
  for (const auto* c : {&c1, &c2}) {
    auto chk = check_cocycle(*c, g);
    if (!chk.valid) throw Error(ErrorKind::NotACocycle, chk.message());
  }
  auto res = are_cohomologous(c1, c2, g, o.max_candidates);
  r.details = {{"cohomologous", res.cohomologous}, {"families_examined", res.families_examined}};
  if (res.cohomologous) {
    r.details["lambda"] = res.lambda;
    bool ok = true;
    for (const auto& [k, x] : c1.values)
      ok = ok && g.mul(g.mul(res.lambda[k.first], x), g.inverse(res.lambda[k.second])) == c2.values.at(k);
    r.theory["lambda_conjugates"] = ok;
    r.summary = "cohomologous";
  } else {
    r.fail({{"families_examined", res.families_examined},
            {"message", "no chartwise family conjugates the first cocycle into the second"}});
    r.summary = "not cohomologous (" + std::to_string(res.families_examined) + " families examined)";
  }
  return r;
}

Result cocycle_t2(const Options& o) {
  Result r;
  const Json j = input(o);
  const Field f = pick_field(o, j);
  const auto m = j.at("m").get<std::size_t>();
  std::vector<Polynomial> change;
  for (const auto& p : j.at("chart_change")) change.push_back(json_io::polynomial_from_json(p, f, m));
  if (change.size() != m) bad("chart_change needs one polynomial per coordinate");
  std::optional<PolyMap> t;
  try {
    t = t2_transition(change);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInvertibleChart) throw;
    r.fail({{"kind", "NotInvertibleChart"}, {"message", e.what()}});
    r.summary = e.what();
    return r;
  }
  const bool graded = is_graded_morphism(*t);
  r.details = {{"transition", json_io::polymap_to_json(*t)},
               {"text", t->to_string()},
               {"graded_morphism", graded},
               {"fiber_linear", is_fiber_linear(*t)}};
  r.theory["graded_morphism"] = graded;
  r.summary = t->to_string();
  return r;
}

// ---------------------------------------------------------------- driver

bool internal(ErrorKind k) {
  return k == ErrorKind::InternalInconsistency || k == ErrorKind::InternalDisagreement ||
         k == ErrorKind::DiagramFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"npb: finite principal groups, groupoids, graded automorphisms and cocycles"};
  app.name("npb");
  app.require_subcommand(1);
  app.add_option("--out", o.out_path, "Write the JSON report to this file");
  app.add_option("--seed", o.seed, "Seed for randomized sampling")->capture_default_str();
  app.add_option("--max-order", o.max_order, "Largest group built by closure or enumeration")->capture_default_str();
  app.add_option("--max-candidates", o.max_candidates, "Enumeration and search cap")->capture_default_str();
  app.add_option("--field", o.field, "Q or Fp:p");
  app.add_option("--sig", o.sig, "Graded signature file");

  std::vector<std::pair<CLI::App*, Handler>> leaves;
  auto family = [&](const std::string& name, const std::string& desc) {
    auto* s = app.add_subcommand(name, desc);
    s->require_subcommand(1);
    s->fallthrough();
    return s;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h, bool inputs = true) {
    auto* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    if (inputs) s->add_option("inputs", o.inputs, "Input JSON file(s)");
    leaves.emplace_back(s, std::move(h));
    return s;
  };

  auto* group = family("group", "Finite groups");
  leaf(group, "validate", "Check the group axioms", group_validate);
  auto* dpg = family("dpg", "Double principal groups");
  leaf(dpg, "verify", "Verify a double principal group", dpg_verify)->add_option("--subgroups", o.subgroups);
  leaf(dpg, "gamma-from-actions", "Rebuild Gamma from two principal actions", dpg_gamma_from_actions);
  leaf(dpg, "dressing", "Dressing actions and the semidirect product", dpg_dressing)->add_option("--subgroups", o.subgroups);
  auto* ntuple = family("ntuple", "n-tuple principal groups");
  leaf(ntuple, "verify", "Recursive n-tuple check", ntuple_verify)->add_option("--subgroups", o.subgroups);
  auto* groupoid = family("groupoid", "Groupoids and G-groupoids");
  leaf(groupoid, "gauge", "Gauge groupoid of a free action", groupoid_gauge);
  leaf(groupoid, "quotient", "Quotient of a pre-principal G-groupoid", groupoid_quotient);
  leaf(groupoid, "split", "Split presentation of a G-groupoid", groupoid_split);
  leaf(groupoid, "mult-function", "Multiplicative function of a trivialized G-groupoid", groupoid_mult_function);
  auto* graded = family("graded", "Graded polynomial maps");
  leaf(graded, "check-morphism", "Weight preservation and intertwining", graded_check_morphism);
  leaf(graded, "check-compat", "Compatibility of homogeneity structures", graded_check_compat);
  leaf(graded, "weights", "Coordinate weights and homogeneous components", graded_weights);
  auto* aut = family("aut", "Automorphism groups over F_p");
  leaf(aut, "enumerate", "Enumerate Aut", aut_enumerate);
  leaf(aut, "verify-p54", "Check Aut and its subgroups G^i as a tuple principal group", aut_verify_p54);
  auto* cocycle = family("cocycle", "Cocycles over cover nerves");
  leaf(cocycle, "check", "Cocycle laws", cocycle_check);
  leaf(cocycle, "associate", "Associated vector bundle transitions", cocycle_associate);
  leaf(cocycle, "frame", "Frame cocycle of vector bundle transitions", cocycle_frame);
  leaf(cocycle, "cohomologous", "Coboundary search between two cocycles", cocycle_cohomologous);
  leaf(cocycle, "t2", "Second-order tangent transition", cocycle_t2);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Handler handler;
  std::string command;
  for (const auto& [s, h] : leaves)
    if (s->parsed()) {
      handler = h;
      command = s->get_parent()->get_name() + " " + s->get_name();
    }
  if (!handler) {
    err << "npb: no command given\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Json report = {{"command", args}, {"seed", o.seed}};
  int code = 0;
  std::string summary;
  try {
    Result r = handler(o);
    bool theory_ok = true;
    for (const auto& [k, v] : r.theory) theory_ok = theory_ok && v;
    report["details"] = r.details;
    report["witnesses"] = r.witnesses;
    report["theory_assertions"] = {{"checks", r.theory}, {"all_hold", theory_ok}};
    if (!theory_ok) {
      report["verdict"] = "error";
      report["implementation_bug"] = true;
      code = 2;
      summary = "theory assertion failed (implementation bug)";
    } else {
      report["verdict"] = r.pass ? "pass" : "fail";
      code = r.pass ? 0 : 1;
      summary = r.summary;
    }
  } catch (const Error& e) {
    report["verdict"] = "error";
    report["details"] = {{"error_kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (internal(e.kind())) report["implementation_bug"] = true;
    code = 2;
    summary = e.what();
  } catch (const nlohmann::json::exception& e) {
    report["verdict"] = "error";
    report["details"] = {{"error_kind", "InvalidInput"}, {"message", e.what()}};
    code = 2;
    summary = e.what();
  } catch (const std::exception& e) {
    report["verdict"] = "error";
    report["details"] = {{"error_kind", "InvalidInput"}, {"message", e.what()}};
    code = 2;
    summary = e.what();
  }
  report["exit_code"] = code;
  report["timing"] = {
      {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};

  const std::string text = report.dump(2) + "\n";
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      err << "npb: cannot write " << o.out_path << "\n";
      return 2;
    }
    f << text;
  }
  err << report["verdict"].get<std::string>() << ": " << command << ": " << summary << "\n";
  return code;
}

}  // namespace npb::cli
