#include "npb/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace npb::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j[key];
}

template <class T>
T as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

std::vector<std::vector<Index>> index_rows(const Json& j, const char* what) {
  return as<std::vector<std::vector<Index>>>(j, what);
}

}  // namespace

Json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

Json resolve(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) return load_file(base / j.get<std::string>());
  return j;
}

FiniteGroup group_from_json(const Json& j, std::size_t max_order) {
  if (j.contains("table")) {
    auto rows = index_rows(j["table"], "table");
    if (j.contains("order") && as<std::size_t>(j["order"], "order") != rows.size()) bad("order does not match table");
    return FiniteGroup::from_table(rows);
  }
  if (j.contains("permutations")) {
    auto gens = index_rows(j["permutations"], "permutations");
    return FiniteGroup::from_permutations(gens, as<std::size_t>(need(j, "degree"), "degree"), max_order);
  }
  bad("group needs \"table\" or \"permutations\"");
}

Json group_to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table_rows()}}; }

std::vector<std::string> element_names(const Json& group_json, const FiniteGroup& g) {
  std::vector<std::string> names;
  if (group_json.is_object() && group_json.contains("names")) {
    names = as<std::vector<std::string>>(group_json["names"], "names");
    if (names.size() != g.order()) bad("one name per element expected");
  } else {
    for (std::size_t k = 0; k < g.order(); ++k) names.push_back(std::to_string(k));
  }
  return names;
}

Index element_from_json(const Json& j, const FiniteGroup& g, const std::vector<std::string>& names) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == s) return static_cast<Index>(k);
    bad("unknown element " + s);
  }
  const auto a = as<Index>(j, "element");
  if (!g.valid_index(a)) bad("element " + std::to_string(a) + " out of range");
  return a;
}

Subgroup subgroup_from_json(const Json& j, const FiniteGroup& g, const std::vector<std::string>& names) {
  auto list = [&](const Json& arr) {
    std::vector<Index> out;
    if (!arr.is_array()) bad("subgroup elements must be a list");
    for (const auto& x : arr) out.push_back(element_from_json(x, g, names));
    return out;
  };
  if (j.is_array()) return Subgroup(g, list(j));
  if (j.contains("members")) return Subgroup(g, list(j["members"]));
  if (j.contains("generators")) {
    auto gens = list(j["generators"]);
    return subgroup_closure(g, gens);
  }
  bad("subgroup needs \"members\" or \"generators\"");
}

Json subgroup_to_json(const Subgroup& h) { return {{"members", h.members()}}; }

FiniteAction action_from_json(const Json& j, const std::filesystem::path& base, std::size_t max_order) {
  auto g = group_from_json(resolve(need(j, "group"), base), max_order);
  const auto points = as<std::size_t>(need(j, "points"), "points");
  auto act = index_rows(need(j, "act"), "act");
  Side side = Side::Right;
  if (j.contains("side")) {
    const auto s = as<std::string>(j["side"], "side");
    if (s == "left") side = Side::Left;
    else if (s != "right") bad("side must be \"right\" or \"left\"");
  }
  return FiniteAction(g, points, act, side);
}

FiniteGroupoid groupoid_from_json(const Json& j) {
  const auto objects = as<std::size_t>(need(j, "objects"), "objects");
  auto src = as<std::vector<Index>>(need(j, "src"), "src");
  auto tgt = as<std::vector<Index>>(need(j, "tgt"), "tgt");
  auto id = as<std::vector<Index>>(need(j, "id"), "id");
  auto inv = as<std::vector<Index>>(need(j, "inv"), "inv");
  if (j.contains("arrows") && as<std::size_t>(j["arrows"], "arrows") != src.size()) bad("arrows does not match src");
  std::vector<FiniteGroupoid::MulEntry> mul;
  for (const auto& row : index_rows(need(j, "mul"), "mul")) {
    if (row.size() != 3) bad("mul entries are [g, h, gh]");
    mul.push_back({row[0], row[1], row[2]});
  }
  return FiniteGroupoid(objects, std::move(src), std::move(tgt), std::move(id), std::move(inv), mul);
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  std::vector<Index> src, tgt, id, inv;
  for (Index a = 0; a < static_cast<Index>(g.arrows()); ++a) {
    src.push_back(g.src(a));
    tgt.push_back(g.tgt(a));
    inv.push_back(g.inv(a));
  }
  for (Index x = 0; x < static_cast<Index>(g.objects()); ++x) id.push_back(g.unit(x));
  Json mul = Json::array();
  for (const auto& e : g.mul_entries()) mul.push_back({e.g, e.h, e.gh});
  return {{"objects", g.objects()}, {"arrows", g.arrows()}, {"src", src}, {"tgt", tgt},
          {"id", id},               {"inv", inv},           {"mul", mul}};
}

GroupoidAction groupoid_action_from_json(const Json& j, const std::filesystem::path& base, std::size_t max_order) {
  auto gd = groupoid_from_json(resolve(need(j, "groupoid"), base));
  auto g = group_from_json(resolve(need(j, "group"), base), max_order);
  return GroupoidAction(gd, g, index_rows(need(j, "act"), "act"));
}

Json groupoid_action_to_json(const GroupoidAction& ga) {
  return {{"groupoid", groupoid_to_json(ga.groupoid())}, {"group", group_to_json(ga.group())}, {"act", ga.rows()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return Field::parse(j.get<std::string>());
  if (j.is_object() && j.contains("Fp")) return Field::prime(as<std::uint32_t>(j["Fp"], "Fp"));
  bad("field must be \"Q\" or {\"Fp\": p}");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return {{"Fp", f.characteristic()}};
}

GradedSignature signature_from_json(const Json& j) {
  const auto dims = as<std::vector<std::size_t>>(need(j, "dims"), "dims");
  const auto base = j.contains("base") ? as<std::size_t>(j["base"], "base") : 0;
  std::string mode = j.contains("mode") ? as<std::string>(j["mode"], "mode") : (j.contains("n") ? "multi" : "simple");
  if (mode == "simple") return GradedSignature::simple(dims, base);
  if (mode == "multi") return GradedSignature::multi_ordered(as<std::size_t>(need(j, "n"), "n"), dims, base);
  bad("mode must be \"simple\" or \"multi\"");
}

Json signature_to_json(const GradedSignature& sig) {
  Json j = {{"dims", sig.dims()}, {"base", sig.base_dim()}};
  if (sig.mode() == GradedSignature::Mode::Simple) {
    j["mode"] = "simple";
  } else {
    j["mode"] = "multi";
    j["n"] = sig.gradings();
  }
  return j;
}

Scalar scalar_from_json(const Json& term, Field f) {
  auto text = [&](const char* key, const char* dflt) -> std::string {
    if (!term.contains(key)) return dflt;
    const auto& v = term[key];
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return as<std::string>(v, key);
  };
  try {
    return Scalar::fraction(f, text("num", "1"), text("den", "1"));
  } catch (const std::invalid_argument&) {
    bad("malformed coefficient");
  }
}

Polynomial polynomial_from_json(const Json& terms, Field f, std::size_t nvars) {
  Polynomial p(f, nvars);
  if (!terms.is_array()) bad("terms must be a list");
  for (const auto& t : terms) {
    auto e = as<Exponents>(need(t, "exponents"), "exponents");
    if (e.size() != nvars) bad("exponent vector of length " + std::to_string(e.size()) + ", expected " + std::to_string(nvars));
    p.add_term(e, scalar_from_json(t, f));
  }
  return p;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"num", c.numerator()}, {"den", c.denominator()}});
  return out;
}

PolyMap polymap_from_terms(const Json& terms, const GradedSignature& in, const GradedSignature& out, Field f) {
  std::vector<Polynomial> comps(out.coords(), Polynomial(f, in.coords()));
  if (!terms.is_array()) bad("terms must be a list");
  for (const auto& t : terms) {
    const auto target = as<std::size_t>(need(t, "target"), "target");
    if (target >= out.coords()) bad("target " + std::to_string(target) + " out of range");
    auto e = as<Exponents>(need(t, "exponents"), "exponents");
    if (e.size() != in.coords()) bad("exponent vector of length " + std::to_string(e.size()) + ", expected " + std::to_string(in.coords()));
    comps[target].add_term(e, scalar_from_json(t, f));
  }
  return PolyMap(in, out, f, std::move(comps));
}

PolyMap polymap_from_json(const Json& j, Field f) {
  auto in = signature_from_json(need(j, "sig_in"));
  auto out = j.contains("sig_out") ? signature_from_json(j["sig_out"]) : in;
  return polymap_from_terms(need(j, "terms"), in, out, f);
}

Json polymap_terms(const PolyMap& m) {
  Json out = Json::array();
  std::vector<int> total;
  for (std::size_t c = 0; c < m.sig_in().coords(); ++c) total.push_back(m.sig_in().total_weight(c));
  for (std::size_t c = 0; c < m.components().size(); ++c) {
    // by total weight, then exponent vector
    std::vector<std::pair<long, const Exponents*>> order;
    for (const auto& [e, x] : m.component(c).terms()) order.push_back({weighted_degree(e, total), &e});
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : *a.second < *b.second;
    });
    for (const auto& [w, e] : order) {
      const Scalar& x = m.component(c).terms().at(*e);
      out.push_back({{"target", c}, {"exponents", *e}, {"num", x.numerator()}, {"den", x.denominator()}});
    }
  }
  return out;
}

Json polymap_to_json(const PolyMap& m) {
  return {{"sig_in", signature_to_json(m.sig_in())},
          {"sig_out", signature_to_json(m.sig_out())},
          {"field", field_to_json(m.field())},
          {"terms", polymap_terms(m)}};
}

CoverNerve nerve_from_json(const Json& j) {
  const auto charts = as<std::size_t>(need(j, "charts"), "charts");
  if (!j.contains("overlaps")) {
    if (j.contains("triples")) bad("triples given without overlaps");
    return CoverNerve::full(charts);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& p : as<std::vector<std::vector<std::size_t>>>(j["overlaps"], "overlaps")) {
    if (p.size() != 2) bad("overlaps are [i, j]");
    pairs.push_back({p[0], p[1]});
  }
  std::vector<std::array<std::size_t, 3>> triples;
  if (j.contains("triples"))
    for (const auto& t : as<std::vector<std::vector<std::size_t>>>(j["triples"], "triples")) {
      if (t.size() != 3) bad("triples are [i, j, k]");
      triples.push_back({t[0], t[1], t[2]});
    }
  return CoverNerve(charts, std::move(pairs), std::move(triples));
}

Json nerve_to_json(const CoverNerve& n) {
  Json pairs = Json::array(), triples = Json::array();
  for (const auto& [i, j] : n.pairs()) pairs.push_back({i, j});
  for (const auto& t : n.triples()) triples.push_back(t);
  return {{"charts", n.charts()}, {"overlaps", pairs}, {"triples", triples}};
}

Json check_to_json(const CocycleCheck& chk) {
  Json j = {{"valid", chk.valid}};
  if (!chk.valid) {
    j["law"] = chk.law;
    j["witness"] = chk.witness;
    j["message"] = chk.message();
  }
  return j;
}

}  // namespace npb::json_io
