#pragma once

// JSON readers and writers for groups, actions, groupoids, signatures,
// polynomial maps and cocycles. Malformed input throws Error(InvalidInput).

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "npb/aut.hpp"
#include "npb/cocycle.hpp"
#include "npb/graded.hpp"
#include "npb/group.hpp"
#include "npb/groupoid.hpp"
#include "npb/principal.hpp"

namespace npb::json_io {

using Json = nlohmann::json;

Json load_file(const std::filesystem::path& path);

/// A value that may be given inline or as a path relative to base.
Json resolve(const Json& j, const std::filesystem::path& base);

/// {"order": n, "table": [[...]]} or {"permutations": [[...]], "degree": m};
/// optional "names": one string per element.
FiniteGroup group_from_json(const Json& j, std::size_t max_order = 10000);
Json group_to_json(const FiniteGroup& g);
/// Element names from "names", or the decimal indices.
std::vector<std::string> element_names(const Json& group_json, const FiniteGroup& g);
/// An element given as an index or a name.
Index element_from_json(const Json& j, const FiniteGroup& g, const std::vector<std::string>& names);

/// {"members": [...]}, {"generators": [...]} or a bare member list.
Subgroup subgroup_from_json(const Json& j, const FiniteGroup& g, const std::vector<std::string>& names);
Json subgroup_to_json(const Subgroup& h);

/// {"group": <group or path>, "points": m, "act": [[...]], "side": "right"|"left"}.
FiniteAction action_from_json(const Json& j, const std::filesystem::path& base = {}, std::size_t max_order = 10000);

/// {"objects", "arrows", "src", "tgt", "id", "inv", "mul": [[g,h,gh],...]}.
FiniteGroupoid groupoid_from_json(const Json& j);
Json groupoid_to_json(const FiniteGroupoid& g);
/// {"groupoid": <groupoid>, "group": <group>, "act": [[...]]} with act[g][a] = a.g.
GroupoidAction groupoid_action_from_json(const Json& j, const std::filesystem::path& base = {},
                                         std::size_t max_order = 10000);
Json groupoid_action_to_json(const GroupoidAction& ga);

/// "Q", "Fp:3", {"Fp": 3}.
Field field_from_json(const Json& j);
Json field_to_json(Field f);

/// {"mode": "simple", "dims": [...], "base": b} or
/// {"mode": "multi", "n": n, "dims": [...] in block order, "base": b}.
GradedSignature signature_from_json(const Json& j);
Json signature_to_json(const GradedSignature& sig);

Scalar scalar_from_json(const Json& term, Field f);
/// [{"exponents": [...], "num": "...", "den": "..."}].
Polynomial polynomial_from_json(const Json& terms, Field f, std::size_t nvars);
Json polynomial_to_json(const Polynomial& p);

/// {"sig_in", "sig_out" (default sig_in), "terms": [{"target", "exponents", "num", "den"}]}.
PolyMap polymap_from_json(const Json& j, Field f);
PolyMap polymap_from_terms(const Json& terms, const GradedSignature& in, const GradedSignature& out, Field f);
Json polymap_to_json(const PolyMap& m);
/// Terms only, by target, then total weight, then exponent vector.
Json polymap_terms(const PolyMap& m);

/// {"charts", "overlaps", "triples"}; "overlaps" may be omitted together
/// with "triples" for the full nerve.
CoverNerve nerve_from_json(const Json& j);
Json nerve_to_json(const CoverNerve& n);

/// Values from "values": [{"pair": [i,j], "element": ...}]. Missing reverse
/// pairs get the inverse of the given one; the diagonal and pairs given in
/// neither order get the identity.
template <class T, class Parse, class Inverse>
Cocycle<T> cocycle_from_json(const Json& j, Parse parse, Inverse inverse, const T& identity) {
  Cocycle<T> c;
  c.nerve = nerve_from_json(j);
  if (!j.contains("values") || !j["values"].is_array()) throw Error(ErrorKind::InvalidInput, "cocycle needs \"values\"");
  for (const auto& v : j["values"]) {
    if (!v.contains("pair") || !v.contains("element")) throw Error(ErrorKind::InvalidInput, "value needs pair and element");
    const auto pair = v["pair"].get<std::vector<std::size_t>>();
    if (pair.size() != 2 || !c.nerve.overlaps(pair[0], pair[1]))
      throw Error(ErrorKind::InvalidInput, "value on a pair outside the nerve");
    if (!c.values.emplace(std::pair{pair[0], pair[1]}, parse(v["element"])).second)
      throw Error(ErrorKind::InvalidInput, "duplicate value on a pair");
  }
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, T>> fill;
  for (const auto& [k, x] : c.values)
    if (k.first != k.second && !c.values.count({k.second, k.first})) fill.push_back({{k.second, k.first}, inverse(x)});
  for (auto& [k, x] : fill) c.values.emplace(k, std::move(x));
  for (std::size_t i = 0; i < c.nerve.charts(); ++i) c.values.emplace(std::pair{i, i}, identity);
  for (const auto& [i, k] : c.nerve.pairs())
    if (!c.values.count({i, k})) {
      c.values.emplace(std::pair{i, k}, identity);
      c.values.emplace(std::pair{k, i}, identity);
    }
  return c;
}

template <class T, class Write>
Json cocycle_to_json(const Cocycle<T>& c, Write write) {
  Json j = nerve_to_json(c.nerve);
  j["values"] = Json::array();
  for (const auto& [k, x] : c.values) j["values"].push_back({{"pair", {k.first, k.second}}, {"element", write(x)}});
  return j;
}

Json check_to_json(const CocycleCheck& chk);

}  // namespace npb::json_io
