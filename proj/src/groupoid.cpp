#include "npb/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace npb {

namespace {

std::string str(Index i) { return std::to_string(i); }
std::string pair_str(Index a, Index b) { return "(" + str(a) + "," + str(b) + ")"; }

[[noreturn]] void not_groupoid(const std::string& what) { throw Error(ErrorKind::NotAGroupoid, what); }

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

}  // namespace

// ---------------------------------------------------------------------------
// FiniteGroupoid

FiniteGroupoid::FiniteGroupoid(std::size_t objects, std::vector<Index> src_in, std::vector<Index> tgt_in,
                               std::vector<Index> unit_in, std::vector<Index> inv_in,
                               const std::vector<MulEntry>& products)
    : objects_(objects), src_(std::move(src_in)), tgt_(std::move(tgt_in)), unit_(std::move(unit_in)),
      inv_(std::move(inv_in)), into_(objects) {
  const std::size_t n = src_.size();
  if (objects_ == 0) not_groupoid("groupoid needs at least one object");
  if (tgt_.size() != n || inv_.size() != n) not_groupoid("src/tgt/inv must have one entry per arrow");
  if (unit_.size() != objects_) not_groupoid("id must have one entry per object");
  const auto arrow_ok = [&](Index a) { return a >= 0 && sz(a) < n; };
  const auto object_ok = [&](Index x) { return x >= 0 && sz(x) < objects_; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!object_ok(src_[a]) || !object_ok(tgt_[a])) not_groupoid("arrow " + std::to_string(a) + " has an invalid endpoint");
    if (!arrow_ok(inv_[a])) not_groupoid("arrow " + std::to_string(a) + " has an invalid inverse");
    into_[sz(tgt_[a])].push_back(static_cast<Index>(a));
  }
  for (std::size_t x = 0; x < objects_; ++x) {
    const Index u = unit_[x];
    if (!arrow_ok(u) || src_[sz(u)] != static_cast<Index>(x) || tgt_[sz(u)] != static_cast<Index>(x))
      not_groupoid("unit of object " + std::to_string(x) + " is not a loop at it");
  }

  std::size_t expected = 0;
  for (std::size_t g = 0; g < n; ++g) expected += into_[sz(src_[g])].size();
  mul_.reserve(expected);
  for (const auto& e : products) {
    if (!arrow_ok(e.g) || !arrow_ok(e.h) || !arrow_ok(e.gh)) not_groupoid("mul entry out of range");
    if (!composable(e.g, e.h)) not_groupoid("mul defined on non-composable pair " + pair_str(e.g, e.h));
    if (!mul_.emplace(key(e.g, e.h), e.gh).second) not_groupoid("mul entry repeated for " + pair_str(e.g, e.h));
  }
  if (mul_.size() != expected) {
    for (std::size_t g = 0; g < n; ++g)
      for (Index h : into_[sz(src_[g])])
        if (!mul_.contains(key(static_cast<Index>(g), h)))
          not_groupoid("mul missing for composable pair " + pair_str(static_cast<Index>(g), h));
  }

  for (std::size_t gi = 0; gi < n; ++gi) {
    const auto g = static_cast<Index>(gi);
    for (Index h : into_[sz(src_[gi])]) {
      const Index gh = mul(g, h);
      if (src(gh) != src(h) || tgt(gh) != tgt(g))
        not_groupoid("product of " + pair_str(g, h) + " has wrong endpoints");
    }
    if (mul(g, unit(src(g))) != g || mul(unit(tgt(g)), g) != g)
      not_groupoid("units are not two-sided at arrow " + str(g));
    const Index gi_ = inv(g);
    if (src(gi_) != tgt(g) || tgt(gi_) != src(g)) not_groupoid("inverse of arrow " + str(g) + " has wrong endpoints");
    if (mul(g, gi_) != unit(tgt(g)) || mul(gi_, g) != unit(src(g)))
      not_groupoid("inverse of arrow " + str(g) + " does not give units");
  }
  // associativity on composable triples (g h) k = g (h k)
  for (std::size_t gi = 0; gi < n; ++gi) {
    const auto g = static_cast<Index>(gi);
    for (Index h : into_[sz(src(g))])
      for (Index k : into_[sz(src(h))])
        if (mul(mul(g, h), k) != mul(g, mul(h, k)))
          not_groupoid("associativity fails on (" + str(g) + "," + str(h) + "," + str(k) + ")");
  }
}

Index FiniteGroupoid::mul(Index g, Index h) const {
  auto it = mul_.find(key(g, h));
  if (it == mul_.end()) throw Error(ErrorKind::InvalidInput, "arrows " + pair_str(g, h) + " are not composable");
  return it->second;
}

std::vector<FiniteGroupoid::MulEntry> FiniteGroupoid::mul_entries() const {
  std::vector<MulEntry> out;
  out.reserve(mul_.size());
  for (std::size_t g = 0; g < arrows(); ++g) {
    std::vector<Index> hs = into_[sz(src_[g])];
    std::sort(hs.begin(), hs.end());
    for (Index h : hs) out.push_back({static_cast<Index>(g), h, mul(static_cast<Index>(g), h)});
  }
  return out;
}

FiniteGroupoid FiniteGroupoid::pair(std::size_t n) {
  std::vector<Index> src(n * n), tgt(n * n), inv(n * n), unit(n);
  std::vector<MulEntry> mul;
  for (std::size_t x = 0; x < n; ++x) {
    unit[x] = static_cast<Index>(x * n + x);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x * n + y;
      src[a] = static_cast<Index>(y);
      tgt[a] = static_cast<Index>(x);
      inv[a] = static_cast<Index>(y * n + x);
      for (std::size_t z = 0; z < n; ++z)
        mul.push_back({static_cast<Index>(a), static_cast<Index>(y * n + z), static_cast<Index>(x * n + z)});
    }
  }
  return FiniteGroupoid(n, src, tgt, unit, inv, mul);
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Index> zeros(n, 0), inv(n);
  std::vector<MulEntry> mul;
  for (std::size_t a = 0; a < n; ++a) {
    inv[a] = g.inverse(static_cast<Index>(a));
    for (std::size_t b = 0; b < n; ++b)
      mul.push_back({static_cast<Index>(a), static_cast<Index>(b), g.mul(static_cast<Index>(a), static_cast<Index>(b))});
  }
  return FiniteGroupoid(1, zeros, zeros, {g.identity()}, inv, mul);
}

// ---------------------------------------------------------------------------
// Actions on groupoids

GroupoidAction::GroupoidAction(FiniteGroupoid groupoid, FiniteGroup group,
                               const std::vector<std::vector<Index>>& act)
    : groupoid_(std::move(groupoid)), group_(std::move(group)) {
  // Reuse the validation of FiniteAction: an action on the arrow set.
  FiniteAction as_set(group_, groupoid_.arrows(), act, Side::Right);
  act_.resize(group_.order() * groupoid_.arrows());
  for (std::size_t g = 0; g < group_.order(); ++g) {
    auto p = as_set.permutation(static_cast<Index>(g));
    std::copy(p.begin(), p.end(), act_.begin() + static_cast<std::ptrdiff_t>(g * groupoid_.arrows()));
  }
}

std::vector<std::vector<Index>> GroupoidAction::rows() const {
  const std::size_t m = groupoid_.arrows();
  std::vector<std::vector<Index>> out(group_.order());
  for (std::size_t g = 0; g < group_.order(); ++g)
    out[g].assign(act_.begin() + static_cast<std::ptrdiff_t>(g * m), act_.begin() + static_cast<std::ptrdiff_t>((g + 1) * m));
  return out;
}

CompatReport check_compatible(const GroupoidAction& ga) {
  const FiniteGroupoid& gd = ga.groupoid();
  const FiniteGroup& grp = ga.group();
  const std::size_t m = gd.arrows(), n = gd.objects();

  std::vector<Index> ker;
  for (std::size_t g = 0; g < grp.order(); ++g) {
    bool trivial = true;
    for (std::size_t a = 0; a < m && trivial; ++a) trivial = ga.apply(static_cast<Index>(a), static_cast<Index>(g)) == static_cast<Index>(a);
    if (trivial) ker.push_back(static_cast<Index>(g));
  }
  CompatReport rep{false, Subgroup(grp, ker), false, std::nullopt, false, {}};

  std::vector<std::vector<Index>> object_rows(grp.order(), std::vector<Index>(n));
  std::string failure;
  for (std::size_t gi = 0; gi < grp.order() && failure.empty(); ++gi) {
    const auto g = static_cast<Index>(gi);
    auto h = [&](Index a) { return ga.apply(a, g); };
    auto& phi = object_rows[gi];
    std::vector<unsigned char> hit(n);
    for (std::size_t x = 0; x < n && failure.empty(); ++x) {
      const Index hu = h(gd.unit(static_cast<Index>(x)));
      const Index y = gd.tgt(hu);
      if (gd.unit(y) != hu) failure = "element " + str(g) + " maps the unit of object " + std::to_string(x) + " to a non-unit";
      else if (hit[sz(y)]) failure = "element " + str(g) + " is not injective on objects";
      phi[x] = y;
      hit[sz(y)] = 1;
    }
    for (std::size_t ai = 0; ai < m && failure.empty(); ++ai) {
      const auto a = static_cast<Index>(ai);
      if (gd.src(h(a)) != phi[sz(gd.src(a))] || gd.tgt(h(a)) != phi[sz(gd.tgt(a))])
        failure = "element " + str(g) + " does not cover its object map at arrow " + str(a);
      else if (h(gd.inv(a)) != gd.inv(h(a)))
        failure = "element " + str(g) + " does not preserve the inverse of arrow " + str(a);
      else {
        for (Index b : gd.arrows_into(gd.src(a))) {
          if (!gd.composable(h(a), h(b)) || h(gd.mul(a, b)) != gd.mul(h(a), h(b))) {
            failure = "element " + str(g) + " does not preserve composition of " + pair_str(a, b);
            break;
          }
        }
      }
    }
  }
  rep.failure = failure;
  rep.compatible = failure.empty();

  rep.pre_principal = true;
  for (std::size_t a = 0; a < m && rep.pre_principal; ++a)
    for (std::size_t g = 0; g < grp.order(); ++g)
      if (ga.apply(static_cast<Index>(a), static_cast<Index>(g)) == static_cast<Index>(a) && !rep.kernel.contains(static_cast<Index>(g))) {
        rep.pre_principal = false;
        break;
      }

  if (rep.compatible) {
    rep.object_action.emplace(grp, n, object_rows, Side::Right);
    rep.free_on_objects_mod_kernel = true;
    for (std::size_t x = 0; x < n && rep.free_on_objects_mod_kernel; ++x)
      for (std::size_t g = 0; g < grp.order(); ++g)
        if (object_rows[g][x] == static_cast<Index>(x) && !rep.kernel.contains(static_cast<Index>(g))) {
          rep.free_on_objects_mod_kernel = false;
          break;
        }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Gauge groupoids

GaugeGroupoid gauge_groupoid(const FiniteAction& a) {
  const auto report = action_check(a);
  if (!report.is_free)
    throw Error(ErrorKind::ActionNotFree, "point " + str(report.fixed_witness->first) + " is fixed by element " +
                                              str(report.fixed_witness->second));
  const FiniteGroup& g = a.group();
  const std::size_t np = a.points();

  GaugeGroupoid out{FiniteGroupoid::pair(1), std::vector<Index>(np * np, -1), {}, report.orbit_of};
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      if (out.arrow_of[p * np + q] != -1) continue;
      const auto arrow = static_cast<Index>(out.representative.size());
      out.representative.emplace_back(static_cast<Index>(p), static_cast<Index>(q));
      for (std::size_t x = 0; x < g.order(); ++x) {
        const Index pg = a.apply(static_cast<Index>(p), static_cast<Index>(x));
        const Index qg = a.apply(static_cast<Index>(q), static_cast<Index>(x));
        out.arrow_of[sz(pg) * np + sz(qg)] = arrow;
      }
    }
  }

  const std::size_t m = out.representative.size();
  const std::size_t n = report.orbits.size();
  std::vector<Index> src(m), tgt(m), inv(m), unit(n);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [p, q] = out.representative[i];
    src[i] = out.object_of[sz(q)];
    tgt[i] = out.object_of[sz(p)];
    inv[i] = out.label(q, p);
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Index px = report.orbits[x].front();
    unit[x] = out.label(px, px);
  }
  // second[q * m + B] = the unique r with <q, r> = B.
  std::vector<Index> second(np * m, -1);
  for (std::size_t q = 0; q < np; ++q)
    for (std::size_t r = 0; r < np; ++r) second[q * m + sz(out.label(static_cast<Index>(q), static_cast<Index>(r)))] = static_cast<Index>(r);

  std::vector<FiniteGroupoid::MulEntry> mul;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [p, q] = out.representative[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (tgt[j] != src[i]) continue;
      const Index r = second[sz(q) * m + j];
      mul.push_back({static_cast<Index>(i), static_cast<Index>(j), out.label(p, r)});
    }
  }
  out.groupoid = FiniteGroupoid(n, src, tgt, unit, inv, mul);
  return out;
}

InducedGaugeAction induced_gauge_action(const GaugeGroupoid& gauge, const FiniteAction& other) {
  const std::size_t np = gauge.object_of.size();
  if (other.points() != np) throw Error(ErrorKind::InvalidInput, "actions on different point sets");
  const std::size_t m = gauge.groupoid.arrows();
  const FiniteGroup& h = other.group();
  std::vector<std::vector<Index>> act(h.order(), std::vector<Index>(m, -1));
  for (std::size_t x = 0; x < h.order(); ++x) {
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t q = 0; q < np; ++q) {
        const Index arrow = gauge.label(static_cast<Index>(p), static_cast<Index>(q));
        const Index img = gauge.label(other.apply(static_cast<Index>(p), static_cast<Index>(x)),
                                      other.apply(static_cast<Index>(q), static_cast<Index>(x)));
        Index& slot = act[x][sz(arrow)];
        if (slot == -1) slot = img;
        else if (slot != img)
          return {std::nullopt, "<p,q>.h is not well defined: arrow " + str(arrow) + ", element " +
                                    std::to_string(x) + ", representative " + pair_str(static_cast<Index>(p), static_cast<Index>(q))};
      }
    }
  }
  try {
    return {GroupoidAction(gauge.groupoid, h, act), {}};
  } catch (const Error& e) {
    return {std::nullopt, e.what()};
  }
}

// ---------------------------------------------------------------------------
// Quotients and splitting

namespace {

struct OrbitNumbering {
  std::vector<Index> orbit_of;
  std::vector<Index> rep;
};

template <class Apply>
OrbitNumbering orbit_numbering(std::size_t size, std::size_t group_order, Apply apply) {
  OrbitNumbering o{std::vector<Index>(size, -1), {}};
  for (std::size_t a = 0; a < size; ++a) {
    if (o.orbit_of[a] != -1) continue;
    const auto id = static_cast<Index>(o.rep.size());
    o.rep.push_back(static_cast<Index>(a));
    for (std::size_t g = 0; g < group_order; ++g) o.orbit_of[sz(apply(static_cast<Index>(a), static_cast<Index>(g)))] = id;
  }
  return o;
}

}  // namespace

QuotientGroupoid quotient_groupoid(const GroupoidAction& ga) {
  const auto rep = check_compatible(ga);
  if (!rep.compatible) throw Error(ErrorKind::NotCompatible, rep.failure);
  if (!rep.pre_principal) throw Error(ErrorKind::NotFree, "the action modulo its kernel is not free on arrows");
  const FiniteGroupoid& gd = ga.groupoid();
  const std::size_t order = ga.group().order();
  const FiniteAction& obj = *rep.object_action;

  const auto arrows = orbit_numbering(gd.arrows(), order, [&](Index a, Index g) { return ga.apply(a, g); });
  const auto objects = orbit_numbering(gd.objects(), order, [&](Index x, Index g) { return obj.apply(x, g); });
  const std::size_t m0 = arrows.rep.size(), n0 = objects.rep.size();

  std::vector<Index> src(m0), tgt(m0), inv(m0), unit(n0);
  for (std::size_t i = 0; i < m0; ++i) {
    const Index a = arrows.rep[i];
    src[i] = objects.orbit_of[sz(gd.src(a))];
    tgt[i] = objects.orbit_of[sz(gd.tgt(a))];
    inv[i] = arrows.orbit_of[sz(gd.inv(a))];
  }
  for (std::size_t x = 0; x < n0; ++x) unit[x] = arrows.orbit_of[sz(gd.unit(objects.rep[x]))];

  std::unordered_map<std::uint64_t, Index> prod;
  std::vector<FiniteGroupoid::MulEntry> mul;
  for (const auto& e : gd.mul_entries()) {
    const Index a0 = arrows.orbit_of[sz(e.g)], b0 = arrows.orbit_of[sz(e.h)], ab0 = arrows.orbit_of[sz(e.gh)];
    const auto k = (static_cast<std::uint64_t>(a0) << 32) | static_cast<std::uint32_t>(b0);
    auto [it, fresh] = prod.emplace(k, ab0);
    if (fresh) mul.push_back({a0, b0, ab0});
    else if (it->second != ab0)
      throw Error(ErrorKind::InternalInconsistency, "quotient product of orbits " + pair_str(a0, b0) + " is not well defined");
  }
  QuotientGroupoid q{FiniteGroupoid(n0, src, tgt, unit, inv, mul), arrows.orbit_of, objects.orbit_of};

  // (pi, p) is a morphism: sigma pi = p s, tau pi = p t, units, inverses, products.
  const FiniteGroupoid& g0 = q.groupoid;
  for (std::size_t ai = 0; ai < gd.arrows(); ++ai) {
    const auto a = static_cast<Index>(ai);
    const Index pa = q.arrow_map[ai];
    if (g0.src(pa) != q.object_map[sz(gd.src(a))] || g0.tgt(pa) != q.object_map[sz(gd.tgt(a))])
      throw Error(ErrorKind::InternalInconsistency, "projection does not commute with src/tgt at arrow " + str(a));
    if (q.arrow_map[sz(gd.inv(a))] != g0.inv(pa))
      throw Error(ErrorKind::InternalInconsistency, "projection does not preserve inverse of arrow " + str(a));
    for (Index b : gd.arrows_into(gd.src(a)))
      if (q.arrow_map[sz(gd.mul(a, b))] != g0.mul(pa, q.arrow_map[sz(b)]))
        throw Error(ErrorKind::InternalInconsistency, "projection does not preserve product " + pair_str(a, b));
  }
  for (std::size_t x = 0; x < gd.objects(); ++x)
    if (q.arrow_map[sz(gd.unit(static_cast<Index>(x)))] != g0.unit(q.object_map[x]))
      throw Error(ErrorKind::InternalInconsistency, "projection does not preserve unit of object " + std::to_string(x));
  return q;
}

SplitPresentation split(const GroupoidAction& ga) {
  auto q = quotient_groupoid(ga);
  auto rep = check_compatible(ga);
  const FiniteGroupoid& gd = ga.groupoid();
  const FiniteGroup& grp = ga.group();
  const std::size_t nm = gd.objects();

  SplitPresentation sp{std::move(q), *rep.object_action, {}, {}, {}};
  const FiniteGroupoid& g0 = sp.quotient.groupoid;
  const auto& p = sp.quotient.object_map;
  std::vector<Index> fp_index(g0.arrows() * nm, -1);
  for (std::size_t y0 = 0; y0 < g0.arrows(); ++y0)
    for (std::size_t x = 0; x < nm; ++x)
      if (p[x] == g0.src(static_cast<Index>(y0))) {
        fp_index[y0 * nm + x] = static_cast<Index>(sp.fiber_product.size());
        sp.fiber_product.emplace_back(static_cast<Index>(y0), static_cast<Index>(x));
      }

  const auto fail = [](const std::string& what) { throw Error(ErrorKind::SplitFailure, what); };
  std::vector<Index> preimage(sp.fiber_product.size(), -1);
  sp.S.resize(gd.arrows());
  for (std::size_t y = 0; y < gd.arrows(); ++y) {
    const Index s = fp_index[sz(sp.quotient.arrow_map[y]) * nm + sz(gd.src(static_cast<Index>(y)))];
    if (s < 0) fail("S(" + std::to_string(y) + ") is outside the fiber product");
    if (preimage[sz(s)] != -1) fail("S is not injective: arrows " + str(preimage[sz(s)]) + " and " + std::to_string(y));
    preimage[sz(s)] = static_cast<Index>(y);
    sp.S[y] = s;
  }
  for (std::size_t i = 0; i < preimage.size(); ++i)
    if (preimage[i] == -1)
      fail("S is not surjective: no arrow over " + pair_str(sp.fiber_product[i].first, sp.fiber_product[i].second));

  sp.t_action.assign(g0.arrows() * nm, -1);
  for (std::size_t i = 0; i < preimage.size(); ++i) {
    const auto [y0, x] = sp.fiber_product[i];
    sp.t_action[sz(y0) * nm + sz(x)] = gd.tgt(preimage[i]);
  }

  for (const auto& [y0, x] : sp.fiber_product) {
    const Index yx = sp.act(y0, x);
    if (p[sz(yx)] != g0.tgt(y0)) fail("(i) p(y0.x) = tau(y0) fails at " + pair_str(y0, x));
    for (Index y1 : g0.arrows_into(g0.src(y0))) {
      // y1 : x' -> src(y0); act on points over src(y1)
      for (std::size_t x1 = 0; x1 < nm; ++x1) {
        if (p[x1] != g0.src(y1)) continue;
        if (sp.act(y0, sp.act(y1, static_cast<Index>(x1))) != sp.act(g0.mul(y0, y1), static_cast<Index>(x1)))
          fail("(ii) y0.(y0'.x) = (y0 y0').x fails at y0=" + str(y0) + ", y0'=" + str(y1) + ", x=" + std::to_string(x1));
      }
    }
    for (std::size_t g = 0; g < grp.order(); ++g) {
      const Index xg = sp.units_bundle.apply(x, static_cast<Index>(g));
      if (sp.act(y0, xg) != sp.units_bundle.apply(yx, static_cast<Index>(g)))
        fail("(iv) y0.(xg) = (y0.x)g fails at y0=" + str(y0) + ", x=" + str(x) + ", g=" + std::to_string(g));
    }
  }
  for (std::size_t x = 0; x < nm; ++x)
    if (sp.act(g0.unit(p[x]), static_cast<Index>(x)) != static_cast<Index>(x))
      fail("(iii) Id.x = x fails at x=" + std::to_string(x));
  return sp;
}

Trivialization canonical_trivialization(const SplitPresentation& sp) {
  const FiniteAction& a = sp.units_bundle;
  const auto report = action_check(a);
  if (!report.is_free)
    throw Error(ErrorKind::NotTrivialized, "G does not act freely on objects: point " +
                                               str(report.fixed_witness->first) + " fixed by " +
                                               str(report.fixed_witness->second));
  const std::size_t nm = a.points();
  Trivialization t{sp.quotient.object_map, std::vector<Index>(nm, -1)};
  std::vector<Index> section(sp.quotient.groupoid.objects(), -1);
  for (std::size_t x = 0; x < nm; ++x)
    if (section[sz(t.base[x])] == -1) section[sz(t.base[x])] = static_cast<Index>(x);
  for (std::size_t m0 = 0; m0 < section.size(); ++m0)
    for (std::size_t g = 0; g < a.group().order(); ++g) t.coord[sz(a.apply(section[m0], static_cast<Index>(g)))] = static_cast<Index>(g);
  return t;
}

MultiplicativeFunction multiplicative_function(const SplitPresentation& sp, const Trivialization& triv) {
  const FiniteGroupoid& g0 = sp.quotient.groupoid;
  const FiniteGroup& grp = sp.units_bundle.group();
  const std::size_t nm = sp.units_bundle.points();
  const std::size_t ng = grp.order();
  if (triv.base.size() != nm || triv.coord.size() != nm)
    throw Error(ErrorKind::NotTrivialized, "trivialization has wrong size");

  std::vector<Index> object_at(g0.objects() * ng, -1);
  for (std::size_t x = 0; x < nm; ++x) {
    Index& slot = object_at[sz(triv.base[x]) * ng + sz(triv.coord[x])];
    if (slot != -1) throw Error(ErrorKind::NotTrivialized, "two objects share coordinates at object " + std::to_string(x));
    slot = static_cast<Index>(x);
  }
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t g = 0; g < ng; ++g) {
      const Index xg = sp.units_bundle.apply(static_cast<Index>(x), static_cast<Index>(g));
      if (triv.base[sz(xg)] != triv.base[x] || triv.coord[sz(xg)] != grp.mul(triv.coord[x], static_cast<Index>(g)))
        throw Error(ErrorKind::NotTrivialized, "G does not act on the second factor at object " + std::to_string(x));
    }

  MultiplicativeFunction mf{g0, grp, std::vector<Index>(g0.arrows())};
  for (std::size_t y0 = 0; y0 < g0.arrows(); ++y0) {
    const Index s0 = g0.src(static_cast<Index>(y0));
    const Index t0 = g0.tgt(static_cast<Index>(y0));
    const Index x = object_at[sz(s0) * ng + sz(grp.identity())];
    const Index yx = sp.act(static_cast<Index>(y0), x);
    if (triv.base[sz(yx)] != t0) throw Error(ErrorKind::NotTrivialized, "y0.x leaves the target fiber at y0=" + std::to_string(y0));
    mf.b[y0] = triv.coord[sz(yx)];
    for (std::size_t g = 0; g < ng; ++g) {
      const Index img = sp.act(static_cast<Index>(y0), object_at[sz(s0) * ng + g]);
      if (img != object_at[sz(t0) * ng + sz(grp.mul(mf.b[y0], static_cast<Index>(g)))])
        throw Error(ErrorKind::NotTrivialized, "y0.(x,g) != (tau y0, b(y0) g) at y0=" + std::to_string(y0) + ", g=" + std::to_string(g));
    }
  }
  for (const auto& e : g0.mul_entries())
    if (grp.mul(mf.b[sz(e.g)], mf.b[sz(e.h)]) != mf.b[sz(e.gh)])
      throw Error(ErrorKind::NotMultiplicative, "b(y0) b(y0') != b(y0 y0') at " + pair_str(e.g, e.h));
  return mf;
}

MultiplicativeFunction multiplicative_function(const SplitPresentation& sp) {
  return multiplicative_function(sp, canonical_trivialization(sp));
}

TrivialGGroupoid build_from_morphism(const MultiplicativeFunction& mf) {
  const FiniteGroupoid& g0 = mf.base;
  const FiniteGroup& grp = mf.group;
  const std::size_t ng = grp.order();
  if (mf.b.size() != g0.arrows()) throw Error(ErrorKind::InvalidInput, "b needs one value per arrow");
  for (Index v : mf.b)
    if (!grp.valid_index(v)) throw Error(ErrorKind::InvalidInput, "b value out of range");
  for (const auto& e : g0.mul_entries())
    if (grp.mul(mf.b[sz(e.g)], mf.b[sz(e.h)]) != mf.b[sz(e.gh)])
      throw Error(ErrorKind::NotMultiplicative, "b(y0) b(y0') != b(y0 y0') at " + pair_str(e.g, e.h));

  const std::size_t m = g0.arrows() * ng, n = g0.objects() * ng;
  const auto arrow = [&](Index y0, Index g) { return static_cast<Index>(sz(y0) * ng + sz(g)); };
  std::vector<Index> src(m), tgt(m), inv(m), unit(n);
  std::vector<FiniteGroupoid::MulEntry> mul;
  for (std::size_t y0 = 0; y0 < g0.arrows(); ++y0) {
    const Index b = mf.b[y0];
    for (std::size_t g = 0; g < ng; ++g) {
      const std::size_t a = y0 * ng + g;
      src[a] = static_cast<Index>(sz(g0.src(static_cast<Index>(y0))) * ng + g);
      tgt[a] = static_cast<Index>(sz(g0.tgt(static_cast<Index>(y0))) * ng + sz(grp.mul(b, static_cast<Index>(g))));
      inv[a] = arrow(g0.inv(static_cast<Index>(y0)), grp.mul(b, static_cast<Index>(g)));
    }
  }
  for (std::size_t x0 = 0; x0 < g0.objects(); ++x0)
    for (std::size_t g = 0; g < ng; ++g) unit[x0 * ng + g] = arrow(g0.unit(static_cast<Index>(x0)), static_cast<Index>(g));
  for (const auto& e : g0.mul_entries()) {
    // (y0, g1)(y0', g2) with g1 = b(y0') g2
    for (std::size_t g2 = 0; g2 < ng; ++g2) {
      const Index g1 = grp.mul(mf.b[sz(e.h)], static_cast<Index>(g2));
      mul.push_back({arrow(e.g, g1), arrow(e.h, static_cast<Index>(g2)), arrow(e.gh, static_cast<Index>(g2))});
    }
  }
  FiniteGroupoid gd(n, src, tgt, unit, inv, mul);

  std::vector<std::vector<Index>> act(ng, std::vector<Index>(m));
  for (std::size_t h = 0; h < ng; ++h)
    for (std::size_t y0 = 0; y0 < g0.arrows(); ++y0)
      for (std::size_t g = 0; g < ng; ++g)
        act[h][y0 * ng + g] = arrow(static_cast<Index>(y0), grp.mul(static_cast<Index>(g), static_cast<Index>(h)));

  Trivialization triv{std::vector<Index>(n), std::vector<Index>(n)};
  for (std::size_t x = 0; x < n; ++x) {
    triv.base[x] = static_cast<Index>(x / ng);
    triv.coord[x] = static_cast<Index>(x % ng);
  }
  return {GroupoidAction(std::move(gd), grp, act), std::move(triv)};
}

std::optional<std::string> check_g_isomorphism(const GroupoidAction& a, const GroupoidAction& b,
                                               const std::vector<Index>& arrow_map,
                                               const std::vector<Index>& object_map) {
  const FiniteGroupoid& ga = a.groupoid();
  const FiniteGroupoid& gb = b.groupoid();
  if (ga.arrows() != gb.arrows() || ga.objects() != gb.objects()) return "arrow or object counts differ";
  if (a.group().order() != b.group().order()) return "acting groups differ in order";
  if (arrow_map.size() != ga.arrows() || object_map.size() != ga.objects()) return "maps have wrong size";
  std::vector<unsigned char> hit(gb.arrows());
  for (Index x : arrow_map) {
    if (x < 0 || sz(x) >= gb.arrows() || hit[sz(x)]) return std::string("arrow map is not a bijection");
    hit[sz(x)] = 1;
  }
  std::vector<unsigned char> ohit(gb.objects());
  for (Index x : object_map) {
    if (x < 0 || sz(x) >= gb.objects() || ohit[sz(x)]) return std::string("object map is not a bijection");
    ohit[sz(x)] = 1;
  }
  for (std::size_t yi = 0; yi < ga.arrows(); ++yi) {
    const auto y = static_cast<Index>(yi);
    const Index fy = arrow_map[yi];
    if (gb.src(fy) != object_map[sz(ga.src(y))] || gb.tgt(fy) != object_map[sz(ga.tgt(y))])
      return "src/tgt not preserved at arrow " + str(y);
    if (arrow_map[sz(ga.inv(y))] != gb.inv(fy)) return "inverse not preserved at arrow " + str(y);
    for (Index z : ga.arrows_into(ga.src(y)))
      if (arrow_map[sz(ga.mul(y, z))] != gb.mul(fy, arrow_map[sz(z)])) return "product not preserved at " + pair_str(y, z);
    for (std::size_t g = 0; g < a.group().order(); ++g)
      if (arrow_map[sz(a.apply(y, static_cast<Index>(g)))] != b.apply(fy, static_cast<Index>(g)))
        return "not equivariant at arrow " + str(y) + ", element " + std::to_string(g);
  }
  for (std::size_t x = 0; x < ga.objects(); ++x)
    if (arrow_map[sz(ga.unit(static_cast<Index>(x)))] != gb.unit(object_map[x])) return "unit not preserved at object " + std::to_string(x);
  return std::nullopt;
}

std::optional<std::string> check_split_round_trip(const GroupoidAction& ga) {
  const auto sp = split(ga);
  const auto triv = canonical_trivialization(sp);
  const auto mf = multiplicative_function(sp, triv);
  const auto rebuilt = build_from_morphism(mf);
  const std::size_t ng = mf.group.order();
  const FiniteGroupoid& gd = ga.groupoid();
  std::vector<Index> arrow_map(gd.arrows()), object_map(gd.objects());
  for (std::size_t y = 0; y < gd.arrows(); ++y)
    arrow_map[y] = static_cast<Index>(sz(sp.quotient.arrow_map[y]) * ng + sz(triv.coord[sz(gd.src(static_cast<Index>(y)))]));
  for (std::size_t x = 0; x < gd.objects(); ++x)
    object_map[x] = static_cast<Index>(sz(triv.base[x]) * ng + sz(triv.coord[x]));
  return check_g_isomorphism(ga, rebuilt.action, arrow_map, object_map);
}

}  // namespace npb
