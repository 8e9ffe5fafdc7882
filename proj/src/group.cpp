#include "npb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "npb/kernels.hpp"
#include "npb/parallel.hpp"

namespace npb {

namespace {

std::string triple(Index a, Index b, Index c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

std::shared_ptr<FiniteGroup::Data> FiniteGroup::build(std::size_t n, std::vector<Index> flat,
                                                      bool check_assoc) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "group table is empty");
  if (flat.size() != n * n) throw Error(ErrorKind::InvalidInput, "group table is not square");
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] < 0 || static_cast<std::size_t>(flat[i]) >= n)
      throw Error(ErrorKind::InvalidInput, "table entry out of range at row " +
                                               std::to_string(i / n) + ", column " +
                                               std::to_string(i % n));
  }

  auto d = std::make_shared<Data>();
  d->order = n;
  d->table = std::move(flat);
  const auto at = [&](std::size_t a, std::size_t b) { return d->table[a * n + b]; };

  std::optional<Index> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = at(e, a) == static_cast<Index>(a) && at(a, e) == static_cast<Index>(a);
    if (ok) identity = static_cast<Index>(e);
  }
  if (!identity) throw Error(ErrorKind::NoIdentity, "no two-sided identity element");
  d->identity = *identity;

  std::vector<unsigned char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[static_cast<std::size_t>(at(a, b))];
      if (s) throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(a) +
                                                        " repeats element " +
                                                        std::to_string(at(a, b)));
      s = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto& s = seen[static_cast<std::size_t>(at(a, b))];
      if (s) throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(b) +
                                                        " repeats element " +
                                                        std::to_string(at(a, b)));
      s = 1;
    }
  }

  d->inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == d->identity) {
        if (at(b, a) != d->identity)
          throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) +
                                                " has right inverse " + std::to_string(b) +
                                                " that is not a left inverse");
        d->inverse[a] = static_cast<Index>(b);
        break;
      }
    }
  }

  if (check_assoc) {
    // (ab)c == a(bc) for all c  <=>  row(ab) == row(a) gathered at row(b).
    const auto& k = kernels::active();
    const auto hit = parallel_find_first(n * n, [&](std::size_t ab_pair) {
      const std::size_t a = ab_pair / n;
      const std::size_t b = ab_pair % n;
      const std::span<const Index> row_a(d->table.data() + a * n, n);
      const std::span<const Index> row_b(d->table.data() + b * n, n);
      const std::span<const Index> row_ab(d->table.data() + static_cast<std::size_t>(at(a, b)) * n, n);
      return k.gather_mismatch(row_a, row_b, row_ab) != n;
    });
    if (hit) {
      const std::size_t a = *hit / n;
      const std::size_t b = *hit % n;
      const std::span<const Index> row_a(d->table.data() + a * n, n);
      const std::span<const Index> row_b(d->table.data() + b * n, n);
      const std::span<const Index> row_ab(d->table.data() + static_cast<std::size_t>(at(a, b)) * n, n);
      const std::size_t c = k.gather_mismatch(row_a, row_b, row_ab);
      throw Error(ErrorKind::NonAssociative,
                  "triple " + triple(static_cast<Index>(a), static_cast<Index>(b),
                                     static_cast<Index>(c)) + " violates (ab)c = a(bc)");
    }
  }
  return d;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Index>>& table) {
  const std::size_t n = table.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (const auto& r : table) {
    if (r.size() != n) throw Error(ErrorKind::InvalidInput, "group table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return FiniteGroup(build(n, std::move(flat), true));
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Index> flat) {
  return FiniteGroup(build(order, std::move(flat), false));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<Index>>& generators,
                                           std::size_t degree, std::size_t max_order) {
  if (degree == 0) throw Error(ErrorKind::InvalidInput, "permutation degree must be positive");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    if (p.size() != degree)
      throw Error(ErrorKind::InvalidInput, "generator " + std::to_string(g) + " has wrong length");
    std::vector<unsigned char> seen(degree);
    for (Index x : p) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::InvalidInput,
                    "generator " + std::to_string(g) + " is not a permutation");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }

  std::vector<Index> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Index>> elems{id};
  std::map<std::vector<Index>, Index> index_of{{id, 0}};
  std::vector<Index> buf(degree);
  // Breadth-first closure under right multiplication by generators. For a
  // finite group the monoid generated is already the group.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& gen : generators) {
      // (elem * gen)(x) = gen(elem(x))
      kernels::gather(gen, elems[i], buf);
      if (!index_of.contains(buf)) {
        if (elems.size() >= max_order)
          throw Error(ErrorKind::OrderCapExceeded,
                      "permutation closure exceeds " + std::to_string(max_order) + " elements");
        index_of.emplace(buf, static_cast<Index>(elems.size()));
        elems.push_back(buf);
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<Index> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      kernels::gather(elems[b], elems[a], buf);
      flat[a * n + b] = index_of.at(buf);
    }
  }
  auto d = build(n, std::move(flat), false);
  d->perms = std::move(elems);
  return FiniteGroup(std::move(d));
}

Index FiniteGroup::power(Index a, long long k) const {
  if (k < 0) return power(inverse(a), -k);
  Index result = identity();
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (mul(static_cast<Index>(a), static_cast<Index>(b)) !=
          mul(static_cast<Index>(b), static_cast<Index>(a)))
        return false;
  return true;
}

std::vector<std::vector<Index>> FiniteGroup::table_rows() const {
  std::vector<std::vector<Index>> rows;
  rows.reserve(order());
  for (std::size_t a = 0; a < order(); ++a) {
    auto r = row(static_cast<Index>(a));
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(FiniteGroup parent, std::vector<Index> members, Trusted)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order()) {
  for (Index m : members_) mask_[static_cast<std::size_t>(m)] = 1;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index m : members_) {
    if (!parent_.valid_index(m))
      throw Error(ErrorKind::InvalidInput, "subgroup member " + std::to_string(m) + " out of range");
    mask_[static_cast<std::size_t>(m)] = 1;
  }
  if (!contains(parent_.identity()))
    throw Error(ErrorKind::InvalidInput, "subgroup does not contain the identity");
  for (Index a : members_) {
    if (!contains(parent_.inverse(a)))
      throw Error(ErrorKind::InvalidInput,
                  "subgroup not closed under inverse at " + std::to_string(a));
    for (Index b : members_)
      if (!contains(parent_.mul(a, b)))
        throw Error(ErrorKind::InvalidInput, "subgroup not closed under product of " +
                                                 std::to_string(a) + " and " + std::to_string(b));
  }
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all), Trusted{});
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  return Subgroup(g, {g.identity()}, Trusted{});
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!parent_.same_as(other.parent_))
    throw Error(ErrorKind::ParentMismatch, "subgroups of different groups");
  return std::all_of(members_.begin(), members_.end(), [&](Index a) { return other.contains(a); });
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Index> generators) {
  for (Index x : generators)
    if (!g.valid_index(x))
      throw Error(ErrorKind::InvalidInput, "generator " + std::to_string(x) + " out of range");
  std::vector<unsigned char> in(g.order());
  std::vector<Index> members{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = 1;
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index x : generators) {
      const Index y = g.mul(members[i], x);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(g, std::move(members), Subgroup::Trusted{});
}

std::optional<Index> normality_witness(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto hit = parallel_find_first(g.order(), [&](std::size_t x) {
    return std::any_of(h.members().begin(), h.members().end(), [&](Index m) {
      return !h.contains(g.conjugate(m, static_cast<Index>(x)));
    });
  });
  if (!hit) return std::nullopt;
  return static_cast<Index>(*hit);
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent()))
    throw Error(ErrorKind::ParentMismatch, "intersect: subgroups of different groups");
  std::vector<Index> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return Subgroup(a.parent(), std::move(out), Subgroup::Trusted{});
}

Subgroup join(const FiniteGroup& g, std::span<const Subgroup> parts) {
  std::vector<Index> gens;
  for (const auto& h : parts) {
    if (!h.parent().same_as(g)) throw Error(ErrorKind::ParentMismatch, "join: foreign subgroup");
    gens.insert(gens.end(), h.members().begin(), h.members().end());
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_closure(g, gens);
}

bool generates(const FiniteGroup& g, std::span<const Subgroup> parts) {
  return join(g, parts).order() == g.order();
}

// ---------------------------------------------------------------------------
// Homomorphisms and quotients

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Index> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order())
    throw Error(ErrorKind::InvalidInput, "homomorphism map has wrong length");
  for (Index x : map_)
    if (!target_.valid_index(x)) throw Error(ErrorKind::InvalidInput, "homomorphism image out of range");
  const std::size_t n = source_.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Index ab = source_.mul(static_cast<Index>(a), static_cast<Index>(b));
      if (map_[static_cast<std::size_t>(ab)] != target_.mul(map_[a], map_[b]))
        throw Error(ErrorKind::InvalidInput, "map is not a homomorphism at pair (" +
                                                 std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
}

Subgroup GroupHom::kernel() const {
  std::vector<Index> k;
  for (std::size_t a = 0; a < map_.size(); ++a)
    if (map_[a] == target_.identity()) k.push_back(static_cast<Index>(a));
  return Subgroup(source_, std::move(k));
}

Subgroup GroupHom::image(const Subgroup& h) const {
  if (!h.parent().same_as(source_)) throw Error(ErrorKind::ParentMismatch, "image: foreign subgroup");
  std::vector<Index> img;
  for (Index a : h.members()) img.push_back(map_[static_cast<std::size_t>(a)]);
  return Subgroup(target_, std::move(img));
}

bool GroupHom::is_injective() const { return kernel().order() == 1; }

bool GroupHom::is_surjective() const {
  std::vector<unsigned char> hit(target_.order());
  for (Index x : map_) hit[static_cast<std::size_t>(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](unsigned char c) { return c != 0; });
}

EmbeddedGroup as_group(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const std::size_t n = h.order();
  std::vector<Index> local(g.order(), -1);
  for (std::size_t k = 0; k < n; ++k) local[static_cast<std::size_t>(h.members()[k])] = static_cast<Index>(k);
  std::vector<Index> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      flat[a * n + b] = local[static_cast<std::size_t>(g.mul(h.members()[a], h.members()[b]))];
  return {FiniteGroup::from_trusted_table(n, std::move(flat)), h.members()};
}

Quotient quotient(const Subgroup& n) {
  const FiniteGroup& g = n.parent();
  if (auto w = normality_witness(n))
    throw Error(ErrorKind::NotNormal, "conjugation by element " + std::to_string(*w) +
                                          " does not preserve the subgroup");
  std::vector<Index> coset_of(g.order(), -1);
  std::vector<Index> reps;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (coset_of[a] != -1) continue;
    const auto c = static_cast<Index>(reps.size());
    reps.push_back(static_cast<Index>(a));
    for (Index m : n.members()) coset_of[static_cast<std::size_t>(g.mul(static_cast<Index>(a), m))] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Index> flat(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      flat[a * q + b] = coset_of[static_cast<std::size_t>(g.mul(reps[a], reps[b]))];
  FiniteGroup qg = FiniteGroup::from_trusted_table(q, std::move(flat));
  GroupHom proj(g, qg, coset_of);
  return {std::move(qg), std::move(proj), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Actions

FiniteAction::FiniteAction(FiniteGroup group, std::size_t points,
                           const std::vector<std::vector<Index>>& act, Side side)
    : group_(std::move(group)), points_(points), side_(side) {
  const std::size_t n = group_.order();
  if (points_ == 0) throw Error(ErrorKind::InvalidInput, "action needs at least one point");
  if (act.size() != n) throw Error(ErrorKind::InvalidInput, "action needs one row per group element");
  right_.resize(n * points_);
  for (std::size_t g = 0; g < n; ++g) {
    // Left actions are stored as the right action p.g := g^-1 . p
    const auto& r = side_ == Side::Right ? act[g] : act[static_cast<std::size_t>(group_.inverse(static_cast<Index>(g)))];
    if (r.size() != points_) throw Error(ErrorKind::InvalidInput, "action row has wrong length");
    std::vector<unsigned char> seen(points_);
    for (std::size_t p = 0; p < points_; ++p) {
      const Index x = r[p];
      if (x < 0 || static_cast<std::size_t>(x) >= points_ || seen[static_cast<std::size_t>(x)])
        throw Error(ErrorKind::NotAnAction,
                    "element " + std::to_string(g) + " does not act by a permutation");
      seen[static_cast<std::size_t>(x)] = 1;
      right_[g * points_ + p] = x;
    }
  }
  if (!kernels::is_identity(permutation(group_.identity())))
    throw Error(ErrorKind::NotAnAction, "identity element does not act trivially");
  std::vector<Index> buf(points_);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // (p.a).b == p.(ab)
      kernels::gather(permutation(static_cast<Index>(b)), permutation(static_cast<Index>(a)), buf);
      const Index ab = group_.mul(static_cast<Index>(a), static_cast<Index>(b));
      if (!kernels::equal(buf, permutation(ab))) {
        // Report in the caller's convention.
        const bool left = side_ == Side::Left;
        throw Error(ErrorKind::NotAnAction,
                    "composition law fails for pair (" + std::to_string(left ? b : a) + "," +
                        std::to_string(left ? a : b) + ")");
      }
    }
  }
}

FiniteAction FiniteAction::right_translation(const Subgroup& h) {
  auto eg = as_group(h);
  const FiniteGroup& g = h.parent();
  std::vector<std::vector<Index>> act(h.order(), std::vector<Index>(g.order()));
  for (std::size_t k = 0; k < h.order(); ++k)
    for (std::size_t p = 0; p < g.order(); ++p) act[k][p] = g.mul(static_cast<Index>(p), eg.embedding[k]);
  return FiniteAction(eg.group, g.order(), act, Side::Right);
}

FiniteAction FiniteAction::right_regular(const FiniteGroup& g) {
  return right_translation(Subgroup::whole(g));
}

ActionReport action_check(const FiniteAction& a) {
  const FiniteGroup& g = a.group();
  const std::size_t n = a.points();

  std::vector<Index> ker;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (kernels::is_identity(a.permutation(static_cast<Index>(x)))) ker.push_back(static_cast<Index>(x));

  std::optional<std::pair<Index, Index>> fixed;
  for (std::size_t p = 0; p < n && !fixed; ++p)
    for (std::size_t x = 0; x < g.order() && !fixed; ++x)
      if (static_cast<Index>(x) != g.identity() && a.apply(static_cast<Index>(p), static_cast<Index>(x)) == static_cast<Index>(p))
        fixed = std::pair{static_cast<Index>(p), static_cast<Index>(x)};

  // union-find over generators = all elements
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t p = 0; p < n; ++p) {
      Index r1 = find(static_cast<Index>(p));
      Index r2 = find(a.apply(static_cast<Index>(p), static_cast<Index>(x)));
      if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
    }
  }
  std::vector<Index> orbit_of(n, -1);
  std::vector<std::vector<Index>> orbits;
  std::vector<Index> id_of_root(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    const auto r = static_cast<std::size_t>(find(static_cast<Index>(p)));
    if (id_of_root[r] == -1) {
      id_of_root[r] = static_cast<Index>(orbits.size());
      orbits.emplace_back();
    }
    orbit_of[p] = id_of_root[r];
    orbits[static_cast<std::size_t>(id_of_root[r])].push_back(static_cast<Index>(p));
  }
  return ActionReport{!fixed.has_value(), Subgroup(g, std::move(ker)), std::move(orbit_of),
                      std::move(orbits), fixed};
}

GroupFingerprint fingerprint(const FiniteGroup& g) {
  GroupFingerprint f{g.order(), g.is_abelian(), std::vector<std::size_t>(g.order() + 1)};
  for (std::size_t a = 0; a < g.order(); ++a) ++f.order_histogram[g.element_order(static_cast<Index>(a))];
  return f;
}

// ---------------------------------------------------------------------------

namespace catalog {

FiniteGroup trivial() { return FiniteGroup::from_trusted_table(1, {0}); }

FiniteGroup cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic group of order 0");
  std::vector<Index> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Index>((a + b) % n);
  return FiniteGroup::from_trusted_table(n, std::move(flat));
}

FiniteGroup dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "dihedral group needs n >= 1");
  // r^a s^x with s r = r^-1 s; element (x, a) stored as x*n + a meaning s^x r^a.
  const std::size_t m = 2 * n;
  std::vector<Index> flat(m * m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const std::size_t x1 = u / n, a1 = u % n, x2 = v / n, a2 = v % n;
      // s^x1 r^a1 s^x2 r^a2 = s^(x1+x2) r^((-1)^x2 a1 + a2)
      const std::size_t a = ((x2 ? (n - a1) % n : a1) + a2) % n;
      flat[u * m + v] = static_cast<Index>(((x1 + x2) % 2) * n + a);
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(flat));
}

FiniteGroup quaternion() {
  // Index 2u + s is the unit u in {1,i,j,k} with sign (-1)^s.
  // Unit products: table[u][v] = (sign, unit).
  static constexpr int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Index> flat(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
      const int s = (sa + sb + unit_sign[ua][ub]) % 2;
      flat[static_cast<std::size_t>(a * 8 + b)] = 2 * unit_prod[ua][ub] + s;
    }
  }
  return FiniteGroup::from_trusted_table(8, std::move(flat));
}

FiniteGroup symmetric(std::size_t n) {
  if (n == 0) return trivial();
  std::vector<std::vector<Index>> gens;
  if (n >= 2) {
    std::vector<Index> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Index>((i + 1) % n);
    gens = {swap, cycle};
  }
  return FiniteGroup::from_permutations(gens, n);
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Index> flat(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      flat[u * n + v] = static_cast<Index>(
          static_cast<std::size_t>(g.mul(static_cast<Index>(u / nh), static_cast<Index>(v / nh))) * nh +
          static_cast<std::size_t>(h.mul(static_cast<Index>(u % nh), static_cast<Index>(v % nh))));
  return FiniteGroup::from_trusted_table(n, std::move(flat));
}

}  // namespace catalog

}  // namespace npb
