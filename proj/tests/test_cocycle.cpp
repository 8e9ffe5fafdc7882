#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npb/cocycle.hpp"

using namespace npb;

namespace {

const Field F3 = Field::prime(3);
const Field QQ = Field::rationals();

GradedSignature d111() { return GradedSignature::multi_ordered(2, {1, 1, 1}); }

const AutGroup& aut3() {
  static const AutGroup a = enumerate_aut(d111(), F3);
  return a;
}

// (y, y', z) -> (2y, y', yy' + z)
PolyMap example_map(Field f = F3) {
  const auto sig = d111();
  const Polynomial y = Polynomial::variable(f, 3, 0), y2 = Polynomial::variable(f, 3, 1),
                   z = Polynomial::variable(f, 3, 2);
  return PolyMap(sig, sig, f, {y.scaled(Scalar(f, 2)), y2, y * y2 + z});
}

bool kind_is(ErrorKind k, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_CASE("nerves") {
  CoverNerve n(3, {{1, 0}, {1, 2}}, {});
  CHECK(n.overlaps(0, 1));
  CHECK_FALSE(n.overlaps(0, 2));
  CHECK(n.overlaps(2, 2));
  CHECK(kind_is(ErrorKind::InvalidInput, [] { CoverNerve bad(3, {{0, 1}, {1, 2}}, {{0, 1, 2}}); }));
  CHECK(CoverNerve::full(4).triples().size() == 4);
}

TEST_CASE("check_cocycle") {
  auto z3 = catalog::cyclic(3);
  const Index a = 1, a2 = z3.mul(1, 1);
  auto nerve = CoverNerve::full(3);
  CHECK(check_cocycle(group_cocycle(nerve, z3, {}), z3).valid);
  CHECK(check_cocycle(group_cocycle(CoverNerve::full(2), z3, {{{0, 1}, a}}), z3).valid);

  auto good = group_cocycle(nerve, z3, {{{0, 1}, a}, {{1, 2}, a}, {{0, 2}, a2}});
  CHECK(check_cocycle(good, z3).valid);
  auto bad = group_cocycle(nerve, z3, {{{0, 1}, a}, {{1, 2}, a}, {{0, 2}, z3.identity()}});
  auto chk = check_cocycle(bad, z3);
  CHECK_FALSE(chk.valid);
  CHECK(chk.law == "triple");
  CHECK(chk.witness == std::vector<std::size_t>{0, 1, 2});

  auto broken = good;
  broken.values[{1, 0}] = a;
  CHECK(check_cocycle(broken, z3).law == "inverse");
  broken = good;
  broken.values.erase({2, 2});
  CHECK(check_cocycle(broken, z3).law == "missing");
}

TEST_CASE("associated cocycle, finite fiber") {
  const auto& aut = aut3();
  auto space = standard_fibered_space(aut);
  auto nerve = CoverNerve::full(2);

  auto trivial = associated_cocycle(group_cocycle(nerve, aut.group, {}), space);
  for (const auto& [k, p] : trivial.fiber.values)
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(p[x] == static_cast<Index>(x));

  const Index g = aut.index_of(example_map());
  auto c = group_cocycle(nerve, aut.group, {{{0, 1}, g}});
  auto b = associated_cocycle(c, space);
  CHECK(b.fiber_check.valid);
  CHECK(b.quotient_check.valid);
  CHECK(b.quotient_prime_check.valid);
  CHECK(b.corners_commute);
  CHECK(b.core_trivial);
  // rho keeps y: y -> 2y on F_3
  CHECK(b.quotient.at(0, 1) == Perm{0, 2, 1});
  CHECK(b.quotient_prime.at(0, 1) == Perm{0, 1, 2});

  // tau = identity reproduces the direct construction
  std::vector<Index> idmap(aut.group.order());
  for (std::size_t k = 0; k < idmap.size(); ++k) idmap[k] = static_cast<Index>(k);
  GroupHom tau(aut.group, aut.group, idmap);
  auto via = associated_cocycle(c, space, &tau);
  CHECK(via.fiber.values == b.fiber.values);

  // an action that does not descend
  auto shuffled = space;
  shuffled.rho[0] = 99;
  shuffled.rho[1] = 99;
  CHECK(kind_is(ErrorKind::ActionIncompatibleWithFibration, [&] { (void)associated_cocycle(c, shuffled); }));

  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    auto rc = random_cocycle(CoverNerve::full(3), aut.group, rng);
    auto rb = associated_cocycle(rc, space);
    CHECK(rb.fiber_check.valid);
    CHECK(rb.quotient_check.valid);
    CHECK(rb.corners_commute);
  }
}

TEST_CASE("associated and frame cocycles, vector bundles") {
  const auto& aut = aut3();
  auto nerve = CoverNerve::full(2);
  const Index g = aut.index_of(example_map());
  auto c = group_cocycle(nerve, aut.group, {{{0, 1}, g}});
  auto v = associated_cocycle(c, aut);
  CHECK(v.total_check.valid);
  CHECK(v.total.at(0, 1) == example_map());
  REQUIRE(v.sides.size() == 2);
  const auto side = GradedSignature::multi_ordered(1, {1});
  CHECK(v.sides[0].at(0, 1) == PolyMap(side, side, F3, {Polynomial::variable(F3, 1, 0).scaled(Scalar(F3, 2))}));
  CHECK(v.sides[1].at(0, 1) == PolyMap::identity(side, F3));

  auto frame = frame_cocycle(v.total, aut);
  CHECK(frame.values == c.values);
  CHECK(associated_cocycle(frame, aut).total.values == v.total.values);

  auto trivial = associated_cocycle(group_cocycle(nerve, aut.group, {}), aut);
  auto tf = frame_cocycle(trivial.total, aut);
  for (const auto& [k, x] : tf.values) CHECK(x == aut.group.identity());

  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    auto rc = random_cocycle(CoverNerve::full(3), aut.group, rng);
    auto rv = associated_cocycle(rc, aut);
    CHECK(rv.total_check.valid);
    for (const auto& s : rv.side_checks) CHECK(s.valid);
    CHECK(frame_cocycle(rv.total, aut).values == rc.values);
  }

  // symbolic mode over Q on a 3-chart nerve without triples
  std::mt19937_64 qrng(4);
  CoverNerve chain(3, {{0, 1}, {1, 2}});
  auto qc = aut_cocycle(chain, {{{0, 1}, random_automorphism(d111(), QQ, qrng)},
                                {{1, 2}, random_automorphism(d111(), QQ, qrng)}});
  auto qv = associated_cocycle(qc);
  CHECK(qv.total_check.valid);
  auto qf = frame_cocycle(qv.total);
  for (const auto& [k, x] : qf.values) CHECK(x.map == qc.values.at(k).map);

  auto broken = v.total;
  broken.values.insert_or_assign({1, 0}, PolyMap::identity(d111(), F3));
  CHECK(kind_is(ErrorKind::NotACocycle, [&] { (void)frame_cocycle(broken); }));
}

TEST_CASE("cohomology") {
  auto s3 = catalog::symmetric(3);
  auto nerve = CoverNerve::full(2);
  const Index a = 1, b = 3;
  auto c = group_cocycle(nerve, s3, {{{0, 1}, a}});
  auto self = are_cohomologous(c, c, s3);
  CHECK(self.cohomologous);
  CHECK(self.lambda == std::vector<Index>{s3.identity(), s3.identity()});

  const Index conj = s3.mul(s3.mul(b, a), s3.inverse(b));
  auto c2 = group_cocycle(nerve, s3, {{{0, 1}, conj}});
  auto r = are_cohomologous(c, c2, s3);
  CHECK(r.cohomologous);
  // verify the returned family
  CHECK(s3.mul(s3.mul(r.lambda[0], a), s3.inverse(r.lambda[1])) == conj);
  // (b, b) is a witness as well
  CHECK(s3.mul(s3.mul(b, a), s3.inverse(b)) == conj);

  auto z4 = catalog::cyclic(4);
  auto u = group_cocycle(nerve, z4, {{{0, 1}, 1}}), w = group_cocycle(nerve, z4, {{{0, 1}, 2}});
  CHECK(are_cohomologous(u, w, z4).cohomologous);

  // on a 3-chart full nerve cocycles are coboundaries, hence all cohomologous
  auto n3 = CoverNerve::full(3);
  auto z3 = catalog::cyclic(3);
  auto t1 = group_cocycle(n3, z3, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 2}});
  auto t0 = group_cocycle(n3, z3, {});
  CHECK(are_cohomologous(t1, t0, z3).cohomologous);

  // a 2-chart nerve without overlap: every cocycle is trivial
  CoverNerve apart(2, {});
  CHECK(are_cohomologous(group_cocycle(apart, z3, {}), group_cocycle(apart, z3, {}), z3).cohomologous);

  // a cycle of three pairs with no triple carries a holonomy class
  CoverNerve ring(3, {{0, 1}, {1, 2}, {0, 2}});
  auto h1 = group_cocycle(ring, z3, {{{0, 1}, 1}});
  auto h0 = group_cocycle(ring, z3, {});
  auto miss = are_cohomologous(h1, h0, z3);
  CHECK_FALSE(miss.cohomologous);
  CHECK(miss.families_examined == 3);

  CHECK(kind_is(ErrorKind::SearchCapExceeded, [&] { (void)are_cohomologous(h1, h0, z3, 20); }));

  // equivalence relation on a random corpus
  std::mt19937_64 rng(6);
  std::vector<Cocycle<Index>> corpus;
  for (int k = 0; k < 8; ++k) corpus.push_back(random_cocycle(ring, z3, rng));
  for (const auto& x : corpus)
    for (const auto& y : corpus) {
      const bool xy = are_cohomologous(x, y, z3).cohomologous;
      CHECK(xy == are_cohomologous(y, x, z3).cohomologous);
      for (const auto& z : corpus)
        if (xy && are_cohomologous(y, z, z3).cohomologous) CHECK(are_cohomologous(x, z, z3).cohomologous);
    }
}

TEST_CASE("second-order tangent law") {
  const Polynomial x = Polynomial::variable(QQ, 1, 0);
  auto id = t2_transition({x});
  CHECK(id == PolyMap::identity(t2_signature(1), QQ));

  auto t = t2_transition({x + x * x});
  const Polynomial X = Polynomial::variable(QQ, 3, 0), XD = Polynomial::variable(QQ, 3, 1),
                   XDD = Polynomial::variable(QQ, 3, 2), one = Polynomial::constant(Scalar(QQ, 1), 3);
  CHECK(t.component(0) == X + X * X);
  CHECK(t.component(1) == (one + X.scaled(Scalar(QQ, 2))) * XD);
  CHECK(t.component(2) == (one + X.scaled(Scalar(QQ, 2))) * XDD + (XD * XD).scaled(Scalar(QQ, 2)));
  CHECK(is_graded_morphism(t));
  CHECK_FALSE(is_fiber_linear(t));

  const Polynomial u = Polynomial::variable(QQ, 2, 0), v = Polynomial::variable(QQ, 2, 1);
  auto lin = t2_transition({u + v.scaled(Scalar(QQ, 3)), v.scaled(Scalar(QQ, -1))});
  CHECK(is_fiber_linear(lin));
  CHECK(is_graded_morphism(lin));

  CHECK(kind_is(ErrorKind::NotInvertibleChart, [&] { (void)t2_transition({x * x}); }));
}
