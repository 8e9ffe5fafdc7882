#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npb/aut.hpp"

using namespace npb;

namespace {

const Field F3 = Field::prime(3);
const Field QQ = Field::rationals();

// y, y', z for d = (1,1,1)
GradedSignature d111() { return GradedSignature::multi_ordered(2, {1, 1, 1}); }

Exponents ex(std::initializer_list<int> v) {
  Exponents e;
  for (int x : v) e.push_back(static_cast<std::uint16_t>(x));
  return e;
}

std::vector<AutTerm> terms(Field f, long a, long a2, long s, long b) {
  return {{0, ex({1, 0, 0}), Scalar(f, a)},
          {1, ex({0, 1, 0}), Scalar(f, a2)},
          {2, ex({0, 0, 1}), Scalar(f, s)},
          {2, ex({1, 1, 0}), Scalar(f, b)}};
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

TEST_CASE("make_automorphism") {
  auto sig = d111();
  auto id = make_automorphism(sig, F3, terms(F3, 1, 1, 1, 0));
  CHECK(id.map == PolyMap::identity(sig, F3));

  auto a = make_automorphism(sig, F3, terms(F3, 2, 1, 1, 1));
  const Polynomial y = Polynomial::variable(F3, 3, 0), y2 = Polynomial::variable(F3, 3, 1),
                   z = Polynomial::variable(F3, 3, 2);
  CHECK(a.map.component(0) == y.scaled(Scalar(F3, 2)));
  CHECK(a.map.component(2) == y * y2 + z);
  // inverse: y -> 2y (2 = 2^-1 in F_3), z -> z - 2 y y'
  CHECK(a.inverse.component(0) == y.scaled(Scalar(F3, 2)));
  CHECK(a.inverse.component(2) == z - (y * y2).scaled(Scalar(F3, 2)));
  CHECK(compose(a.map, a.inverse) == PolyMap::identity(sig, F3));

  auto bad = terms(F3, 1, 1, 1, 0);
  bad.push_back({0, ex({0, 0, 1}), Scalar(F3, 1)});
  CHECK(kind_is(ErrorKind::IllegalMonomial, [&] { (void)make_automorphism(sig, F3, bad); }));
  CHECK(kind_is(ErrorKind::NotInvertible, [&] { (void)make_automorphism(sig, F3, terms(F3, 0, 1, 1, 1)); }));
}

TEST_CASE("statomorphisms and G^i") {
  auto sig = d111();
  auto id = make_automorphism(sig, F3, terms(F3, 1, 1, 1, 0));
  auto st = make_automorphism(sig, F3, terms(F3, 1, 1, 1, 1));
  auto sc = make_automorphism(sig, F3, terms(F3, 2, 1, 1, 0));
  auto g1 = make_automorphism(sig, F3, terms(F3, 1, 2, 1, 0));
  CHECK(is_statomorphism(id));
  CHECK(is_statomorphism(st));
  CHECK_FALSE(is_statomorphism(sc));
  CHECK(gi_membership(g1, 1));
  CHECK_FALSE(gi_membership(g1, 2));
  for (std::size_t i = 1; i <= 2; ++i) {
    CHECK(gi_membership(id, i));
    CHECK(gi_membership(st, i));
  }
}

TEST_CASE("enumeration orders") {
  auto sig = d111();
  for (std::uint32_t p : {2u, 3u, 5u}) {
    CAPTURE(p);
    auto aut = enumerate_aut(sig, Field::prime(p));
    CHECK(aut.group.order() == p * (p - 1) * (p - 1) * (p - 1));
  }
  auto k3 = GradedSignature::multi_ordered(3, {1, 1, 1, 1, 1, 1, 1});
  CHECK(kind_is(ErrorKind::EnumerationCapExceeded, [&] { (void)enumerate_aut(k3, F3); }));
  CHECK(kind_is(ErrorKind::EnumerationCapExceeded, [&] { (void)enumerate_aut(sig, F3, 80); }));
  CHECK(kind_is(ErrorKind::FieldMismatch, [&] { (void)enumerate_aut(sig, QQ); }));

  // a 2-dimensional block filters by GL_2
  auto wide = GradedSignature::multi_ordered(2, {2, 1, 0});
  CHECK(enumerate_aut(wide, Field::prime(2)).group.order() == 6);
}

TEST_CASE("verify_p54 d=(1,1,1)") {
  auto rep = verify_p54(d111(), F3);
  CHECK(rep.witness.verdict);
  CHECK(rep.aut.group.order() == 24);
  CHECK(rep.gi[0].order() == 12);
  CHECK(rep.gi[1].order() == 12);
  CHECK(rep.intersection_orders.at(3) == 6);
  CHECK(rep.statomorphisms.order() == 3);
  CHECK(rep.statomorphisms_normal);
  CHECK(rep.statomorphisms_in_core);
  CHECK(rep.linear_in_factors);
  CHECK(rep.gi_normal);

  auto r2 = verify_p54(d111(), Field::prime(2));
  CHECK(r2.witness.verdict);
  CHECK(r2.aut.group.order() == 2);
  CHECK(r2.gi[0].order() == 2);
  CHECK(r2.gi[1].order() == 2);

  // conjugation stability, checked directly on the maps
  const auto& aut = rep.aut;
  for (std::size_t a = 0; a < aut.group.order(); ++a)
    for (std::size_t b = 0; b < aut.group.order(); ++b) {
      const auto& ea = aut.elements[a];
      const auto& eb = aut.elements[b];
      const auto conj = compose(compose(eb, ea), NVectAutomorphism{eb.inverse, eb.map});
      for (std::size_t i = 1; i <= 2; ++i)
        if (gi_membership(ea, i)) CHECK(gi_membership(conj, i));
    }
}

TEST_CASE("verify_p54 k=3") {
  auto k3 = GradedSignature::multi_ordered(3, {1, 1, 1, 1, 1, 1, 1});
  auto rep = verify_p54(k3, Field::prime(2));
  CHECK(rep.aut.group.order() == 128);
  CHECK(rep.witness.verdict);
  CHECK(rep.witness.trace.size() > 1);
  CHECK(rep.gi_normal);
  CHECK(rep.statomorphisms_in_core);
}

TEST_CASE("symbolic mode over Q") {
  std::mt19937_64 rng(5);
  for (auto sig : {d111(), GradedSignature::multi_ordered(2, {2, 1, 2}),
                   GradedSignature::multi_ordered(3, {1, 1, 1, 1, 0, 1, 1})}) {
    for (int rep = 0; rep < 5; ++rep) {
      auto a = random_automorphism(sig, QQ, rng), b = random_automorphism(sig, QQ, rng);
      auto ab = compose(a, b);
      CHECK(compose(ab.map, ab.inverse) == PolyMap::identity(sig, QQ));
      CHECK_NOTHROW((void)make_automorphism(ab.map));
      for (std::size_t i = 1; i <= sig.gradings(); ++i)
        if (gi_membership(a, i)) {
          auto c = compose(compose(b, a), NVectAutomorphism{b.inverse, b.map});
          CHECK(gi_membership(c, i));
        }
    }
  }
}

TEST_CASE("affine automorphisms") {
  auto sig = d111();
  const Polynomial y = Polynomial::variable(F3, 3, 0), y2 = Polynomial::variable(F3, 3, 1),
                   z = Polynomial::variable(F3, 3, 2), one = Polynomial::constant(Scalar(F3, 1), 3);
  auto id = make_affine_automorphism(PolyMap::identity(sig, F3));
  CHECK(id.inverse == PolyMap::identity(sig, F3));

  auto shift = make_affine_automorphism(PolyMap(sig, sig, F3, {y + one, y2, z}));
  CHECK(shift.inverse.component(0) == y - one);

  // beta^{i0} = 1: z -> z + y
  auto a = make_affine_automorphism(PolyMap(sig, sig, F3, {y, y2, z + y}));
  CHECK(compose(a.map, a.inverse) == PolyMap::identity(sig, F3));
  CHECK(linear_part(a).map == PolyMap::identity(sig, F3));

  CHECK(kind_is(ErrorKind::IllegalMonomial,
                [&] { (void)make_affine_automorphism(PolyMap(sig, sig, F3, {y + z, y2, z})); }));

  std::mt19937_64 rng(9);
  for (Field f : {F3, QQ})
    for (int rep = 0; rep < 10; ++rep) {
      auto p = random_affine_automorphism(sig, f, rng), q = random_affine_automorphism(sig, f, rng);
      CHECK(linear_part_is_multiplicative(p, q));
      CHECK(compose(p.inverse, p.map) == PolyMap::identity(sig, f));
    }
}
