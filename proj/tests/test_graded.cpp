#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npb/graded.hpp"

using namespace npb;

namespace {

const Field QQ = Field::rationals();

Polynomial var(const GradedSignature& s, std::size_t i, Field f = QQ) { return Polynomial::variable(f, s.coords(), i); }

bool kind_is(ErrorKind k, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == k;
  }
  return false;
}

}  // namespace

TEST_CASE("scalars") {
  const Field f3 = Field::prime(3);
  CHECK(Scalar(f3, 5) == Scalar(f3, 2));
  CHECK((Scalar(f3, 2) * Scalar(f3, 2)).is_one());
  CHECK(Scalar(f3, 2).inverse() == Scalar(f3, 2));
  const Scalar h = Scalar::fraction(QQ, "6", "-4");
  CHECK(h.numerator() == "-3");
  CHECK(h.denominator() == "2");
  CHECK(kind_is(ErrorKind::FieldMismatch, [&] { (void)(Scalar(f3, 1) + Scalar(QQ, 1)); }));
  CHECK(kind_is(ErrorKind::InvalidInput, [] { (void)Field::prime(4); }));
  CHECK(kind_is(ErrorKind::InvalidInput, [] { (void)Field::prime(101); }));
  CHECK(Field::parse("Fp:5").characteristic() == 5);
  CHECK(Field::parse("Q").is_rational());
}

TEST_CASE("signatures") {
  auto s = GradedSignature::simple({1, 1});
  CHECK(s.coords() == 2);
  CHECK(s.weight(1, 0) == 2);
  auto m = GradedSignature::multi_ordered(2, {1, 2, 1});
  CHECK(m.coords() == 4);
  CHECK(m.weight(0) == std::vector<int>{1, 0});
  CHECK(m.weight(1) == std::vector<int>{0, 1});
  CHECK(m.weight(3) == std::vector<int>{1, 1});
  CHECK(m.blocks().size() == 3);
  auto zero_block = GradedSignature::multi_ordered(2, {1, 0, 1});
  CHECK(zero_block.blocks().size() == 2);
  CHECK(kind_is(ErrorKind::InvalidInput, [] { (void)GradedSignature::simple({0, 0}); }));
  CHECK(kind_is(ErrorKind::CapExceeded, [] { (void)GradedSignature::simple({25}); }));
  CHECK(kind_is(ErrorKind::CapExceeded, [] { (void)GradedSignature::multi_ordered(5, std::vector<std::size_t>(31, 0)); }));
  CHECK(GradedSignature::mask_order(3) == std::vector<unsigned>{1, 2, 4, 3, 5, 6, 7});
}

TEST_CASE("dilation") {
  auto s = GradedSignature::simple({1, 1});
  auto h = dilation(s, QQ, 0, 1, 2);
  const Polynomial y = Polynomial::variable(QQ, 3, 0), z = Polynomial::variable(QQ, 3, 1),
                   t = Polynomial::variable(QQ, 3, 2);
  CHECK(h[0] == t * y);
  CHECK(h[1] == t * t * z);
  CHECK(check_dilation_laws(s, QQ));
  CHECK(check_dilation_laws(GradedSignature::multi_ordered(2, {1, 1, 1}, 1), QQ));
  CHECK(check_dilation_laws(GradedSignature::simple({2, 0, 1}, 1), Field::prime(3)));

  // two multi families commute
  auto m = GradedSignature::multi_ordered(2, {1, 1, 1});
  HomogeneityStructure h1{m.grading(0), PolyMap::identity(m, QQ)}, h2{m.grading(1), PolyMap::identity(m, QQ)};
  auto v = check_compatible_structures({h1, h2});
  CHECK(v.commute);
  CHECK(v.brackets_vanish);
}

TEST_CASE("invert and compose") {
  auto s = GradedSignature::simple({1, 1});
  const Polynomial y = var(s, 0), z = var(s, 1);
  PolyMap f(s, s, QQ, {y, z + y * y});
  PolyMap g = invert(f);
  CHECK(g.component(0) == y);
  CHECK(g.component(1) == z - y * y);
  CHECK(compose(f, PolyMap::identity(s, QQ)) == f);

  PolyMap singular(s, s, QQ, {y.scaled(Scalar(QQ, 0)), z});
  CHECK(kind_is(ErrorKind::NotInvertible, [&] { (void)invert(singular); }));
  PolyMap swap(s, s, QQ, {z, y});
  CHECK(kind_is(ErrorKind::NotInvertible, [&] { (void)invert(swap); }));

  auto other = GradedSignature::simple({2});
  CHECK(kind_is(ErrorKind::SignatureMismatch, [&] { (void)compose(f, PolyMap::identity(other, QQ)); }));

  // affine maps, including the base block
  auto b = GradedSignature::simple({1}, 1);
  const Polynomial x0 = var(b, 0), x1 = var(b, 1), one = Polynomial::constant(Scalar(QQ, 1), 2);
  PolyMap aff(b, b, QQ, {x0 + one, x1.scaled(Scalar(QQ, 2)) + x0 * x0 + one});
  CHECK(compose(aff, invert(aff)) == PolyMap::identity(b, QQ));
  PolyMap curved(b, b, QQ, {x0 * x0, x1});
  CHECK(kind_is(ErrorKind::NotInvertible, [&] { (void)invert(curved); }));
}

TEST_CASE("weight components") {
  auto s = GradedSignature::simple({1, 1});
  const Polynomial y = var(s, 0), z = var(s, 1);
  CHECK(is_homogeneous(z + y * y, 2, s));
  CHECK(weight_components(Polynomial(QQ, 2), s).empty());
  CHECK(is_homogeneous(Polynomial(QQ, 2), 5, s));
  auto parts = weight_components(y + z, s);
  REQUIRE(parts.size() == 2);
  CHECK(parts.at(1) == y);
  CHECK(parts.at(2) == z);
  CHECK_FALSE(is_homogeneous(y + z, 1, s));

  // coefficient of t^w in f(h_t y) is the weight-w part
  const Polynomial f = y * y * z + y + z.pow(2) + y * z;
  const Polynomial d = dilate(f, s);
  for (const auto& [w, part] : weight_components(f, s)) {
    Polynomial coeff(QQ, 3);
    for (const auto& [e, c] : d.terms())
      if (e[2] == w) {
        Exponents x = e;
        x[2] = 0;
        coeff.add_term(x, c);
      }
    CHECK(coeff.truncated(2) == part);
  }
}

TEST_CASE("weight vector field") {
  auto s = GradedSignature::simple({1, 1});
  const Polynomial y = var(s, 0), z = var(s, 1);
  auto nabla = weight_vector_field(s, QQ);
  const Polynomial f = z + y * y;
  CHECK(nabla.apply(f) == f.scaled(Scalar(QQ, 2)));
  CHECK(nabla.apply(Polynomial::constant(Scalar(QQ, 1), 2)).is_zero());

  auto e = GradedSignature::simple({2});
  auto euler = weight_vector_field(e, QQ);
  const Polynomial y1 = var(e, 0), y2 = var(e, 1);
  CHECK(euler.apply(y1 * y2) == (y1 * y2).scaled(Scalar(QQ, 2)));
}

TEST_CASE("graded morphisms") {
  auto s = GradedSignature::simple({1, 1});
  const Polynomial y = var(s, 0), z = var(s, 1);
  CHECK(is_graded_morphism(PolyMap(s, s, QQ, {y, z + y * y})));
  auto rep = graded_morphism_report(PolyMap(s, s, QQ, {z, y}));
  CHECK_FALSE(rep.weight_preserving);
  CHECK_FALSE(rep.intertwines);
  CHECK_FALSE(rep.witness.empty());

  auto v3 = GradedSignature::simple({3}), v2 = GradedSignature::simple({2});
  std::mt19937_64 rng(7);
  std::vector<Polynomial> lin;
  for (int i = 0; i < 2; ++i) {
    Polynomial p(QQ, 3);
    for (std::size_t j = 0; j < 3; ++j) p = p + Polynomial::variable(QQ, 3, j).scaled(random_scalar(QQ, rng));
    lin.push_back(p);
  }
  CHECK(is_graded_morphism(PolyMap(v3, v2, QQ, lin)));
}

TEST_CASE("compatible structures") {
  auto s12 = GradedSignature::simple({1, 1});
  const Polynomial y = var(s12, 0), z = var(s12, 1);
  HomogeneityStructure h1{{1, 1}, PolyMap::identity(s12, QQ)};
  HomogeneityStructure h2{{1, 2}, PolyMap(s12, s12, QQ, {y, z + y * y})};
  auto v = check_compatible_structures({h1, h2});
  CHECK(v.commute == v.brackets_vanish);
  CHECK(v.commute);
  CHECK(check_compatible_structures({h1}).commute);

  // a conjugation that mixes weights breaks commutation
  HomogeneityStructure h4{{0, 1}, PolyMap::identity(s12, QQ)};
  auto w = check_compatible_structures({h4, HomogeneityStructure{{1, 2}, PolyMap(s12, s12, QQ, {y, z + y})}});
  CHECK(w.commute == w.brackets_vanish);
  CHECK_FALSE(w.commute);
  CHECK(w.pair == std::pair<int, int>{0, 1});
}

TEST_CASE("random properties") {
  for (Field f : {QQ, Field::prime(3)}) {
    std::mt19937_64 rng(f.characteristic() + 11);
    for (auto sig : {GradedSignature::simple({1, 1, 1}), GradedSignature::simple({2, 1}, 1),
                     GradedSignature::multi_ordered(2, {1, 1, 1}), GradedSignature::multi_ordered(2, {1, 0, 2}, 1)}) {
      CAPTURE(sig.describe());
      CAPTURE(f.name());
      for (int rep = 0; rep < 6; ++rep) {
        auto a = random_graded_map(sig, f, rng), b = random_graded_map(sig, f, rng), c = random_graded_map(sig, f, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(is_graded_morphism(compose(a, b)));

        auto u = random_triangular_automorphism(sig, f, rng);
        CHECK(is_graded_morphism(u));
        auto ui = invert(u);
        CHECK(is_graded_morphism(ui));
        CHECK(compose(u, ui) == PolyMap::identity(sig, f));
        CHECK(compose(ui, u) == PolyMap::identity(sig, f));
        auto aff = random_triangular_automorphism(sig, f, rng, true);
        CHECK(compose(invert(aff), aff) == PolyMap::identity(sig, f));

        const std::size_t n = sig.coords();
        auto p = random_homogeneous(sig, f, sig.weight(n - 1), rng) + random_homogeneous(sig, f, sig.weight(0), rng);
        auto q = random_homogeneous(sig, f, sig.weight(n - 1), rng) + u.component(n - 1);
        for (std::size_t g = 0; g < sig.gradings(); ++g) {
          auto nabla = weight_vector_field(sig, f, g);
          CHECK(nabla.apply(p * q) == nabla.apply(p) * q + p * nabla.apply(q));
          auto cp = weight_components(p, sig, g), cq = weight_components(q, sig, g);
          std::map<long, Polynomial> conv;
          for (const auto& [wa, pa] : cp)
            for (const auto& [wb, pb] : cq) {
              auto it = conv.try_emplace(wa + wb, f, n).first;
              it->second = it->second + pa * pb;
            }
          std::erase_if(conv, [](const auto& kv) { return kv.second.is_zero(); });
          CHECK(weight_components(p * q, sig, g) == conv);
          for (const auto& [w, part] : cp) CHECK(nabla.apply(part) == part.scaled(Scalar(f, w)));
        }
      }
    }
  }
}

TEST_CASE("random compatible structures agree") {
  std::mt19937_64 rng(3);
  auto m = GradedSignature::multi_ordered(2, {1, 1, 1});
  for (int rep = 0; rep < 8; ++rep) {
    auto conj = random_triangular_automorphism(m, QQ, rng);
    HomogeneityStructure h1{m.grading(0), conj}, h2{m.grading(1), conj};
    auto v = check_compatible_structures({h1, h2});
    CHECK(v.commute);
    CHECK(v.brackets_vanish);
  }
}
