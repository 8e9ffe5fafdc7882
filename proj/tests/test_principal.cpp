#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "npb/principal.hpp"
#include "test_support.hpp"

using namespace npb;

namespace {

const NTupleNode* find_node(const NTupleWitness& w, const std::vector<int>& path) {
  for (const auto& n : w.trace)
    if (n.path == path) return &n;
  return nullptr;
}

std::vector<std::vector<Index>> sorted_perms(const FiniteGroup& g) {
  auto p = g.permutations();
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_CASE("verify_double examples") {
  auto q = catalog::quaternion();
  SUBCASE("Q8 <i>,<j>") {
    auto v = verify_double(subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j}));
    REQUIRE(v.ok());
    CHECK(v.dpg->core.members() == std::vector<Index>{q8::one, q8::minus_one});
    CHECK(v.dpg->q1.order() == 2);
    CHECK(v.dpg->q2.order() == 2);
  }
  SUBCASE("Z6 <3>,<2> is valid and vacant") {
    auto z6 = catalog::cyclic(6);
    auto v = verify_double(subgroup_closure(z6, {3}), subgroup_closure(z6, {2}));
    REQUIRE(v.ok());
    CHECK(v.dpg->core.order() == 1);
    CHECK(vacancy(*v.dpg).vacant);
  }
  SUBCASE("Z4 <2>,<2> does not generate") {
    auto z4 = catalog::cyclic(4);
    auto v = verify_double(subgroup_closure(z4, {2}), subgroup_closure(z4, {2}));
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->kind == ErrorKind::NotGenerating);
    CHECK(v.violation->witness == 1);
    CHECK_THROWS_AS(make_double(subgroup_closure(z4, {2}), subgroup_closure(z4, {2})), Error);
  }
  SUBCASE("non-normal subgroup names the conjugator") {
    auto s3 = catalog::symmetric(3);
    auto v = verify_double(subgroup_closure(s3, {1}), Subgroup::whole(s3));
    REQUIRE_FALSE(v.ok());
    CHECK(v.violation->kind == ErrorKind::NotNormal);
    CHECK(v.violation->subgroup == 1);
    // least conjugator moving the transposition's subgroup
    auto h = subgroup_closure(s3, {1});
    Index least = -1;
    for (Index a = 0; a < 6 && least < 0; ++a)
      for (Index x : h.members())
        if (!h.contains(s3.conjugate(x, a))) {
          least = a;
          break;
        }
    CHECK(v.violation->witness == least);
  }
}

TEST_CASE("verify_ntuple examples") {
  auto q = catalog::quaternion();
  SUBCASE("Q8 triple fails at (<i>; {+-1}, {+-1})") {
    auto w = verify_ntuple(q, {subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j}), subgroup_closure(q, {q8::k})});
    CHECK_FALSE(w.verdict);
    REQUIRE(w.trace.size() == 4);
    CHECK(w.trace[0].ok == false);
    CHECK_FALSE(w.trace[0].violation.has_value());
    const auto* node = find_node(w, {1});
    REQUIRE(node);
    CHECK(node->ambient.members() == std::vector<Index>{0, 1, 2, 3});
    REQUIRE(node->subgroups.size() == 2);
    CHECK(node->subgroups[0].members() == std::vector<Index>{q8::one, q8::minus_one});
    CHECK(node->subgroups[1].members() == std::vector<Index>{q8::one, q8::minus_one});
    REQUIRE(node->violation);
    CHECK(node->violation->kind == ErrorKind::NotGenerating);
    CHECK(node->violation->witness == q8::i);
    CHECK(node->label == "(G1; G2nG1, G3nG1)");
  }
  SUBCASE("(Gamma, [Gamma]) holds") {
    auto w = verify_ntuple(q, {Subgroup::whole(q)});
    CHECK(w.verdict);
    CHECK(w.pairwise_double);
  }
  SUBCASE("n = 1 with a proper subgroup fails") {
    auto w = verify_ntuple(q, {subgroup_closure(q, {q8::i})});
    CHECK_FALSE(w.verdict);
  }
  SUBCASE("n = 2 agrees with verify_double across the corpus") {
    for (const auto& c : corpus::double_principal_groups()) {
      const auto& gamma = c.g1.parent();
      CHECK(verify_ntuple(gamma, {c.g1, c.g2}).verdict == verify_double(c.g1, c.g2).ok());
      CHECK(verify_ntuple(gamma, {c.g1, c.g1}).verdict == verify_double(c.g1, c.g1).ok());
    }
  }
  SUBCASE("a valid triple") {
    // Z2^3 with the three coordinate-plane subgroups: each pairwise
    // intersection is a line, and two lines generate the plane.
    auto z2 = catalog::cyclic(2);
    auto g = catalog::direct_product(catalog::direct_product(z2, z2), z2);
    // element (a,b,c) = 4a + 2b + c
    auto plane_ab = Subgroup(g, {0, 2, 4, 6});
    auto plane_ac = Subgroup(g, {0, 1, 4, 5});
    auto plane_bc = Subgroup(g, {0, 1, 2, 3});
    auto w = verify_ntuple(g, {plane_ab, plane_ac, plane_bc});
    CHECK(w.verdict);
    CHECK(w.pairwise_double);
  }
  SUBCASE("mismatched parent") {
    CHECK_THROWS_AS(verify_ntuple(q, {Subgroup::whole(catalog::cyclic(8))}), Error);
    CHECK_THROWS_AS(verify_ntuple(q, {}), Error);
  }
}

TEST_CASE("vacancy examples") {
  auto z6 = catalog::cyclic(6);
  auto v = vacancy(make_double(subgroup_closure(z6, {3}), subgroup_closure(z6, {2})));
  CHECK(v.vacant);
  CHECK(v.product_bijective);

  auto q = catalog::quaternion();
  auto vq = vacancy(make_double(subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j})));
  CHECK_FALSE(vq.vacant);
  CHECK_FALSE(vq.product_bijective);
  CHECK(vq.min_fiber == 2);
  CHECK(vq.max_fiber == 2);

  auto whole = vacancy(make_double(Subgroup::whole(q), Subgroup::trivial(q)));
  CHECK(whole.vacant);
}

TEST_CASE("dressing examples") {
  auto q = catalog::quaternion();
  auto dpg = make_double(subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j}));
  auto d = dressing(dpg);
  // g = i is member 2 of <i> = {1,-1,i,-i}; g' = j is member 2 of <j> = {1,-1,j,-j}
  CHECK(d.g_on_gprime[2 * 4 + 2] == q8::minus_i);
  CHECK(q.mul(q.mul(q8::minus_j, q8::i), q8::j) == q8::minus_i);
  CHECK(d.laws.size() == 9);

  auto z6 = catalog::cyclic(6);
  auto vac = make_double(subgroup_closure(z6, {3}), subgroup_closure(z6, {2}));
  auto dz = dressing(vac);
  for (std::size_t a = 0; a < vac.g1.order(); ++a)
    for (std::size_t b = 0; b < vac.g2.order(); ++b) CHECK(dz.g_on_gprime[a * vac.g2.order() + b] == vac.g1.members()[a]);
}

TEST_CASE("semidirect examples") {
  auto z2 = catalog::cyclic(2);
  auto z3 = catalog::cyclic(3);
  SUBCASE("trivial action is the direct product") {
    auto sd = semidirect(z2, z3, [](Index g, Index) { return g; });
    CHECK(sd.group.order() == 6);
    CHECK(sd.group.is_abelian());
    CHECK(fingerprint(sd.group) == fingerprint(catalog::direct_product(z2, z3)));
  }
  SUBCASE("Z2 acting on Z3 by inversion gives S3") {
    auto sd = semidirect(z2, z3, [&](Index g, Index h) { return h == 0 ? g : z3.inverse(g); });
    CHECK(sd.group.order() == 6);
    CHECK_FALSE(sd.group.is_abelian());
    CHECK(fingerprint(sd.group) == fingerprint(catalog::symmetric(3)));
    CHECK(is_normal(sd.normal_g));
    CHECK_FALSE(is_normal(sd.gprime_part));
  }
  SUBCASE("dressing of Q8: <j> x| <i> has order 16") {
    auto q = catalog::quaternion();
    auto dp = dressing_product(make_double(subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j})));
    CHECK(dp.semidirect.group.order() == 16);
    CHECK(dp.multiply.is_surjective());
    CHECK(dp.multiply.kernel().order() == 2);
  }
  SUBCASE("not an action by automorphisms") {
    try {
      semidirect(z2, z3, [](Index g, Index h) { return static_cast<Index>((g + h) % 3); });
      FAIL("expected NotAnActionByAutomorphisms");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAnActionByAutomorphisms);
    }
  }
}

TEST_CASE("gamma_from_actions examples") {
  auto q = catalog::quaternion();
  SUBCASE("Q8 with right translations by <i>, <j>") {
    auto rho = FiniteAction::right_translation(subgroup_closure(q, {q8::i}));
    auto rhop = FiniteAction::right_translation(subgroup_closure(q, {q8::j}));
    auto r = gamma_from_actions(rho, rhop);
    CHECK(r.gamma.group.order() == 8);
    CHECK(r.g0.order() == 2);
    CHECK(fingerprint(r.gamma.group) == fingerprint(q));
    CHECK(action_check(r.action).is_free);
    CHECK(r.m_count == 2);
    CHECK(r.mprime_count == 2);
    CHECK(r.m0_count == 1);
    CHECK(r.as_double.has_value());
    // oracle: kernel {(g', g'^-1) : g' in {+-1}}
    for (Index x : r.g0.members()) {
      const Index h = x / 4, g = x % 4;
      CHECK(h == g);
      CHECK(h <= 1);
    }
    std::vector<std::vector<Index>> gens;
    for (Index g = 0; g < 4; ++g) {
      auto a = rho.permutation(g);
      auto b = rhop.permutation(g);
      gens.emplace_back(a.begin(), a.end());
      gens.emplace_back(b.begin(), b.end());
    }
    CHECK(permutation_image(r.action) == sorted_perms(FiniteGroup::from_permutations(gens, 8)));
  }
  SUBCASE("factorwise translations of Z2 x Z3") {
    auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
    auto p = catalog::direct_product(z2, z3);
    auto rho = FiniteAction::right_translation(corpus::product(p, Subgroup::whole(z2), Subgroup::trivial(z3)));
    auto rhop = FiniteAction::right_translation(corpus::product(p, Subgroup::trivial(z2), Subgroup::whole(z3)));
    auto r = gamma_from_actions(rho, rhop);
    CHECK(r.gamma.group.order() == 6);
    CHECK(r.gamma.group.is_abelian());
    REQUIRE(r.as_double);
    CHECK(vacancy(*r.as_double).vacant);
  }
  SUBCASE("Z4 with G = G' = <2>") {
    auto z4 = catalog::cyclic(4);
    auto t = FiniteAction::right_translation(subgroup_closure(z4, {2}));
    auto r = gamma_from_actions(t, t);
    CHECK(r.g0.order() == 2);
    CHECK(r.gamma.group.order() == 2);
    CHECK(r.m0_count == 2);
  }
  SUBCASE("non-normal translations are not compatible") {
    auto s3 = catalog::symmetric(3);
    auto rho = FiniteAction::right_translation(subgroup_closure(s3, {1}));
    auto rhop = FiniteAction::right_translation(corpus::derived(s3));
    try {
      gamma_from_actions(rho, rhop);
      FAIL("expected NotCompatible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotCompatible);
    }
    CHECK_FALSE(check_compatibility(rho, rhop).both());
  }
}

TEST_CASE("check_compatibility examples") {
  auto q = catalog::quaternion();
  auto ri = FiniteAction::right_translation(subgroup_closure(q, {q8::i}));
  auto rj = FiniteAction::right_translation(subgroup_closure(q, {q8::j}));
  CHECK(check_compatibility(ri, rj).both());
  CHECK(check_compatibility(ri, ri).both());
  auto z4 = catalog::cyclic(4);
  auto t = FiniteAction::right_translation(subgroup_closure(z4, {2}));
  FiniteAction neg(catalog::cyclic(2), 4, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  try {
    check_compatibility(t, neg);
    FAIL("expected PreconditionNotFree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionNotFree);
  }
}

TEST_CASE("dpg_morphism_check examples") {
  auto q = catalog::quaternion();
  auto ij = make_double(subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j}));
  auto ji = make_double(subgroup_closure(q, {q8::j}), subgroup_closure(q, {q8::i}));
  std::vector<Index> id(8);
  std::iota(id.begin(), id.end(), 0);
  GroupHom identity(q, q, id);
  CHECK(dpg_morphism_check(identity, ij, ij));
  CHECK_FALSE(dpg_morphism_check(identity, ij, ji));

  for (const auto& c : corpus::double_principal_groups()) {
    auto dpg = make_double(c.g1, c.g2);
    auto qt = quotient(dpg.core);
    auto target = make_double(qt.projection.image(dpg.g1), qt.projection.image(dpg.g2));
    CHECK(dpg_morphism_check(qt.projection, dpg, target));
  }
}

TEST_CASE("property: exactness, vacancy, dressing, round trip over the corpus") {
  const auto cases = corpus::double_principal_groups();
  CHECK(cases.size() >= 10);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    auto dpg = make_double(c.g1, c.g2);
    CHECK(dpg.gamma.order() <= 48);
    auto ex = exact_sequence(dpg);
    CHECK(ex.is_hom);
    CHECK(ex.kernel_is_core);
    CHECK(ex.quotient_orders_match);

    auto v = vacancy(dpg);
    CHECK(v.min_fiber == dpg.core.order());
    CHECK(v.max_fiber == dpg.core.order());

    CHECK_NOTHROW(dressing(dpg));
    auto dp = dressing_product(dpg);
    CHECK(dp.multiply.kernel().order() == dpg.core.order());
    if (v.vacant) CHECK(dp.multiply.is_injective());

    // restrict a free Gamma action to G and G', then rebuild Gamma
    auto rho = FiniteAction::right_translation(dpg.g1);
    auto rhop = FiniteAction::right_translation(dpg.g2);
    CHECK(check_compatibility(rho, rhop).both());
    auto r = gamma_from_actions(rho, rhop);
    CHECK(r.gamma.group.order() * r.g0.order() == dpg.g1.order() * dpg.g2.order());
    CHECK(action_check(r.action).kernel.order() == 1);
    CHECK(permutation_image(r.action) == permutation_image(FiniteAction::right_regular(dpg.gamma)));
  }
}
