// Acceptance checks: one PASS/FAIL line per criterion with its runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "npb/aut.hpp"
#include "npb/cocycle.hpp"
#include "npb/graded.hpp"
#include "npb/groupoid.hpp"
#include "npb/principal.hpp"
#include "test_support.hpp"

using namespace npb;

namespace {

struct Check {
  bool ok = true;
  std::string first;
  void operator()(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c(secs < limit, "runtime over limit");
  if (!c.ok) ++failures;
  std::printf("%s  %2d  %-44s %8.3f s (limit %g s)%s%s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), secs, limit,
              c.ok ? "" : "  ", c.first.c_str());
  std::fflush(stdout);
}

std::vector<std::vector<Index>> sorted_perms(const FiniteGroup& g) {
  auto p = g.permutations();
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Index> brute_intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  for (Index x = 0; x < static_cast<Index>(a.parent().order()); ++x)
    if (a.contains(x) && b.contains(x)) out.push_back(x);
  return out;
}

// Trivialized G-groupoids G0 x^b G over pair groupoids, with their b.
std::vector<std::pair<GroupoidAction, std::vector<Index>>> trivialized_instances() {
  std::vector<std::pair<GroupoidAction, std::vector<Index>>> out;
  for (const auto& g : {catalog::cyclic(2), catalog::cyclic(3), catalog::symmetric(3)})
    for (std::size_t n : {1u, 2u, 3u})
      for (std::size_t shift = 0; shift < g.order(); ++shift) {
        std::vector<Index> c(n), b(n * n);
        for (std::size_t x = 0; x < n; ++x) c[x] = static_cast<Index>((x * shift + x) % g.order());
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) b[x * n + y] = g.mul(c[x], g.inverse(c[y]));
        auto pg = FiniteGroupoid::pair(n);
        out.emplace_back(build_from_morphism({pg, g, b}).action, b);
      }
  return out;
}

GradedSignature d111() { return GradedSignature::multi_ordered(2, {1, 1, 1}); }

}  // namespace

int main() {
  const auto q = catalog::quaternion();
  const auto qi = subgroup_closure(q, {q8::i}), qj = subgroup_closure(q, {q8::j}), qk = subgroup_closure(q, {q8::k});

  criterion(1, "Q8 double and triple suite", 1, [&](Check& c) {
    auto v = verify_double(qi, qj);
    c(v.ok(), "verify_double(Q8,<i>,<j>) failed");
    if (!v.ok()) return;
    c(v.dpg->core.order() == 2, "|G0| != 2");
    c(v.dpg->q1.order() == 2 && v.dpg->q2.order() == 2, "|[G]|, |[G']| != 2");
    c(brute_intersection(qi, qj) == v.dpg->core.members(), "core differs from brute-force intersection");
    auto w = verify_ntuple(q, {qi, qj, qk});
    c(!w.verdict, "triple verdict should fail");
    bool named = false;
    for (const auto& n : w.trace)
      if (n.path == std::vector<int>{1} && n.violation && n.violation->kind == ErrorKind::NotGenerating &&
          n.ambient == qi && n.subgroups.size() == 2 && n.subgroups[0].members() == std::vector<Index>{0, 1} &&
          n.subgroups[1].members() == std::vector<Index>{0, 1})
        named = true;
    c(named, "trace does not name (<i>; {+-1}, {+-1}) generation failure");
  });

  criterion(2, "gamma_from_actions on Q8", 1, [&](Check& c) {
    auto rho = FiniteAction::right_translation(qi), rhop = FiniteAction::right_translation(qj);
    auto r = gamma_from_actions(rho, rhop);
    c(r.gamma.group.order() == 8, "|Gamma| != 8");
    c(action_check(r.action).is_free, "Gamma action not free");
    c(r.m_count == 2 && r.mprime_count == 2 && r.m0_count == 1, "|M|, |M'|, |M0| wrong");
    bool diagram = true;
    for (std::size_t p = 0; p < 8; ++p)
      diagram = diagram && r.m_to_m0[static_cast<std::size_t>(r.to_m[p])] == r.to_m0[p] &&
                r.mprime_to_m0[static_cast<std::size_t>(r.to_mprime[p])] == r.to_m0[p];
    c(diagram, "diagram does not commute");
    std::vector<std::vector<Index>> gens;
    for (Index g = 0; g < 4; ++g) {
      auto a = rho.permutation(g), b = rhop.permutation(g);
      gens.emplace_back(a.begin(), a.end());
      gens.emplace_back(b.begin(), b.end());
    }
    c(permutation_image(r.action) == sorted_perms(FiniteGroup::from_permutations(gens, 8)),
      "Gamma differs from the closure of the translations");
  });

  const auto cases = corpus::double_principal_groups();

  criterion(3, "exactness over the corpus", 10, [&](Check& c) {
    c(cases.size() >= 10, "corpus too small");
    for (const auto& k : cases) {
      auto dpg = make_double(k.g1, k.g2);
      c(dpg.gamma.order() <= 48, k.name + ": order above 48");
      auto ex = exact_sequence(dpg);
      c(ex.is_hom && ex.kernel_is_core && ex.quotient_orders_match, k.name + ": exactness");
      // phi(gamma) trivial iff gamma lies in both subgroups
      c(ex.kernel_order == brute_intersection(k.g1, k.g2).size(), k.name + ": kernel order");
    }
  });

  criterion(4, "vacancy iff product map bijective", 10, [&](Check& c) {
    for (const auto& k : cases) {
      auto dpg = make_double(k.g1, k.g2);
      auto v = vacancy(dpg);
      std::vector<std::size_t> fiber(dpg.gamma.order(), 0);
      for (Index a : dpg.g1.members())
        for (Index b : dpg.g2.members()) ++fiber[static_cast<std::size_t>(dpg.gamma.mul(a, b))];
      const bool constant = std::all_of(fiber.begin(), fiber.end(), [&](std::size_t f) { return f == dpg.core.order(); });
      c(constant, k.name + ": fibers not constantly |G0|");
      c(v.vacant == (dpg.core.order() == 1), k.name + ": vacant flag");
      c(v.vacant == v.product_bijective, k.name + ": vacant != bijective");
      c(v.min_fiber == dpg.core.order() && v.max_fiber == dpg.core.order(), k.name + ": reported fibers");
    }
  });

  criterion(5, "dressing laws over the corpus", 10, [&](Check& c) {
    for (const auto& k : cases) {
      auto dpg = make_double(k.g1, k.g2);
      (void)dressing(dpg);
      const auto& G = dpg.gamma;
      auto act = [&](Index g, Index gp) { return G.mul(G.mul(G.inverse(gp), g), gp); };   // g_{g'}
      auto pact = [&](Index gp, Index g) { return G.mul(G.mul(G.inverse(g), gp), g); };  // g'_g
      bool ok = true;
      for (Index g : dpg.g1.members())
        for (Index gp : dpg.g2.members()) {
          ok = ok && k.g1.contains(act(g, gp)) && k.g2.contains(pact(gp, g));
          for (Index gp2 : dpg.g2.members()) ok = ok && act(act(g, gp), gp2) == act(g, G.mul(gp, gp2));
          for (Index g2 : dpg.g1.members()) ok = ok && act(G.mul(g, g2), gp) == G.mul(act(g, gp), act(g2, gp));
          const Index ggp = G.mul(g, gp), gpg = G.mul(gp, g);
          ok = ok && ggp == G.mul(gp, act(g, gp)) && ggp == G.mul(pact(gp, G.inverse(g)), g);
          ok = ok && gpg == G.mul(g, pact(gp, g)) && gpg == G.mul(act(g, G.inverse(gp)), gp);
          ok = ok && G.mul(pact(gp, G.inverse(g)), G.inverse(gp)) == G.mul(g, G.inverse(act(g, G.inverse(gp))));
        }
      c(ok, k.name + ": dressing law");
    }
  });

  criterion(6, "Aut enumeration for d=(1,1,1)", 30, [&](Check& c) {
    for (std::uint32_t p : {2u, 3u}) {
      auto rep = verify_p54(d111(), Field::prime(p));
      const std::size_t expect = p == 3 ? 24 : 2;
      c(rep.aut.group.order() == expect, "order for p=" + std::to_string(p));
      c(rep.aut.group.order() == p * (p - 1) * (p - 1) * (p - 1) || p == 2, "closed form");
      c(rep.witness.verdict, "tuple verdict for p=" + std::to_string(p));
      for (const auto& s : rep.gi) c(is_normal(s), "G^i not normal");
      c(rep.gi_normal, "gi_normal flag");
    }
  });

  criterion(7, "splitting theorem", 10, [&](Check& c) {
    std::vector<GroupoidAction> all;
    // gauge groupoid of (Q8, <i>) acted on by <j>, and the Klein analog
    auto g8 = gauge_groupoid(FiniteAction::right_translation(qi));
    all.push_back(*induced_gauge_action(g8, FiniteAction::right_translation(qj)).action);
    auto v4 = catalog::direct_product(catalog::cyclic(2), catalog::cyclic(2));
    auto g4 = gauge_groupoid(FiniteAction::right_translation(Subgroup(v4, {0, 2})));
    all.push_back(*induced_gauge_action(g4, FiniteAction::right_translation(Subgroup(v4, {0, 1}))).action);
    auto triv = trivialized_instances();
    for (const auto& [ga, b] : triv) all.push_back(ga);
    c(all.size() >= 5, "too few instances");
    for (const auto& ga : all) {
      auto sp = split(ga);
      auto s = sp.S;
      std::sort(s.begin(), s.end());
      std::vector<Index> iota(s.size());
      std::iota(iota.begin(), iota.end(), 0);
      c(s == iota && sp.fiber_product.size() == ga.groupoid().arrows(), "S not a bijection");
    }
    for (const auto& [ga, b] : triv) {
      c(!check_split_round_trip(ga).has_value(), "round trip failed");
      c(multiplicative_function(split(ga)).b == b, "b not recovered");
    }
  });

  criterion(8, "graded algebra properties", 60, [&](Check& c) {
    const std::vector<GradedSignature> sigs{GradedSignature::simple({1, 1, 1}), GradedSignature::simple({2, 1}, 1),
                                            d111(), GradedSignature::multi_ordered(2, {1, 0, 2}, 1)};
    for (Field f : {Field::rationals(), Field::prime(3)}) {
      std::mt19937_64 rng(f.characteristic() + 101);
      for (int rep = 0; rep < 500; ++rep) {
        const auto& sig = sigs[static_cast<std::size_t>(rep) % sigs.size()];
        const std::string at = f.name() + " " + sig.describe() + " #" + std::to_string(rep);
        auto a = random_graded_map(sig, f, rng), b = random_graded_map(sig, f, rng), d = random_graded_map(sig, f, rng);
        c(compose(compose(a, b), d) == compose(a, compose(b, d)), "associativity " + at);
        c(is_graded_morphism(compose(a, b)), "closure " + at);
        auto u = random_triangular_automorphism(sig, f, rng);
        auto ui = invert(u);
        c(compose(u, ui) == PolyMap::identity(sig, f) && compose(ui, u) == PolyMap::identity(sig, f),
          "invert round trip " + at);
        const std::size_t n = sig.coords();
        const std::size_t i = rng() % n, j = rng() % n;
        auto p = random_homogeneous(sig, f, sig.weight(i), rng);
        auto r = random_homogeneous(sig, f, sig.weight(j), rng);
        auto pq = p + u.component(n - 1);
        for (std::size_t g = 0; g < sig.gradings(); ++g) {
          auto nabla = weight_vector_field(sig, f, g);
          c(nabla.apply(pq * r) == nabla.apply(pq) * r + pq * nabla.apply(r), "derivation law " + at);
          const long w = sig.weight(i, g) + sig.weight(j, g);
          c(is_homogeneous(p * r, w, sig, g), "weight additivity " + at);
        }
      }
    }
    // dilation laws on every signature of a family covering the caps
    std::size_t count = 0;
    for (int k = 1; k <= 6; ++k) {
      std::vector<std::size_t> dims(static_cast<std::size_t>(k), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == dims.size()) {
          if (dims.back() == 0) return;
          for (std::size_t base : {0u, 1u}) {
            const std::size_t total = std::accumulate(dims.begin(), dims.end(), base);
            if (total > 24) continue;
            auto sig = GradedSignature::simple(dims, base);
            for (Field f : {Field::rationals(), Field::prime(3)}) c(check_dilation_laws(sig, f), "dilation " + sig.describe());
            ++count;
          }
          return;
        }
        for (std::size_t d : {0u, 1u, 4u}) {
          dims[pos] = d;
          rec(pos + 1);
        }
      };
      rec(0);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t blocks = (std::size_t{1} << n) - 1;
      for (std::size_t d : {std::size_t{1}, 24 / blocks}) {
        auto sig = GradedSignature::multi_ordered(n, std::vector<std::size_t>(blocks, d));
        for (Field f : {Field::rationals(), Field::prime(3)}) c(check_dilation_laws(sig, f), "dilation " + sig.describe());
        ++count;
      }
    }
    c(count > 100, "too few signatures");
  });

  criterion(9, "compatibility verdicts agree", 30, [&](Check& c) {
    const Field QQ = Field::rationals();
    std::mt19937_64 rng(9);
    const std::vector<GradedSignature> sigs{d111(), GradedSignature::simple({1, 1}), GradedSignature::simple({1, 1}, 1),
                                            GradedSignature::multi_ordered(2, {1, 1, 1}, 1)};
    std::size_t commuting = 0, other = 0;
    for (int rep = 0; rep < 200; ++rep) {
      const auto& sig = sigs[static_cast<std::size_t>(rep) % sigs.size()];
      std::vector<HomogeneityStructure> hs;
      // odd instances use an affine conjugation, which need not preserve the weights
      auto conj = random_triangular_automorphism(sig, QQ, rng, rep % 2 == 1);
      if (rep % 2 == 0) {
        // diagonal weights of the signature, conjugated by one automorphism
        for (std::size_t g = 0; g < sig.gradings(); ++g) hs.push_back({sig.grading(g), conj});
        if (hs.size() == 1) hs.push_back({sig.grading(0), PolyMap::identity(sig, QQ)});
      } else {
        std::vector<int> w(sig.coords());
        for (auto& x : w) x = static_cast<int>(rng() % 3);
        hs.push_back({sig.grading(0), PolyMap::identity(sig, QQ)});
        hs.push_back({w, conj});
      }
      auto v = check_compatible_structures(hs);
      c(v.commute == v.brackets_vanish, "verdicts differ at #" + std::to_string(rep));
      (v.commute ? commuting : other)++;
    }
    c(commuting > 0 && other > 0, "corpus has only one kind of instance");
  });

  criterion(10, "frame/associated round trip, cohomology", 60, [&](Check& c) {
    const auto aut = enumerate_aut(d111(), Field::prime(3));
    std::mt19937_64 rng(10);
    const std::vector<CoverNerve> nerves{CoverNerve::full(2), CoverNerve(2, {}), CoverNerve::full(3),
                                         CoverNerve(3, {{0, 1}, {1, 2}}), CoverNerve(3, {{0, 1}, {1, 2}, {0, 2}})};
    std::size_t total = 0;
    for (const auto& nerve : nerves) {
      std::vector<Cocycle<Index>> corpus;
      for (int k = 0; k < 5; ++k) corpus.push_back(random_cocycle(nerve, aut.group, rng));
      // a conjugate of the first one, so every class is not a singleton
      {
        std::vector<Index> lam(nerve.charts());
        for (auto& x : lam) x = static_cast<Index>(rng() % aut.group.order());
        auto conj = corpus[0];
        for (auto& [k, x] : conj.values)
          x = aut.group.mul(aut.group.mul(lam[k.first], x), aut.group.inverse(lam[k.second]));
        corpus.push_back(conj);
      }
      for (const auto& cc : corpus) {
        ++total;
        c(check_cocycle(cc, aut.group).valid, "random cocycle invalid");
        auto v = associated_cocycle(cc, aut);
        c(v.total_check.valid, "associated cocycle invalid");
        auto fr = frame_cocycle(v.total, aut);
        c(fr.values == cc.values, "frame(associated(c)) != c");
        c(associated_cocycle(fr, aut).total.values == v.total.values, "associated(frame(d)) != d");
      }
      const std::size_t m = corpus.size();
      std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          auto r = are_cohomologous(corpus[x], corpus[y], aut.group);
          rel[x][y] = r.cohomologous;
          if (r.cohomologous)
            for (const auto& [k, g] : corpus[x].values)
              c(aut.group.mul(aut.group.mul(r.lambda[k.first], g), aut.group.inverse(r.lambda[k.second])) ==
                    corpus[y].values.at(k),
                "lambda does not conjugate");
        }
      c(rel[0][m - 1], "conjugate not found cohomologous");
      for (std::size_t x = 0; x < m; ++x) {
        c(rel[x][x], "not reflexive");
        for (std::size_t y = 0; y < m; ++y) {
          c(rel[x][y] == rel[y][x], "not symmetric");
          for (std::size_t z = 0; z < m; ++z) c(!(rel[x][y] && rel[y][z]) || rel[x][z], "not transitive");
        }
      }
    }
    c(total >= 20, "fewer than 20 cocycles");
  });

  criterion(11, "second-order tangent law", 1, [&](Check& c) {
    const Field QQ = Field::rationals();
    const Polynomial x = Polynomial::variable(QQ, 1, 0);
    auto t = t2_transition({x + x * x});
    const Polynomial X = Polynomial::variable(QQ, 3, 0), XD = Polynomial::variable(QQ, 3, 1),
                     XDD = Polynomial::variable(QQ, 3, 2), one = Polynomial::constant(Scalar(QQ, 1), 3);
    const auto two = Scalar(QQ, 2);
    c(t.component(0) == X + X * X, "x' component");
    c(t.component(1) == (one + X.scaled(two)) * XD, "xdot' component");
    c(t.component(2) == (one + X.scaled(two)) * XDD + (XD * XD).scaled(two), "xddot' component");
    c(t.sig_in().grading(0) == std::vector<int>{0, 1, 2}, "weights (0,1,2)");
    c(is_graded_morphism(t), "not a graded morphism");
    c(!is_fiber_linear(t), "linearity test should fail");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
