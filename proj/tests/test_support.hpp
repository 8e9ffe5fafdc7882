#pragma once

#include <string>
#include <vector>

#include "npb/error.hpp"
#include "npb/group.hpp"

namespace q8 {
// Element indices of catalog::quaternion().
inline constexpr npb::Index one = 0, minus_one = 1, i = 2, minus_i = 3, j = 4, minus_j = 5, k = 6,
                            minus_k = 7;
}  // namespace q8

namespace corpus {

/// Commutator subgroup.
inline npb::Subgroup derived(const npb::FiniteGroup& g) {
  std::vector<npb::Index> comms;
  for (npb::Index a = 0; a < static_cast<npb::Index>(g.order()); ++a)
    for (npb::Index b = 0; b < static_cast<npb::Index>(g.order()); ++b)
      comms.push_back(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  return npb::subgroup_closure(g, comms);
}

/// A x B inside catalog::direct_product(parent of A, parent of B).
inline npb::Subgroup product(const npb::FiniteGroup& prod, const npb::Subgroup& a, const npb::Subgroup& b) {
  std::vector<npb::Index> m;
  const auto nb = static_cast<npb::Index>(b.parent().order());
  for (npb::Index x : a.members())
    for (npb::Index y : b.members()) m.push_back(x * nb + y);
  return npb::Subgroup(prod, m);
}

struct Case {
  std::string name;
  npb::Subgroup g1, g2;
};

/// Double principal groups of order <= 48.
inline std::vector<Case> double_principal_groups() {
  using namespace npb;
  std::vector<Case> out;
  auto whole = [](const FiniteGroup& g) { return Subgroup::whole(g); };
  auto triv = [](const FiniteGroup& g) { return Subgroup::trivial(g); };

  auto z6 = catalog::cyclic(6);
  out.push_back({"Z6 <3>,<2>", subgroup_closure(z6, {3}), subgroup_closure(z6, {2})});

  auto z2 = catalog::cyclic(2);
  auto v4 = catalog::direct_product(z2, z2);
  out.push_back({"Z2xZ2 factors", product(v4, whole(z2), triv(z2)), product(v4, triv(z2), whole(z2))});

  auto q = catalog::quaternion();
  out.push_back({"Q8 <i>,<j>", subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::j})});
  out.push_back({"Q8 <i>,<k>", subgroup_closure(q, {q8::i}), subgroup_closure(q, {q8::k})});

  auto d4 = catalog::dihedral(4);
  out.push_back({"D4 rotations,Klein", subgroup_closure(d4, {1}), Subgroup(d4, {0, 2, 4, 6})});

  auto s3 = catalog::symmetric(3);
  auto s3z2 = catalog::direct_product(s3, z2);
  out.push_back({"S3xZ2 S3,A3xZ2", product(s3z2, whole(s3), triv(z2)), product(s3z2, derived(s3), whole(z2))});
  out.push_back({"S3xZ2 S3,Z2", product(s3z2, whole(s3), triv(z2)), product(s3z2, triv(s3), whole(z2))});

  auto z12 = catalog::cyclic(12);
  out.push_back({"Z12 <2>,<3>", subgroup_closure(z12, {2}), subgroup_closure(z12, {3})});

  auto d6 = catalog::dihedral(6);
  out.push_back({"D6 rotations,D3", subgroup_closure(d6, {1}), subgroup_closure(d6, {2, 6})});

  auto s4 = catalog::symmetric(4);
  out.push_back({"S4 S4,A4", whole(s4), derived(s4)});

  auto z3 = catalog::cyclic(3);
  auto q8z3 = catalog::direct_product(q, z3);
  out.push_back({"Q8xZ3 Q8,<i>xZ3", product(q8z3, whole(q), triv(z3)),
                 product(q8z3, subgroup_closure(q, {q8::i}), whole(z3))});

  auto d4z2 = catalog::direct_product(d4, z2);
  out.push_back({"D4xZ2 D4,<r>xZ2", product(d4z2, whole(d4), triv(z2)),
                 product(d4z2, subgroup_closure(d4, {1}), whole(z2))});

  auto s3s3 = catalog::direct_product(s3, s3);
  out.push_back({"S3xS3 factors", product(s3s3, whole(s3), triv(s3)), product(s3s3, triv(s3), whole(s3))});

  auto s4z2 = catalog::direct_product(s4, z2);
  out.push_back({"S4xZ2 S4,A4xZ2", product(s4z2, whole(s4), triv(z2)), product(s4z2, derived(s4), whole(z2))});

  auto a4 = derived(s4);
  auto a4g = as_group(a4).group;
  out.push_back({"A4 A4,V4", whole(a4g), derived(a4g)});

  out.push_back({"Q8 Q8,{e}", whole(q), triv(q)});
  return out;
}

}  // namespace corpus
