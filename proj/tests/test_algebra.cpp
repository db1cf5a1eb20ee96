#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lienil/algebra.hpp"
#include "lienil/corpus.hpp"

using namespace lienil;

namespace {
GroupTable fam(const std::string& name, std::initializer_list<long> params) {
  std::vector<long> p(params);
  return build_spec(family_spec(name, p), kDefaultElementCap);
}

AlgebraVec random_vec(std::mt19937& rng, int p, int n) {
  AlgebraVec v(p, n);
  for (auto& c : v.c) c = static_cast<std::uint8_t>(rng() % p);
  return v;
}
}  // namespace

TEST_CASE("group algebra multiplication follows the table") {
  GroupTable c2 = fam("cyclic", {2});
  AlgebraVec one = AlgebraVec::basis(2, 2, 0);
  AlgebraVec g = AlgebraVec::basis(2, 2, 1);
  AlgebraVec s = one;
  s.add(g);  // 1 + g
  CHECK(multiply(c2, s, s).is_zero());  // (1+g)^2 = 0 over F2
  CHECK(multiply(c2, g, g) == one);
}

TEST_CASE("multiplication is associative and distributive on random vectors") {
  GroupTable d8 = fam("dihedral", {8});
  std::mt19937 rng(5);
  for (int p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      AlgebraVec a = random_vec(rng, p, 8), b = random_vec(rng, p, 8),
                 c = random_vec(rng, p, 8);
      CHECK(multiply(d8, multiply(d8, a, b), c) ==
            multiply(d8, a, multiply(d8, b, c)));
      AlgebraVec bc = b;
      bc.add(c);
      AlgebraVec lhs = multiply(d8, a, bc);
      AlgebraVec rhs = multiply(d8, a, b);
      rhs.add(multiply(d8, a, c));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bracket is alternating and antisymmetric") {
  GroupTable q8 = fam("quaternion", {8});
  std::mt19937 rng(6);
  for (int p : {2, 3, 5})
    for (int trial = 0; trial < 20; ++trial) {
      AlgebraVec a = random_vec(rng, p, 8), b = random_vec(rng, p, 8);
      CHECK(lie_bracket(q8, a, a).is_zero());
      AlgebraVec s = lie_bracket(q8, a, b);
      s.add(lie_bracket(q8, b, a));
      CHECK(s.is_zero());
    }
}

TEST_CASE("row-reduced subspaces are canonical") {
  for (int p : {2, 3, 5, 7}) {
    const int n = 70;
    std::mt19937 rng(40 + p);
    std::vector<std::vector<std::uint8_t>> vecs;
    for (int i = 0; i < 8; ++i) {
      std::vector<std::uint8_t> v(n);
      for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
      vecs.push_back(v);
    }
    Subspace a(p, n), b(p, n);
    for (const auto& v : vecs) a.insert(v);
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) b.insert(*it);
    CHECK(a == b);  // insertion order cannot matter
    CHECK(a.dim() <= 8);
    for (const auto& v : vecs) CHECK(a.contains(v));

    // a scaled sum of members stays inside
    std::vector<std::uint8_t> mix(n, 0);
    for (int i = 0; i < n; ++i)
      mix[i] = static_cast<std::uint8_t>((2 * vecs[0][i] + vecs[3][i]) % p);
    CHECK(a.contains(mix));
    CHECK(a.is_subspace_of(a));
  }
}

TEST_CASE("inserting a dependent vector does not grow the dimension") {
  Subspace s(3, 4);
  CHECK(s.insert(std::vector<std::uint8_t>{1, 2, 0, 1}));
  CHECK(s.insert(std::vector<std::uint8_t>{0, 1, 1, 0}));
  // 1*first + 2*second
  CHECK_FALSE(s.insert(std::vector<std::uint8_t>{1, 1, 2, 1}));
  CHECK(s.dim() == 2);
}

TEST_CASE("augmentation ideal closure has codimension one") {
  for (auto spec : {std::pair{"dihedral", 8L}, std::pair{"quaternion", 16L}}) {
    GroupTable g = fam(spec.first, {spec.second});
    // {g-1 : g generator} generates the whole augmentation ideal of a p-group
    std::vector<AlgebraVec> span;
    for (elt gen : g.generators()) {
      AlgebraVec v = AlgebraVec::basis(2, g.order(), gen);
      v.sub(AlgebraVec::basis(2, g.order(), 0));
      span.push_back(std::move(v));
    }
    Subspace ideal = ideal_closure(g, 2, span);
    CHECK(ideal.dim() == g.order() - 1);
  }
}

TEST_CASE("commutative algebras stop at index 2") {
  GroupTable c4 = fam("cyclic", {4});
  LieChain lo = lower_lie_chain(c4, 2, 256, 10);
  LieChain up = upper_lie_chain(c4, 2, 256, 10);
  CHECK(lo.t == 2);
  CHECK(up.t == 2);
}

TEST_CASE("frozen chain indices for small groups") {
  auto both = [](const GroupTable& g, int p, long want) {
    LieChain lo = lower_lie_chain(g, p, 256, 64);
    LieChain up = upper_lie_chain(g, p, 256, 64);
    CHECK(lo.t == want);
    CHECK(up.t == want);
    for (size_t i = 0; i < lo.powers.size() && i < up.powers.size(); ++i)
      CHECK(lo.powers[i].is_subspace_of(up.powers[i]));
  };
  both(fam("dihedral", {8}), 2, 3);
  both(fam("quaternion", {16}), 2, 5);
  both(fam("modular_maximal_cyclic", {16}), 2, 3);
  both(fam("heisenberg", {3}), 3, 4);
  both(fam("heisenberg", {5}), 5, 6);
}

TEST_CASE("membership in the upper powers recovers the dimension subgroups") {
  GroupTable d16 = fam("dihedral", {16});
  LieChain up = upper_lie_chain(d16, 2, 256, 64);
  DimensionSeries direct = dimension_subgroups_direct(d16, 2, up);
  CHECK(direct.same_terms(dimension_series_product(d16, 2)));
}

TEST_CASE("dimension cap raises a range error") {
  GroupTable d32 = fam("dihedral", {32});
  CHECK_THROWS_AS(lower_lie_chain(d32, 2, 16, 64), Error);
  try {
    upper_lie_chain(d32, 2, 16, 64);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Range);
  }
}

TEST_CASE("unit group classes over F2") {
  CHECK(unit_group_class(fam("cyclic", {2}), 2, 1u << 15) == 1);
  CHECK(unit_group_class(fam("dihedral", {8}), 2, 1u << 15) == 2);
  CHECK(unit_group_class(fam("quaternion", {8}), 2, 1u << 15) == 2);
}

TEST_CASE("unit enumeration guards") {
  GroupTable h3 = fam("heisenberg", {3});
  CHECK_THROWS_AS(unit_group_class(h3, 3, 1u << 15), Error);
  GroupTable d16 = fam("dihedral", {16});
  try {
    unit_group_class(d16, 2, 16);  // 2^15 units needed
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cap);
  }
}
