#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lienil/corpus.hpp"
#include "lienil/dimension.hpp"

using namespace lienil;

namespace {
GroupTable fam(const std::string& name, std::initializer_list<long> params) {
  std::vector<long> p(params);
  return build_spec(family_spec(name, p), kDefaultElementCap);
}

DSequence dseq_of(const GroupTable& g, int p) {
  return d_sequence(dimension_series_product(g, p));
}
}  // namespace

TEST_CASE("gate accepts nilpotent groups with p-power commutator subgroup") {
  GroupTable d8 = fam("dihedral", {8});
  CHECK(evaluate_gate(d8, 2).ok());
  // wrong characteristic: |G'| = 2 is not a 3-power
  CHECK_FALSE(evaluate_gate(d8, 3).ok());

  GroupSpec s3 = parse_spec(R"({"name":"S3","kind":"perm","degree":3,
    "generators":[[[1,2,3]],[[1,2]]]})");
  GateResult gate = evaluate_gate(build_spec(s3), 2);
  CHECK_FALSE(gate.ok());
  CHECK(gate.reason() == "G is not nilpotent");
  CHECK_THROWS_AS(dimension_series_product(build_spec(s3), 2), Error);
}

TEST_CASE("abelian groups have the trivial series and index 2") {
  GroupTable c6 = fam("cyclic", {6});
  DimensionSeries s = dimension_series_product(c6, 2);
  CHECK(s.length() == 2);
  CHECK(s.term(2).is_trivial());
  DSequence ds = d_sequence(s);
  CHECK(ds.d.empty());
  CHECK(upper_index_jennings(ds) == 2);
}

TEST_CASE("frozen exponent sequences for small 2-groups") {
  // values frozen from independent hand computation of the series
  auto check = [](const GroupTable& g, std::map<int, int> want, long tU) {
    DSequence ds = dseq_of(g, 2);
    CHECK(ds.d == want);
    CHECK(upper_index_jennings(ds) == tU);
  };
  check(fam("dihedral", {8}), {{2, 1}}, 3);
  check(fam("quaternion", {8}), {{2, 1}}, 3);
  check(fam("dihedral", {16}), {{2, 1}, {3, 1}}, 5);
  check(fam("quaternion", {32}), {{2, 1}, {3, 1}, {5, 1}}, 9);
  check(fam("semidihedral", {64}), {{2, 1}, {3, 1}, {5, 1}, {9, 1}}, 17);
  check(fam("modular_maximal_cyclic", {32}), {{2, 1}}, 3);
  check(fam("unitriangular", {4, 2}), {{2, 2}, {3, 1}}, 6);
}

TEST_CASE("frozen exponent sequences for odd characteristic") {
  DSequence h3 = dseq_of(fam("heisenberg", {3}), 3);
  CHECK(h3.d == std::map<int, int>{{2, 1}});
  CHECK(upper_index_jennings(h3) == 4);

  DSequence w = dseq_of(fam("wreath_cyclic", {3}), 3);
  CHECK(w.n == 2);
  CHECK(w.d == std::map<int, int>{{2, 1}, {3, 1}});
  CHECK(upper_index_jennings(w) == 8);

  DSequence h25 = dseq_of(fam("heisenberg2", {5}), 5);
  CHECK(h25.n == 2);
  CHECK(h25.exp_log == 1);
  CHECK(h25.d == std::map<int, int>{{2, 2}});
  CHECK(upper_index_jennings(h25) == 10);
}

TEST_CASE("recursion and product formula agree term by term") {
  for (auto* name : {"dihedral", "quaternion", "semidihedral"})
    for (long o : {16L, 32L, 64L}) {
      GroupTable g = fam(name, {o});
      CHECK(dimension_series_product(g, 2)
                .same_terms(dimension_series_recursive(g, 2)));
    }
  GroupTable w = fam("wreath_cyclic", {3});
  CHECK(dimension_series_product(w, 3).same_terms(dimension_series_recursive(w, 3)));
  GroupTable h = fam("heisenberg2", {3});
  CHECK(dimension_series_product(h, 3).same_terms(dimension_series_recursive(h, 3)));
}

TEST_CASE("series base terms and exponent sum") {
  GroupTable g = fam("dihedral", {32});
  DimensionSeries s = dimension_series_product(g, 2);
  CHECK(s.term(1) == Subgroup::whole(g));
  CHECK(s.term(2) == lower_central_series(g).terms[1]);
  DSequence ds = d_sequence(s);
  CHECK(ds.sum() == ds.n);
}

TEST_CASE("cyclic commutator subgroup attains the maximal index") {
  for (auto* name : {"dihedral", "quaternion", "semidihedral"}) {
    GroupTable g = fam(name, {64});
    long go = lower_central_series(g).terms[1].size();
    CHECK(upper_index_jennings(dseq_of(g, 2)) == go + 1);
  }
}

TEST_CASE("coprime part") {
  CHECK(coprime_part(12, 2) == 3);
  CHECK(coprime_part(12, 3) == 4);
  CHECK(coprime_part(7, 2) == 7);
  CHECK(coprime_part(8, 2) == 1);
}

TEST_CASE("exponent-sequence consistency checks hold on every sample group") {
  auto ok = [](const GroupTable& g, int p) {
    DimensionSeries s = dimension_series_product(g, p);
    return shalev_checks(d_sequence(s), s).empty();
  };
  CHECK(ok(fam("dihedral", {64}), 2));
  CHECK(ok(fam("quaternion", {16}), 2));
  CHECK(ok(fam("unitriangular", {4, 2}), 2));
  CHECK(ok(fam("wreath_cyclic", {3}), 3));
  CHECK(ok(fam("heisenberg", {5}), 5));
  CHECK(ok(fam("heisenberg2", {5}), 5));
}
