#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "lienil/classify.hpp"
#include "lienil/corpus.hpp"

using namespace lienil;

namespace {
GroupTable fam(const std::string& name, std::initializer_list<long> params) {
  std::vector<long> p(params);
  return build_spec(family_spec(name, p), kDefaultElementCap);
}

GroupFacts facts_of(const GroupTable& g, int p) {
  return collect_facts(g, p, lower_central_series(g));
}

GroupTable from_corpus(const std::string& file) {
  std::ifstream in(std::string(CORPUS_DIR) + "/" + file);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return build_spec(parse_spec(buf.str()));
}

std::vector<std::string> ids_of(const std::vector<Cond>& cs) {
  std::vector<std::string> out;
  for (Cond c : cs) out.push_back(cond_id(c));
  return out;
}
}  // namespace

TEST_CASE("condition ids round-trip") {
  for (int i = 0; i < 8; ++i) {
    Cond c = static_cast<Cond>(i);
    auto back = cond_from_id(cond_id(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK_FALSE(cond_from_id("T9.x").has_value());
}

TEST_CASE("target values per condition group") {
  CHECK(cond_target(Cond::T1i, 8, 2) == 5);    // |G'|-4p+5
  CHECK(cond_target(Cond::T1ii, 25, 5) == 10);
  CHECK(cond_target(Cond::T2i, 8, 2) == 6);    // |G'|-3p+4
  CHECK(cond_target(Cond::T2iii, 25, 5) == 14);
  CHECK(cond_target(Cond::T3i, 8, 2) == 7);    // |G'|-2p+3
  CHECK(cond_target(Cond::T3iii, 9, 3) == 6);
}

TEST_CASE("witness groups match exactly their condition") {
  GroupTable d8 = fam("dihedral", {8});
  GroupTable d8cubed = GroupTable::direct_product(GroupTable::direct_product(d8, d8), d8);
  CHECK(ids_of(condition_match(facts_of(d8cubed, 2))) ==
        std::vector<std::string>{"T1.i"});

  CHECK(ids_of(condition_match(facts_of(fam("heisenberg2", {5}), 5))) ==
        std::vector<std::string>{"T1.ii"});

  CHECK(ids_of(condition_match(facts_of(fam("unitriangular", {4, 2}), 2))) ==
        std::vector<std::string>{"T2.i"});

  GroupTable d16xd8 = GroupTable::direct_product(fam("dihedral", {16}), d8);
  CHECK(ids_of(condition_match(facts_of(d16xd8, 2))) ==
        std::vector<std::string>{"T2.ii"});

  CHECK(ids_of(condition_match(facts_of(from_corpus("w625.json"), 5))) ==
        std::vector<std::string>{"T2.iii"});
  CHECK(ids_of(condition_match(facts_of(from_corpus("w128.json"), 2))) ==
        std::vector<std::string>{"T3.i"});
  CHECK(ids_of(condition_match(facts_of(from_corpus("w64.json"), 2))) ==
        std::vector<std::string>{"T3.ii"});

  CHECK(ids_of(condition_match(facts_of(fam("heisenberg2", {3}), 3))) ==
        std::vector<std::string>{"T3.iii"});
}

TEST_CASE("negative controls match nothing") {
  for (auto* name : {"dihedral", "quaternion", "semidihedral"}) {
    GroupTable g = fam(name, {16});
    CHECK(condition_match(facts_of(g, 2)).empty());
  }
  CHECK(condition_match(facts_of(fam("quaternion", {8}), 2)).empty());
  CHECK(condition_match(facts_of(fam("modular_maximal_cyclic", {16}), 2)).empty());
  // class 3 with C3xC3: lands at the almost-maximal index, not a target
  CHECK(condition_match(facts_of(fam("wreath_cyclic", {3}), 3)).empty());
}

TEST_CASE("gamma3 facts") {
  GroupFacts f = facts_of(from_corpus("w64.json"), 2);
  CHECK(f.gprime_type.str() == "C4xC2");
  CHECK(f.gamma3.order == 4);
  CHECK_FALSE(f.gamma3.cyclic);
  CHECK(f.gamma3.equals_omega1);
  CHECK_FALSE(f.gamma3.equals_gprime_squared);

  GroupTable d16xd8 = GroupTable::direct_product(fam("dihedral", {16}),
                                                 fam("dihedral", {8}));
  GroupFacts f2 = facts_of(d16xd8, 2);
  CHECK(f2.gamma3.order == 2);
  CHECK(f2.gamma3.equals_gprime_squared);
}

TEST_CASE("exact exponent-sequence cases") {
  auto ds = [](int p, int n, std::map<int, int> d) {
    DSequence s;
    s.p = p;
    s.n = n;
    s.d = std::move(d);
    return s;
  };
  CHECK(lemma_d_match(2, 3, ds(2, 3, {{2, 3}})) ==
        std::vector<std::string>{"E1.i"});
  CHECK(lemma_d_match(5, 2, ds(5, 2, {{2, 2}})) ==
        std::vector<std::string>{"E1.iii"});
  CHECK(lemma_d_match(2, 3, ds(2, 3, {{2, 2}, {3, 1}})) ==
        std::vector<std::string>{"E2.i"});
  CHECK(lemma_d_match(5, 2, ds(5, 2, {{2, 1}, {3, 1}})) ==
        std::vector<std::string>{"E2.iii"});
  CHECK(lemma_d_match(2, 3, ds(2, 3, {{2, 1}, {3, 2}})) ==
        std::vector<std::string>{"E3.i"});
  CHECK(lemma_d_match(3, 2, ds(3, 2, {{2, 2}})) ==
        std::vector<std::string>{"E3.ii"});
  // representable but excluded-for-groups p = 3 shapes
  CHECK(lemma_d_match(3, 3, ds(3, 3, {{2, 1}, {4, 1}, {6, 1}})) ==
        std::vector<std::string>{"E1.ii"});
  CHECK(lemma_d_match(3, 3, ds(3, 3, {{2, 1}, {4, 1}, {7, 1}})) ==
        std::vector<std::string>{"E2.ii"});
  CHECK(lemma_d_match(2, 3, ds(2, 3, {{2, 1}, {3, 1}})).empty());
  CHECK(lemma_d_match(2, 2, ds(2, 2, {{2, 2}})).empty());
}
