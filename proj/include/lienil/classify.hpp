#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lienil/dimension.hpp"
#include "lienil/group.hpp"

namespace lienil {

/// Structural facts about gamma_3(G) relative to G', enough to evaluate
/// every theorem condition without a choice of generators.
struct Gamma3Info {
  long order = 1;
  bool cyclic = true;
  bool equals_gprime_squared = false;  // gamma_3 == (G')^2
  bool contains_gprime_squared = false;
  bool equals_omega1 = false;          // gamma_3 == Omega_1(G') (abelian G' only)
  AbelianType type;                    // when gamma_3 is abelian
};

/// The eight structural conditions of the three classification theorems.
/// Target values: T1.* -> |G'|-4p+5, T2.* -> |G'|-3p+4, T3.* -> |G'|-2p+3.
enum class Cond { T1i, T1ii, T2i, T2ii, T2iii, T3i, T3ii, T3iii };

const char* cond_id(Cond c);
std::optional<Cond> cond_from_id(const std::string& id);
/// Which of the three target index values the condition certifies.
long cond_target(Cond c, long gprime_order, int p);

struct GroupFacts {
  int p = 0;
  int cls = 0;              // nilpotency class
  long gprime_order = 1;
  bool gprime_abelian = true;
  AbelianType gprime_type;  // valid when abelian
  Gamma3Info gamma3;
};

/// All conditions the group satisfies. The C4xC2 case of the third theorem is
/// evaluated in generator-free terms: gamma_3 is either Omega_1(G') or an
/// order-2 subgroup different from (G')^2.
std::vector<Cond> condition_match(const GroupFacts& f);

/// Exact d-sequence shapes that realize the three target index values,
/// ids "E1.i" .. "E3.ii" grouped by target. The p = 3 shapes of the first
/// two targets are representable but never occur for real groups; their
/// occurrence is a reportable finding.
std::vector<std::string> lemma_d_match(int p, int n, const DSequence& ds);

GroupFacts collect_facts(const GroupTable& g, int p, const CentralSeries& lcs);

}  // namespace lienil
