#include "lienil/classify.hpp"

#include <array>

namespace lienil {

namespace {
constexpr std::array<const char*, 8> kIds = {"T1.i",  "T1.ii", "T2.i", "T2.ii",
                                             "T2.iii", "T3.i",  "T3.ii", "T3.iii"};
}

const char* cond_id(Cond c) { return kIds[static_cast<int>(c)]; }

std::optional<Cond> cond_from_id(const std::string& id) {
  for (size_t i = 0; i < kIds.size(); ++i)
    if (id == kIds[i]) return static_cast<Cond>(i);
  return std::nullopt;
}

long cond_target(Cond c, long gprime_order, int p) {
  switch (c) {
    case Cond::T1i:
    case Cond::T1ii:
      return gprime_order - 4 * p + 5;
    case Cond::T2i:
    case Cond::T2ii:
    case Cond::T2iii:
      return gprime_order - 3 * p + 4;
    default:
      return gprime_order - 2 * p + 3;
  }
}

std::vector<Cond> condition_match(const GroupFacts& f) {
  std::vector<Cond> out;
  const bool c2c2c2 = f.gprime_abelian && f.gprime_type == AbelianType{{2, 2, 2}};
  const bool c5c5 = f.gprime_abelian && f.gprime_type == AbelianType{{5, 5}};
  const bool c4c2 = f.gprime_abelian && f.gprime_type == AbelianType{{4, 2}};
  const bool c3c3 = f.gprime_abelian && f.gprime_type == AbelianType{{3, 3}};
  const auto& g3 = f.gamma3;

  if (f.p == 2 && f.cls == 2 && c2c2c2) out.push_back(Cond::T1i);
  if (f.p == 5 && f.cls == 2 && c5c5) out.push_back(Cond::T1ii);

  if (f.p == 2 && f.cls == 3 && c2c2c2 && g3.cyclic) out.push_back(Cond::T2i);
  // C4xC2 with gamma_3 inside (G')^2, i.e. gamma_3 trivial or equal to it.
  // (The reversed inclusion would also admit gamma_3 = Omega_1(G'), which
  // belongs to the |G'|-2p+3 case below and must not match here.)
  if (f.p == 2 && c4c2 && (g3.order == 1 || g3.equals_gprime_squared))
    out.push_back(Cond::T2ii);
  if (f.p == 5 && f.cls == 3 && c5c5) out.push_back(Cond::T2iii);

  if (f.p == 2 && f.cls == 3 && c2c2c2 && g3.type == AbelianType{{2, 2}})
    out.push_back(Cond::T3i);
  // gamma_3 in {<b>, <a^2>x<b>, <a^2 b>}: invariantly, either Omega_1(G')
  // or an order-2 subgroup other than (G')^2.
  if (f.p == 2 && c4c2 &&
      (g3.equals_omega1 || (g3.order == 2 && !g3.equals_gprime_squared)))
    out.push_back(Cond::T3ii);
  // cl(G) = 2 here: the d-sequence lemma for this value forces d_(2) = 2,
  // hence gamma_3 = 1 (class 3 with C3xC3 lands at |G'|-p+2 instead).
  if (f.p == 3 && f.cls == 2 && c3c3) out.push_back(Cond::T3iii);
  return out;
}

std::vector<std::string> lemma_d_match(int p, int n, const DSequence& ds) {
  struct Case {
    const char* id;
    int p, n;
    std::map<int, int> d;
  };
  static const std::vector<Case> cases = {
      {"E1.i", 2, 3, {{2, 3}}},
      {"E1.ii", 3, 3, {{2, 1}, {4, 1}, {6, 1}}},
      {"E1.iii", 5, 2, {{2, 2}}},
      {"E2.i", 2, 3, {{2, 2}, {3, 1}}},
      {"E2.ii", 3, 3, {{2, 1}, {4, 1}, {7, 1}}},
      {"E2.iii", 5, 2, {{2, 1}, {3, 1}}},
      {"E3.i", 2, 3, {{2, 1}, {3, 2}}},
      {"E3.ii", 3, 2, {{2, 2}}},
  };
  std::vector<std::string> out;
  for (const auto& c : cases)
    if (c.p == p && c.n == n && c.d == ds.d) out.push_back(c.id);
  return out;
}

GroupFacts collect_facts(const GroupTable& g, int p, const CentralSeries& lcs) {
  GroupFacts f;
  f.p = p;
  f.cls = lcs.cls;
  const Subgroup gprime =
      lcs.terms.size() > 1 ? lcs.terms[1] : Subgroup::trivial(g);
  const Subgroup gamma3 =
      lcs.terms.size() > 2 ? lcs.terms[2] : Subgroup::trivial(g);
  f.gprime_order = gprime.size();
  f.gprime_abelian = is_abelian_subgroup(g, gprime);
  if (f.gprime_abelian) f.gprime_type = abelian_type(g, gprime);

  f.gamma3.order = gamma3.size();
  f.gamma3.cyclic = is_cyclic(g, gamma3);
  Subgroup gp2 = power_subgroup(g, gprime, 2);
  f.gamma3.equals_gprime_squared = gamma3 == gp2;
  f.gamma3.contains_gprime_squared = [&] {
    for (elt x : gp2.members())
      if (!gamma3.contains(x)) return false;
    return true;
  }();
  if (f.gprime_abelian) {
    f.gamma3.equals_omega1 = gamma3 == omega1(g, gprime);
    f.gamma3.type = abelian_type(g, gamma3);
  } else if (is_abelian_subgroup(g, gamma3)) {
    f.gamma3.type = abelian_type(g, gamma3);
  }
  return f;
}

}  // namespace lienil
