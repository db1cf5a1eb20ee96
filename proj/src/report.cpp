#include "lienil/report.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lienil/algebra.hpp"

namespace lienil {

using ordered_json = nlohmann::ordered_json;

int infer_characteristic(const GroupTable& g) {
  CentralSeries lcs = lower_central_series(g);
  long go = lcs.terms.size() > 1 ? lcs.terms[1].size() : 1;
  long base = go > 1 ? go : g.order();
  for (long q = 2;; ++q)
    if (base % q == 0) return static_cast<int>(q);
}

namespace {

void check_commutator_identity(const GroupTable& g, const std::string& name,
                               int samples, unsigned seed,
                               std::vector<std::string>& violations) {
  std::mt19937 rng(seed ^ static_cast<unsigned>(std::hash<std::string>{}(name)));
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  for (int i = 0; i < samples; ++i) {
    elt x = static_cast<elt>(pick(rng)), y = static_cast<elt>(pick(rng)),
        z = static_cast<elt>(pick(rng));
    // (xy, z) = (x,z) (x,z,y) (y,z)
    elt lhs = g.comm(g.mul(x, y), z);
    elt rhs = g.mul(g.mul(g.comm(x, z), g.comm(g.comm(x, z), y)), g.comm(y, z));
    if (lhs != rhs) {
      violations.push_back("commutator identity failed at sampled triple");
      return;
    }
  }
}

std::string describe_gprime(const GroupFacts& f) {
  if (f.gprime_abelian) return f.gprime_type.str();
  return "nonabelian(" + std::to_string(f.gprime_order) + ")";
}

}  // namespace

AnalysisReport analyze_group(const GroupTable& g, const std::string& name, int p,
                             const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.name = name;
  r.order = g.order();
  r.p = p;

  check_commutator_identity(g, name, opt.identity_samples, opt.rng_seed, r.violations);

  GateResult gate = evaluate_gate(g, p);
  r.nilpotent = gate.nilpotent;
  if (gate.nilpotent) r.cls = gate.lcs.cls;
  r.gated = gate.ok();
  if (!r.gated) {
    r.gate_reason = gate.reason();
    r.verdict = "not Lie nilpotent";
    return r;
  }

  r.facts = collect_facts(g, p, gate.lcs);
  r.gprime_type = describe_gprime(r.facts);
  if (!r.facts.gprime_abelian && r.facts.gprime_order == 8)
    r.violations.push_back(
        "engine bug: nilpotent group with nonabelian commutator subgroup of order 8");

  // Lower central series sanity: descending, normal terms.
  for (size_t i = 0; i + 1 < gate.lcs.terms.size(); ++i) {
    const Subgroup& lo = gate.lcs.terms[i + 1];
    for (elt x : lo.members())
      if (!gate.lcs.terms[i].contains(x)) {
        r.violations.push_back("lower central series not descending");
        break;
      }
    if (!is_normal(g, lo)) r.violations.push_back("lower central series term not normal");
  }

  DimensionSeries sp = dimension_series_product(g, p);
  DimensionSeries sr = dimension_series_recursive(g, p);
  if (!sp.same_terms(sr))
    r.violations.push_back("dimension series: recursion and product formula disagree");
  if (!(sp.term(1) == Subgroup::whole(g)))
    r.violations.push_back("D_(1) != G");
  const Subgroup gprime =
      gate.lcs.terms.size() > 1 ? gate.lcs.terms[1] : Subgroup::trivial(g);
  if (!(sp.term(2) == gprime)) r.violations.push_back("D_(2) != G'");

  r.dseq = d_sequence(sp);
  r.n = r.dseq.n;
  r.exp_log = r.dseq.exp_log;
  if (r.dseq.sum() != r.dseq.n)
    r.violations.push_back("d-sequence does not sum to n");
  r.tU_jennings = upper_index_jennings(r.dseq);

  long gpo = r.facts.gprime_order;
  if (r.tU_jennings < 2 || r.tU_jennings > gpo + 1)
    r.violations.push_back("Jennings index outside [2, |G'|+1]");
  if (gpo > 1 && is_cyclic(g, gprime) && r.tU_jennings != gpo + 1)
    r.violations.push_back("cyclic G' must attain the maximal index");

  for (auto& v : shalev_checks(r.dseq, sp)) r.violations.push_back(v);

  // Direct oracle in the algebra itself.
  const bool in_range = g.order() <= opt.max_direct_dim;
  if (opt.require_direct && !in_range)
    fail(ErrorKind::Range, "oracle out of range");
  if (in_range) {
    r.oracle_ran = true;
    const long iter_cap = gpo + 1;
    LieChain lower = lower_lie_chain(g, p, opt.max_direct_dim, iter_cap);
    LieChain upper = upper_lie_chain(g, p, opt.max_direct_dim, iter_cap);
    r.tL_direct = lower.t;
    r.tU_direct = upper.t;
    r.lower_dims = lower.dims;
    r.upper_dims = upper.dims;

    if (upper.t != r.tU_jennings)
      r.violations.push_back("direct upper chain disagrees with Jennings formula");
    if (lower.t > upper.t) r.violations.push_back("t_L > t^L");
    for (size_t i = 0; i < lower.powers.size() && i < upper.powers.size(); ++i)
      if (!lower.powers[i].is_subspace_of(upper.powers[i])) {
        r.violations.push_back("chain inclusion R^[k] <= R^(k) failed");
        break;
      }
    for (size_t i = 0; i + 1 < upper.powers.size(); ++i)
      if (!upper.powers[i + 1].is_subspace_of(upper.powers[i])) {
        r.violations.push_back("upper chain not descending");
        break;
      }
    if (p > 3 && lower.t != upper.t)
      r.violations.push_back("t_L != t^L in characteristic > 3");

    DimensionSeries sd = dimension_subgroups_direct(g, p, upper);
    if (!sd.same_terms(sp))
      r.violations.push_back("direct dimension subgroups disagree with Eq-series");
  }

  if (opt.compute_units) {
    r.unit_class = unit_group_class(g, p, opt.unit_cap);
    if (r.tL_direct && *r.unit_class != *r.tL_direct - 1)
      r.violations.push_back("cl(U(KG)) != t_L - 1");
  }

  for (Cond c : condition_match(r.facts)) r.matches.push_back(cond_id(c));
  r.lemma_matches = lemma_d_match(p, r.n, r.dseq);
  for (auto& id : r.lemma_matches)
    if (id == "E1.ii" || id == "E2.ii")
      r.warnings.push_back("excluded p=3 d-sequence case realized: " + id);

  // The iff verification, both directions, for t^L and (when computed) t_L.
  const long targets[3] = {gpo - 4 * p + 5, gpo - 3 * p + 4, gpo - 2 * p + 3};
  {
    std::set<long> matched_targets;
    for (Cond c : condition_match(r.facts))
      matched_targets.insert(cond_target(c, gpo, p));
    if (matched_targets.size() > 1)
      r.violations.push_back("conditions for two distinct target values matched");
    for (long v : matched_targets) {
      if (r.tU_jennings != v)
        r.violations.push_back("matched conditions but t^L != target value");
      if (r.tL_direct && *r.tL_direct != v)
        r.violations.push_back("matched conditions but t_L != target value");
      if (r.tL_direct && *r.tL_direct != r.tU_jennings)
        r.violations.push_back("matched group with t_L != t^L");
    }
    auto reverse_check = [&](long t, const char* which) {
      for (int i = 0; i < 3; ++i) {
        if (t != targets[i]) continue;
        bool found = false;
        for (Cond c : condition_match(r.facts))
          if (cond_target(c, gpo, p) == targets[i]) found = true;
        if (!found)
          r.violations.push_back(std::string(which) +
                                 " attains a target value but matches no condition");
      }
    };
    reverse_check(r.tU_jennings, "t^L");
    if (r.tL_direct) reverse_check(*r.tL_direct, "t_L");

    // Target values must pair with exactly one d-sequence lemma case.
    const char* fam[3] = {"E1", "E2", "E3"};
    for (int i = 0; i < 3; ++i) {
      if (r.tU_jennings != targets[i]) continue;
      int hits = 0;
      for (auto& id : r.lemma_matches)
        if (id.rfind(fam[i], 0) == 0) ++hits;
      if (hits != 1)
        r.violations.push_back(std::string("target value attained without exactly one ") +
                               fam[i] + " d-sequence case");
    }
  }

  r.verdict = r.violations.empty() ? "consistent" : "inconsistent";
  return r;
}

// ----------------------------------------------------------- serialization

std::string AnalysisReport::to_json() const {
  ordered_json j;
  j["name"] = name;
  j["order"] = order;
  j["p"] = p;
  j["gate"] = gated ? "Lie nilpotent" : "not Lie nilpotent";
  if (!gated) {
    j["gate_reason"] = gate_reason;
    j["nilpotent"] = nilpotent;
    j["verdict"] = verdict;
    return j.dump(2);
  }
  j["n"] = n;
  j["l"] = exp_log;
  j["cl"] = cls;
  j["gprime_type"] = gprime_type;
  j["gamma3"] = {{"order", facts.gamma3.order},
                 {"is_cyclic", facts.gamma3.cyclic},
                 {"equals_gprime_squared", facts.gamma3.equals_gprime_squared},
                 {"equals_omega1", facts.gamma3.equals_omega1}};
  ordered_json dj = ordered_json::object();
  for (auto& [k, v] : dseq.d) dj[std::to_string(k)] = v;
  j["d_sequence"] = dj;
  j["tU_jennings"] = tU_jennings;
  j["tU_direct"] = tU_direct ? ordered_json(*tU_direct) : ordered_json(nullptr);
  j["tL_direct"] = tL_direct ? ordered_json(*tL_direct) : ordered_json(nullptr);
  j["oracle"] = oracle_ran ? "ran" : "skipped";
  j["unit_class"] = unit_class ? ordered_json(*unit_class) : ordered_json(nullptr);
  j["matches"] = matches;
  j["lemma_matches"] = lemma_matches;
  j["violations"] = violations;
  j["warnings"] = warnings;
  j["verdict"] = verdict;
  return j.dump(2);
}

std::string AnalysisReport::to_text() const {
  std::ostringstream o;
  o << name << ": |G| = " << order << ", p = " << p << "\n";
  if (!gated) {
    o << "  gate: not Lie nilpotent (" << gate_reason << ")\n";
    return o.str();
  }
  o << "  gate: Lie nilpotent, cl(G) = " << cls << ", |G'| = p^" << n
    << ", exp(G') = p^" << exp_log << ", G' = " << gprime_type << "\n";
  o << "  gamma3: order " << facts.gamma3.order
    << (facts.gamma3.cyclic ? ", cyclic" : ", noncyclic") << "\n";
  o << "  d-sequence:";
  for (auto& [k, v] : dseq.d) o << " d(" << k << ")=" << v;
  if (dseq.d.empty()) o << " (empty)";
  o << "\n";
  o << "  tU (Jennings) = " << tU_jennings;
  if (oracle_ran)
    o << ", tU (direct) = " << *tU_direct << ", tL (direct) = " << *tL_direct;
  else
    o << " [oracle skipped]";
  o << "\n";
  if (unit_class) o << "  cl(U(KG)) = " << *unit_class << "\n";
  o << "  matches:";
  if (matches.empty()) o << " none";
  for (auto& m : matches) o << " " << m;
  o << "\n";
  for (auto& w : warnings) o << "  warning: " << w << "\n";
  for (auto& v : violations) o << "  VIOLATION: " << v << "\n";
  o << "  verdict: " << verdict << "\n";
  return o.str();
}

}  // namespace lienil
