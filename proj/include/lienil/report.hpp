#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lienil/classify.hpp"
#include "lienil/dimension.hpp"
#include "lienil/group.hpp"

namespace lienil {

struct AnalyzeOptions {
  int element_cap = kDefaultElementCap;
  // Direct ideal-chain oracle: runs automatically for |G| <= max_direct_dim.
  int max_direct_dim = 256;
  // When set, the oracle is required: out-of-range becomes an error instead
  // of a skip.
  bool require_direct = false;
  bool compute_units = false;
  unsigned long long unit_cap = 1ull << 15;
  int identity_samples = 1000;  // random triples for the commutator identity
  unsigned rng_seed = 0x1e9u;
};

/// Per-group record of structural data, both index computations, and theorem
/// matches. Append-only facts; `violations` collects every failed invariant
/// or iff direction with its evidence.
struct AnalysisReport {
  std::string name;
  long order = 0;
  int p = 0;
  bool gated = false;
  std::string gate_reason;

  // valid when gated
  int n = 0;
  int exp_log = 0;
  int cls = 0;
  bool nilpotent = false;
  std::string gprime_type;  // "nonabelian(k)" when G' is not abelian
  GroupFacts facts;
  DSequence dseq;
  long tU_jennings = 0;

  bool oracle_ran = false;
  std::optional<long> tU_direct;
  std::optional<long> tL_direct;
  std::vector<int> lower_dims;
  std::vector<int> upper_dims;

  std::optional<int> unit_class;

  std::vector<std::string> matches;        // theorem condition ids
  std::vector<std::string> lemma_matches;  // d-sequence lemma case ids
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  std::string verdict;  // "consistent" | "inconsistent" | "not Lie nilpotent"

  std::string to_json() const;  // stable field names, deterministic order
  std::string to_text() const;
};

AnalysisReport analyze_group(const GroupTable& g, const std::string& name, int p,
                             const AnalyzeOptions& opt);

/// Prime to analyze with when a spec does not pin one: the prime of G' if G'
/// is a nontrivial prime power, else the smallest prime dividing |G|.
int infer_characteristic(const GroupTable& g);

}  // namespace lienil
