#pragma once

#include <map>
#include <string>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

/// Lie dimension subgroups D_(1) >= D_(2) >= ... >= D_(T) = {1}.
struct DimensionSeries {
  enum class Method { Recursive, Product, Direct };
  int p = 0;
  Method method = Method::Product;
  std::vector<Subgroup> terms;  // terms[0] = D_(1) = G, last term trivial

  const Subgroup& term(int m) const;  // D_(m), trivial beyond the stored tail
  int length() const { return static_cast<int>(terms.size()); }
  bool same_terms(const DimensionSeries& o) const;
};

/// Jennings exponents d_(k), k >= 2, stored sparsely.
struct DSequence {
  int p = 0;
  int n = 0;        // |G'| = p^n
  int exp_log = 0;  // exp(G') = p^exp_log
  std::map<int, int> d;

  int at(int k) const {
    auto it = d.find(k);
    return it == d.end() ? 0 : it->second;
  }
  int sum() const;
};

/// Input gate: KG is Lie nilpotent iff G is nilpotent and G' a finite p-group.
struct GateResult {
  bool nilpotent = false;
  bool gprime_p_group = false;
  CentralSeries lcs;
  bool ok() const { return nilpotent && gprime_p_group; }
  std::string reason() const;
};

GateResult evaluate_gate(const GroupTable& g, int p);

/// D_(m+1) = prod over (j-1)p^i >= m of gamma_j(G)^(p^i).
DimensionSeries dimension_series_product(const GroupTable& g, int p);
/// D_(1) = G, D_(2) = G', D_(m+1) = (D_(m),G) * D_(ceil(m/p)+1)^p for m >= 2.
DimensionSeries dimension_series_recursive(const GroupTable& g, int p);

DSequence d_sequence(const DimensionSeries& s);

/// t^L(KG) = 2 + (p-1) * sum_{m>=1} m * d_(m+1).
long upper_index_jennings(const DSequence& ds);

/// Largest divisor of x coprime to p.
long coprime_part(long x, int p);

/// Consistency predicates on a computed d-sequence. All are theorems, so any
/// returned violation indicates an engine bug.
std::vector<std::string> shalev_checks(const DSequence& ds, const DimensionSeries& series);

}  // namespace lienil
