#include "lienil/dimension.hpp"

#include <algorithm>

namespace lienil {

const Subgroup& DimensionSeries::term(int m) const {
  if (m < 1) fail(ErrorKind::Invalid, "dimension subgroup index must be >= 1");
  if (m <= length()) return terms[m - 1];
  return terms.back();  // tail is trivial
}

bool DimensionSeries::same_terms(const DimensionSeries& o) const {
  int len = std::max(length(), o.length());
  for (int m = 1; m <= len; ++m)
    if (!(term(m) == o.term(m))) return false;
  return true;
}

int DSequence::sum() const {
  int s = 0;
  for (auto& [k, v] : d) s += v;
  return s;
}

std::string GateResult::reason() const {
  if (ok()) return "";
  if (!nilpotent) return "G is not nilpotent";
  return "G' is not a p-group for the given p";
}

GateResult evaluate_gate(const GroupTable& g, int p) {
  GateResult r;
  r.lcs = lower_central_series(g);
  r.nilpotent = r.lcs.nilpotent;
  const Subgroup gprime =
      r.lcs.terms.size() > 1 ? r.lcs.terms[1] : Subgroup::trivial(g);
  long s = gprime.size();
  while (s % p == 0) s /= p;
  r.gprime_p_group = (s == 1);
  return r;
}

namespace {

int log_p_exact(long x, int p) {
  int e = 0;
  while (x > 1) {
    if (x % p != 0)
      fail(ErrorKind::Internal, "subgroup index is not a power of p");
    x /= p;
    ++e;
  }
  return e;
}

void require_gate(const GateResult& gate) {
  if (!gate.ok()) fail(ErrorKind::Gate, "KG not Lie nilpotent: " + gate.reason());
}

void push_until_trivial_cap(const DimensionSeries& s, long cap) {
  if (s.length() > cap)
    fail(ErrorKind::Internal, "dimension series failed to terminate");
}

}  // namespace

DimensionSeries dimension_series_product(const GroupTable& g, int p) {
  GateResult gate = evaluate_gate(g, p);
  require_gate(gate);
  const auto& gamma = gate.lcs.terms;
  DimensionSeries s;
  s.p = p;
  s.method = DimensionSeries::Method::Product;
  s.terms.push_back(Subgroup::whole(g));
  if (gamma.size() < 2 || gamma[1].is_trivial()) {
    s.terms.push_back(Subgroup::trivial(g));
    return s;
  }
  const long cap = gamma[1].size() + 2;
  for (long m = 1;; ++m) {
    // Only the smallest qualifying power of each gamma_j matters:
    // gamma_j^(p^i) shrinks as i grows.
    Subgroup acc = Subgroup::trivial(g);
    for (size_t j = 2; j - 1 < gamma.size(); ++j) {
      const Subgroup& gamma_j = gamma[j - 1];  // gamma[0] is gamma_1 = G
      if (gamma_j.is_trivial()) break;
      long pi = 1;
      while ((static_cast<long>(j) - 1) * pi < m) pi *= p;
      Subgroup factor = power_subgroup(g, gamma_j, pi);
      if (!factor.is_trivial()) acc = subgroup_product(g, acc, factor);
    }
    s.terms.push_back(std::move(acc));
    if (s.terms.back().is_trivial()) break;
    push_until_trivial_cap(s, cap);
  }
  return s;
}

DimensionSeries dimension_series_recursive(const GroupTable& g, int p) {
  GateResult gate = evaluate_gate(g, p);
  require_gate(gate);
  DimensionSeries s;
  s.p = p;
  s.method = DimensionSeries::Method::Recursive;
  s.terms.push_back(Subgroup::whole(g));
  Subgroup gprime =
      gate.lcs.terms.size() > 1 ? gate.lcs.terms[1] : Subgroup::trivial(g);
  const long cap = gprime.size() + 2;
  s.terms.push_back(std::move(gprime));
  for (long m = 2; !s.terms.back().is_trivial(); ++m) {
    Subgroup comm = commutator_subgroup(g, s.term(static_cast<int>(m)),
                                        s.terms.front());
    long up = (m + p - 1) / p;  // ceil(m/p)
    Subgroup pw = power_subgroup(g, s.term(static_cast<int>(up + 1)), p);
    s.terms.push_back(subgroup_product(g, comm, pw));
    push_until_trivial_cap(s, cap);
  }
  return s;
}

DSequence d_sequence(const DimensionSeries& s) {
  DSequence ds;
  ds.p = s.p;
  ds.n = log_p_exact(s.term(2).size(), s.p);
  ds.exp_log = log_p_exact(exponent_of(s.term(2).parent(), s.term(2)), s.p);
  for (int k = 2; k < s.length(); ++k) {
    long idx = s.term(k).size() / s.term(k + 1).size();
    if (s.term(k).size() % s.term(k + 1).size() != 0)
      fail(ErrorKind::Internal, "dimension series index not integral");
    int dk = log_p_exact(idx, s.p);
    if (dk > 0) ds.d[k] = dk;
  }
  return ds;
}

long upper_index_jennings(const DSequence& ds) {
  long acc = 0;
  for (auto& [k, dk] : ds.d) acc += static_cast<long>(k - 1) * dk;
  return 2 + static_cast<long>(ds.p - 1) * acc;
}

long coprime_part(long x, int p) {
  while (x % p == 0) x /= p;
  return x;
}

std::vector<std::string> shalev_checks(const DSequence& ds, const DimensionSeries& series) {
  std::vector<std::string> out;
  const int p = ds.p;
  const int kmax = series.length();  // d_(k) = 0 and D_(k) = 1 for k >= kmax

  auto is_p_power = [p](long m) {
    while (m % p == 0) m /= p;
    return m == 1;
  };

  // (i) d_(m+1) = 0 with m a power of p forces D_(m+1) = 1.
  for (int m = 1; m + 1 <= kmax; ++m)
    if (is_p_power(m) && ds.at(m + 1) == 0 && !series.term(m + 1).is_trivial())
      out.push_back("Shalev (i) violated at m=" + std::to_string(m));

  // (ii) same with p^(l-1) | m, where exp(G') = p^l.
  if (ds.exp_log >= 1) {
    long pl1 = 1;
    for (int i = 0; i < ds.exp_log - 1; ++i) pl1 *= p;
    for (int m = 1; m + 1 <= kmax; ++m)
      if (m % pl1 == 0 && ds.at(m + 1) == 0 && !series.term(m + 1).is_trivial())
        out.push_back("Shalev (ii) violated at m=" + std::to_string(m));
  }

  // (iii) p >= 5 and t below the maximum forces t <= p^(n-1) + 2p - 1.
  // For p > 3 the lower and upper indices agree, so the Jennings value stands
  // in for t_L here.
  if (p >= 5 && ds.n >= 1) {
    long pn = 1;
    for (int i = 0; i < ds.n; ++i) pn *= p;
    long t = upper_index_jennings(ds);
    if (t < pn + 1 && t > pn / p + 2 * p - 1)
      out.push_back("Shalev (iii) violated: t=" + std::to_string(t));
  }

  // (iv) if some d_(l+1) = 0 with l < pm, then d_(pm+1) <= d_(m+1).
  for (int m = 1; static_cast<long>(p) * m + 1 <= kmax; ++m) {
    bool gap = false;
    for (int l = 1; l < p * m; ++l)
      if (ds.at(l + 1) == 0) { gap = true; break; }
    if (gap && ds.at(p * m + 1) > ds.at(m + 1))
      out.push_back("Shalev (iv) violated at m=" + std::to_string(m));
  }

  // (v) d_(m+1) = 0 propagates to all l >= m with nu_p'(l) >= nu_p'(m).
  for (int m = 1; m + 1 <= kmax; ++m) {
    if (ds.at(m + 1) != 0) continue;
    for (int l = m; l + 1 <= kmax; ++l)
      if (coprime_part(l, p) >= coprime_part(m, p) && ds.at(l + 1) != 0)
        out.push_back("Shalev (v) violated at m=" + std::to_string(m) +
                      ", l=" + std::to_string(l));
  }
  return out;
}

}  // namespace lienil
