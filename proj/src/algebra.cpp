#include "lienil/algebra.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace lienil {

// ---------------------------------------------------------------- AlgebraVec

AlgebraVec AlgebraVec::basis(int p, int n, elt g) {
  AlgebraVec v(p, n);
  v.c[g] = 1;
  return v;
}

bool AlgebraVec::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](std::uint8_t x) { return x == 0; });
}

AlgebraVec& AlgebraVec::add(const AlgebraVec& o) {
  for (size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint8_t>((c[i] + o.c[i]) % p);
  return *this;
}

AlgebraVec& AlgebraVec::sub(const AlgebraVec& o) {
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<std::uint8_t>((c[i] + p - o.c[i]) % p);
  return *this;
}

AlgebraVec& AlgebraVec::scale(int k) {
  k = ((k % p) + p) % p;
  for (auto& x : c) x = static_cast<std::uint8_t>(x * k % p);
  return *this;
}

AlgebraVec multiply(const GroupTable& g, const AlgebraVec& a, const AlgebraVec& b) {
  if (a.p != b.p || a.c.size() != b.c.size() ||
      a.c.size() != static_cast<size_t>(g.order()))
    fail(ErrorKind::Invalid, "algebra elements have mismatched parents");
  AlgebraVec r(a.p, g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (!a.c[x]) continue;
    const int ax = a.c[x];
    for (int y = 0; y < g.order(); ++y) {
      if (!b.c[y]) continue;
      elt z = g.mul(static_cast<elt>(x), static_cast<elt>(y));
      r.c[z] = static_cast<std::uint8_t>((r.c[z] + ax * b.c[y]) % a.p);
    }
  }
  return r;
}

AlgebraVec lie_bracket(const GroupTable& g, const AlgebraVec& a, const AlgebraVec& b) {
  AlgebraVec ab = multiply(g, a, b);
  return ab.sub(multiply(g, b, a));
}

// ------------------------------------------------------------------ Subspace

Subspace::Subspace(int p, int n) : p_(p), n_(n), words_((n + 63) / 64) {
  if (p > 13) fail(ErrorKind::Invalid, "prime too large for packed arithmetic");
  for (int i = 0; i < 256; ++i) modtab_[i] = static_cast<std::uint8_t>(i % p);
  for (int k = 1; k < p; ++k)
    for (int j = 1; j < p; ++j)
      if (k * j % p == 1) invtab_[k] = static_cast<std::uint8_t>(j);
}

namespace {

int first_set(const std::vector<std::uint64_t>& w) {
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
  return -1;
}

}  // namespace

bool Subspace::insert(std::span<const std::uint8_t> v) {
  if (p_ == 2) {
    std::vector<std::uint64_t> w(words_, 0);
    for (int i = 0; i < n_; ++i)
      if (v[i] & 1) w[i >> 6] |= 1ull << (i & 63);
    for (size_t r = 0; r < bits_.size(); ++r) {
      int pv = pivots_[r];
      if (w[pv >> 6] >> (pv & 63) & 1)
        for (int j = 0; j < words_; ++j) w[j] ^= bits_[r][j];
    }
    int pv = first_set(w);
    if (pv < 0) return false;
    // back-eliminate the new pivot from existing rows
    for (size_t r = 0; r < bits_.size(); ++r)
      if (bits_[r][pv >> 6] >> (pv & 63) & 1)
        for (int j = 0; j < words_; ++j) bits_[r][j] ^= w[j];
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), pv) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, pv);
    bits_.insert(bits_.begin() + pos, std::move(w));
    return true;
  }

  std::vector<std::uint8_t> w(v.begin(), v.begin() + n_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    int pv = pivots_[r];
    int k = w[pv];
    if (!k) continue;
    const auto& row = rows_[r];
    const int f = p_ - k;
    for (int j = pv; j < n_; ++j) w[j] = modtab_[w[j] + f * row[j]];
  }
  int pv = -1;
  for (int j = 0; j < n_; ++j)
    if (w[j]) { pv = j; break; }
  if (pv < 0) return false;
  const int inv = invtab_[w[pv]];
  for (int j = pv; j < n_; ++j) w[j] = modtab_[w[j] * inv % p_ + 0];
  for (size_t r = 0; r < rows_.size(); ++r) {
    int k = rows_[r][pv];
    if (!k) continue;
    const int f = p_ - k;
    for (int j = pv; j < n_; ++j) rows_[r][j] = modtab_[rows_[r][j] + f * w[j]];
  }
  size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), pv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pv);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

bool Subspace::contains(std::span<const std::uint8_t> v) const {
  if (p_ == 2) {
    std::vector<std::uint64_t> w(words_, 0);
    for (int i = 0; i < n_; ++i)
      if (v[i] & 1) w[i >> 6] |= 1ull << (i & 63);
    for (size_t r = 0; r < bits_.size(); ++r) {
      int pv = pivots_[r];
      if (w[pv >> 6] >> (pv & 63) & 1)
        for (int j = 0; j < words_; ++j) w[j] ^= bits_[r][j];
    }
    return first_set(w) < 0;
  }
  std::vector<std::uint8_t> w(v.begin(), v.begin() + n_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    int k = w[pivots_[r]];
    if (!k) continue;
    const int f = p_ - k;
    for (int j = pivots_[r]; j < n_; ++j) w[j] = modtab_[w[j] + f * rows_[r][j]];
  }
  return std::all_of(w.begin(), w.end(), [](std::uint8_t x) { return x == 0; });
}

void Subspace::row(int i, std::span<std::uint8_t> out) const {
  if (p_ == 2) {
    for (int j = 0; j < n_; ++j)
      out[j] = static_cast<std::uint8_t>(bits_[i][j >> 6] >> (j & 63) & 1);
  } else {
    std::copy(rows_[i].begin(), rows_[i].end(), out.begin());
  }
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  std::vector<std::uint8_t> buf(n_);
  for (int i = 0; i < dim(); ++i) {
    row(i, buf);
    if (!o.contains(buf)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  // RREF is canonical per subspace.
  return p_ == o.p_ && n_ == o.n_ && pivots_ == o.pivots_ && bits_ == o.bits_ &&
         rows_ == o.rows_;
}

// ------------------------------------------------------------- ideal closure

namespace {

std::vector<elt> translation_generators(const GroupTable& g) {
  if (!g.generators().empty()) return g.generators();
  std::vector<elt> all;
  for (int x = 1; x < g.order(); ++x) all.push_back(static_cast<elt>(x));
  return all;
}

void close_as_ideal(const GroupTable& g, Subspace& s) {
  const int n = g.order();
  const auto gens = translation_generators(g);
  std::vector<std::uint8_t> v(n), w(n);
  bool grew = true;
  while (grew) {
    grew = false;
    const int d = s.dim();
    for (int i = 0; i < d; ++i) {
      s.row(i, v);
      for (elt t : gens) {
        std::fill(w.begin(), w.end(), 0);
        for (int x = 0; x < n; ++x)
          if (v[x]) w[g.mul(t, static_cast<elt>(x))] = v[x];
        grew |= s.insert(w);
        std::fill(w.begin(), w.end(), 0);
        for (int x = 0; x < n; ++x)
          if (v[x]) w[g.mul(static_cast<elt>(x), t)] = v[x];
        grew |= s.insert(w);
      }
    }
  }
}

// [v, e_t] as coefficient rows: (v t)_xt = v_x, (t v)_tx = v_x.
void bracket_with_element(const GroupTable& g, int p, const std::vector<std::uint8_t>& v,
                          elt t, std::vector<std::uint8_t>& out) {
  std::fill(out.begin(), out.end(), 0);
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    if (!v[x]) continue;
    elt r = g.mul(static_cast<elt>(x), t);
    out[r] = static_cast<std::uint8_t>((out[r] + v[x]) % p);
    elt l = g.mul(t, static_cast<elt>(x));
    out[l] = static_cast<std::uint8_t>((out[l] + p - v[x]) % p);
  }
}

std::vector<std::vector<std::uint8_t>> subspace_rows(const Subspace& s) {
  std::vector<std::vector<std::uint8_t>> rows(s.dim(),
                                              std::vector<std::uint8_t>(s.ambient()));
  for (int i = 0; i < s.dim(); ++i) s.row(i, rows[i]);
  return rows;
}

LieChain lie_chain_impl(const GroupTable& g, int p, int max_dim, long iter_cap,
                        bool lower) {
  const int n = g.order();
  if (n > max_dim) fail(ErrorKind::Range, "oracle out of range");
  LieChain chain;
  // Weight-1 span is all of R for both chains.
  std::vector<std::vector<std::uint8_t>> prev(n, std::vector<std::uint8_t>(n, 0));
  for (int i = 0; i < n; ++i) prev[i][i] = 1;

  // For the upper chain the previous power is an ideal, so by the Leibniz
  // rule [a, xy] = x[a,y] + [a,x]y brackets with the table generators
  // already generate the same ideal; the pure span of the lower chain
  // needs brackets with every element.
  std::vector<elt> bracket_elts;
  if (lower || g.generators().empty())
    for (int t = 1; t < n; ++t) bracket_elts.push_back(static_cast<elt>(t));
  else
    bracket_elts = g.generators();

  std::vector<std::uint8_t> br(n);
  for (long k = 2;; ++k) {
    Subspace span(p, n);
    for (const auto& w : prev)
      for (elt t : bracket_elts) {
        bracket_with_element(g, p, w, t, br);
        span.insert(br);
      }
    // The lower chain recurses on the pure Lie span; the upper chain recurses
    // on the ideal it generates.
    Subspace ideal = span;
    close_as_ideal(g, ideal);
    chain.dims.push_back(ideal.dim());
    if (ideal.dim() == 0) {
      chain.powers.push_back(std::move(ideal));
      chain.t = k;
      return chain;
    }
    prev = subspace_rows(lower ? span : ideal);
    chain.powers.push_back(std::move(ideal));
    if (k > iter_cap)
      fail(ErrorKind::Internal, "Lie power chain exceeded the |G'|+1 bound");
  }
}

}  // namespace

Subspace ideal_closure(const GroupTable& g, int p, const std::vector<AlgebraVec>& span) {
  Subspace s(p, g.order());
  for (const auto& v : span) {
    if (v.p != p || v.c.size() != static_cast<size_t>(g.order()))
      fail(ErrorKind::Invalid, "algebra elements have mismatched parents");
    s.insert(v.c);
  }
  close_as_ideal(g, s);
  return s;
}

LieChain lower_lie_chain(const GroupTable& g, int p, int max_dim, long iter_cap) {
  return lie_chain_impl(g, p, max_dim, iter_cap, true);
}

LieChain upper_lie_chain(const GroupTable& g, int p, int max_dim, long iter_cap) {
  return lie_chain_impl(g, p, max_dim, iter_cap, false);
}

DimensionSeries dimension_subgroups_direct(const GroupTable& g, int p,
                                           const LieChain& upper) {
  DimensionSeries s;
  s.p = p;
  s.method = DimensionSeries::Method::Direct;
  s.terms.push_back(Subgroup::whole(g));
  const int n = g.order();
  std::vector<std::uint8_t> v(n);
  for (size_t i = 0; !s.terms.back().is_trivial(); ++i) {
    if (i >= upper.powers.size())
      fail(ErrorKind::Internal, "upper chain too short for dimension subgroups");
    const Subspace& rm = upper.powers[i];  // R^(i+2)
    std::vector<elt> members;
    for (int x = 0; x < n; ++x) {
      std::fill(v.begin(), v.end(), 0);
      if (x != 0) {
        v[x] = 1;
        v[0] = static_cast<std::uint8_t>(p - 1);
      }
      if (rm.contains(v)) members.push_back(static_cast<elt>(x));
    }
    s.terms.emplace_back(g, std::move(members));
  }
  return s;
}

// ------------------------------------------------------------- unit group

namespace {

using umask = std::uint64_t;

struct UnitAlgebra {
  const GroupTable& g;
  int n;
  umask mul(umask a, umask b) const {
    umask r = 0;
    for (int x = 0; x < n; ++x) {
      if (!(a >> x & 1)) continue;
      for (int y = 0; y < n; ++y)
        if (b >> y & 1) r ^= umask{1} << g.mul(static_cast<elt>(x), static_cast<elt>(y));
    }
    return r;
  }
  umask inv(umask a) const {
    // unit orders are 2-powers: a^(2^k) = 1 gives a^-1 = a * a^2 * ... * a^(2^(k-1))
    umask acc = 1, sq = a;
    while (sq != 1) {
      acc = mul(acc, sq);
      sq = mul(sq, sq);
    }
    return acc;
  }
};

// Subgroup of U as an explicit element set, rebuilt by BFS whenever a new
// generator shows up (each new generator at least doubles the set, so this
// happens at most log2 |H| times).
struct UnitSubgroup {
  std::vector<umask> gens;
  std::unordered_set<umask> set{1};

  void close(const UnitAlgebra& ua) {
    set.clear();
    set.insert(1);
    std::vector<umask> queue{1};
    for (size_t h = 0; h < queue.size(); ++h)
      for (umask s : gens) {
        umask x = ua.mul(queue[h], s);
        if (set.insert(x).second) queue.push_back(x);
      }
  }
  bool add(const UnitAlgebra& ua, umask x) {
    if (set.count(x)) return false;
    gens.push_back(x);
    close(ua);
    return true;
  }
};

}  // namespace

int unit_group_class(const GroupTable& g, int p, unsigned long long size_cap) {
  if (p != 2) fail(ErrorKind::Invalid, "unit enumeration requires p = 2");
  const int n = g.order();
  if (n > 60 || (n >= 1 && (1ull << (n - 1)) > size_cap))
    fail(ErrorKind::Cap, "unit group too large");
  UnitAlgebra ua{g, n};

  // U = 1 + aug(KG): exactly the masks of odd weight. Grow a generating set.
  UnitSubgroup u;
  u.close(ua);
  const umask total = umask{1} << n;
  for (umask m = 1; m < total; ++m)
    if (std::popcount(m) % 2 == 1) u.add(ua, m);
  if (u.set.size() != (1ull << (n - 1)))
    fail(ErrorKind::Internal, "unit group enumeration incomplete");
  if (u.set.size() == 1) return 0;

  // Lower central series on U; each term is built as a normal closure.
  auto normal_closure = [&](const std::vector<umask>& seeds) {
    UnitSubgroup h;
    h.close(ua);
    for (umask s : seeds) h.add(ua, s);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<umask> snapshot(h.set.begin(), h.set.end());
      for (umask x : snapshot)
        for (umask s : u.gens) {
          umask c = ua.mul(ua.mul(ua.inv(s), x), s);
          grew |= h.add(ua, c);
        }
    }
    return h;
  };

  auto commutator = [&](umask a, umask b) {
    return ua.mul(ua.mul(ua.inv(a), ua.inv(b)), ua.mul(a, b));
  };

  std::vector<umask> seeds;
  for (umask a : u.gens)
    for (umask b : u.gens) seeds.push_back(commutator(a, b));
  UnitSubgroup term = normal_closure(seeds);
  int cls = 1;
  while (term.set.size() > 1) {
    ++cls;
    seeds.clear();
    for (umask x : term.set)
      for (umask s : u.gens) seeds.push_back(commutator(x, s));
    UnitSubgroup next = normal_closure(seeds);
    if (next.set.size() >= term.set.size())
      fail(ErrorKind::Internal, "unit group series failed to descend");
    term = std::move(next);
  }
  return cls;
}

}  // namespace lienil
