#include "lienil/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

namespace lienil {

// ---------------------------------------------------------------- Permutation

bool Permutation::is_valid() const {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= degree() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Permutation Permutation::identity(int d) {
  Permutation p;
  p.img.resize(d);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Permutation Permutation::compose(const Permutation& g) const {
  Permutation r;
  r.img.resize(img.size());
  for (size_t i = 0; i < img.size(); ++i) r.img[i] = g.img[img[i]];
  return r;
}

// ------------------------------------------------------------------ FpMatrix

FpMatrix FpMatrix::identity(int dim, int p) {
  FpMatrix m;
  m.dim = dim;
  m.p = p;
  m.a.assign(static_cast<size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& o) const {
  FpMatrix r;
  r.dim = dim;
  r.p = p;
  r.a.assign(a.size(), 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      int v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < dim; ++j)
        r.at(i, j) = static_cast<std::uint8_t>((r.at(i, j) + v * o.at(k, j)) % p);
    }
  return r;
}

bool FpMatrix::is_invertible() const {
  FpMatrix m = *this;
  int rank = 0;
  for (int c = 0; c < dim && rank < dim; ++c) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r)
      if (m.at(r, c)) { pivot = r; break; }
    if (pivot < 0) continue;
    for (int j = 0; j < dim; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    int inv = 1;  // pivot^-1 mod p by brute force, p is tiny
    while (inv * m.at(rank, c) % p != 1) ++inv;
    for (int j = 0; j < dim; ++j)
      m.at(rank, j) = static_cast<std::uint8_t>(m.at(rank, j) * inv % p);
    for (int r = 0; r < dim; ++r) {
      if (r == rank || !m.at(r, c)) continue;
      int f = m.at(r, c);
      for (int j = 0; j < dim; ++j)
        m.at(r, j) = static_cast<std::uint8_t>((m.at(r, j) + (p - f) * m.at(rank, j)) % p);
    }
    ++rank;
  }
  return rank == dim;
}

bool FpMatrix::is_identity() const { return a == identity(dim, p).a; }

// ---------------------------------------------------------------- GroupTable

template <class Elem, class ComposeFn, class KeyFn>
GroupTable GroupTable::build_closure(const std::vector<Elem>& gens, const Elem& id,
                                     ComposeFn&& compose, KeyFn&& key, int cap) {
  std::unordered_map<std::string, int> index;
  std::vector<Elem> elems;
  // parent[i] = (j, k): elems[i] == elems[j] * gens[k]; identity has no parent
  std::vector<std::pair<int, int>> parent;

  elems.push_back(id);
  parent.emplace_back(-1, -1);
  index.emplace(key(id), 0);

  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t k = 0; k < gens.size(); ++k) {
      Elem next = compose(elems[head], gens[k]);
      std::string kk = key(next);
      if (index.count(kk)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        fail(ErrorKind::Cap, "group too large");
      index.emplace(std::move(kk), static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
      parent.emplace_back(static_cast<int>(head), static_cast<int>(k));
    }
  }

  const int n = static_cast<int>(elems.size());
  GroupTable g;
  g.n_ = n;
  g.mult_.assign(static_cast<size_t>(n) * n, 0);

  // Columns for the generators: mult[x][gen_k] by direct composition.
  std::vector<std::vector<elt>> gencol(gens.size(), std::vector<elt>(n));
  for (int x = 0; x < n; ++x)
    for (size_t k = 0; k < gens.size(); ++k)
      gencol[k][x] = static_cast<elt>(index.at(key(compose(elems[x], gens[k]))));

  // Fill the rest in BFS order: y = parent * gen  =>  x*y = (x*parent)*gen.
  for (int y = 0; y < n; ++y) {
    auto [py, ky] = parent[y];
    if (py < 0) {
      for (int x = 0; x < n; ++x) g.mult_[static_cast<size_t>(x) * n + y] = static_cast<elt>(x);
    } else {
      for (int x = 0; x < n; ++x) {
        elt xp = g.mult_[static_cast<size_t>(x) * n + py];
        g.mult_[static_cast<size_t>(x) * n + y] = gencol[ky][xp];
      }
    }
  }

  g.inv_.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul(static_cast<elt>(x), static_cast<elt>(y)) == 0) {
        g.inv_[x] = static_cast<elt>(y);
        break;
      }

  for (size_t k = 0; k < gens.size(); ++k)
    g.gens_.push_back(static_cast<elt>(index.at(key(gens[k]))));
  // Dedupe generator indices (repeated or identity generators collapse).
  std::sort(g.gens_.begin(), g.gens_.end());
  g.gens_.erase(std::unique(g.gens_.begin(), g.gens_.end()), g.gens_.end());
  if (!g.gens_.empty() && g.gens_.front() == 0 && g.gens_.size() > 1)
    g.gens_.erase(g.gens_.begin());
  return g;
}

GroupTable GroupTable::from_permutations(const std::vector<Permutation>& gens, int cap) {
  if (gens.empty()) fail(ErrorKind::Invalid, "invalid generator: empty generator list");
  const int d = gens.front().degree();
  for (const auto& p : gens) {
    if (p.degree() != d)
      fail(ErrorKind::Invalid, "invalid generator: permutation degrees differ");
    if (!p.is_valid()) fail(ErrorKind::Invalid, "invalid generator: not a permutation");
  }
  auto key = [](const Permutation& p) {
    // two bytes per point; degrees can exceed 255
    std::string s(2 * p.img.size(), '\0');
    for (size_t i = 0; i < p.img.size(); ++i) {
      s[2 * i] = static_cast<char>(p.img[i] & 0xff);
      s[2 * i + 1] = static_cast<char>((p.img[i] >> 8) & 0xff);
    }
    return s;
  };
  auto compose = [](const Permutation& a, const Permutation& b) { return a.compose(b); };
  return build_closure(gens, Permutation::identity(d), compose, key, cap);
}

GroupTable GroupTable::from_matrices(const std::vector<FpMatrix>& gens, int cap) {
  if (gens.empty()) fail(ErrorKind::Invalid, "invalid generator: empty generator list");
  const int dim = gens.front().dim, p = gens.front().p;
  for (const auto& m : gens) {
    if (m.dim != dim || m.p != p)
      fail(ErrorKind::Invalid, "invalid generator: matrix shapes differ");
    if (!m.is_invertible()) fail(ErrorKind::Invalid, "invalid generator: matrix not invertible");
  }
  auto key = [](const FpMatrix& m) {
    return std::string(reinterpret_cast<const char*>(m.a.data()), m.a.size());
  };
  auto compose = [](const FpMatrix& a, const FpMatrix& b) { return a.mul(b); };
  return build_closure(gens, FpMatrix::identity(dim, p), compose, key, cap);
}

GroupTable GroupTable::direct_product(const GroupTable& g, const GroupTable& h, int cap) {
  const long n = static_cast<long>(g.order()) * h.order();
  if (n > cap) fail(ErrorKind::Cap, "group too large");
  GroupTable r;
  r.n_ = static_cast<int>(n);
  r.mult_.assign(static_cast<size_t>(n) * n, 0);
  r.inv_.assign(n, 0);
  const int m = h.order();
  auto pack = [m](elt a, elt b) { return static_cast<elt>(a * m + b); };
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < m; ++b) {
      elt x = pack(static_cast<elt>(a), static_cast<elt>(b));
      r.inv_[x] = pack(g.inv(static_cast<elt>(a)), h.inv(static_cast<elt>(b)));
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < m; ++d) {
          elt y = pack(static_cast<elt>(c), static_cast<elt>(d));
          r.mult_[static_cast<size_t>(x) * n + y] =
              pack(g.mul(static_cast<elt>(a), static_cast<elt>(c)),
                   h.mul(static_cast<elt>(b), static_cast<elt>(d)));
        }
    }
  for (elt gg : g.generators()) r.gens_.push_back(pack(gg, 0));
  for (elt hh : h.generators()) r.gens_.push_back(pack(0, hh));
  return r;
}

elt GroupTable::power(elt x, long e) const {
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  elt r = 0, b = x;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int GroupTable::element_order(elt x) const {
  int k = 1;
  elt y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (mul(static_cast<elt>(x), static_cast<elt>(y)) !=
          mul(static_cast<elt>(y), static_cast<elt>(x)))
        return false;
  return true;
}

void GroupTable::check_table(unsigned assoc_samples) const {
  for (int x = 0; x < n_; ++x) {
    elt e = static_cast<elt>(x);
    if (mul(0, e) != e || mul(e, 0) != e)
      fail(ErrorKind::Internal, "identity row/column violated");
    if (mul(e, inv(e)) != 0 || mul(inv(e), e) != 0)
      fail(ErrorKind::Internal, "inverse table violated");
  }
  std::vector<char> seen(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) seen[mul(static_cast<elt>(x), static_cast<elt>(y))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n_)
      fail(ErrorKind::Internal, "row is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int y = 0; y < n_; ++y) seen[mul(static_cast<elt>(y), static_cast<elt>(x))] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n_)
      fail(ErrorKind::Internal, "column is not a permutation");
  }
  auto check_assoc = [this](elt x, elt y, elt z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      fail(ErrorKind::Internal, "associativity violated");
  };
  if (n_ <= 64) {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z)
          check_assoc(static_cast<elt>(x), static_cast<elt>(y), static_cast<elt>(z));
  } else {
    std::mt19937 rng(0xa550cu);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (unsigned i = 0; i < assoc_samples; ++i)
      check_assoc(static_cast<elt>(pick(rng)), static_cast<elt>(pick(rng)),
                  static_cast<elt>(pick(rng)));
  }
}

// ------------------------------------------------------------------ Subgroup

Subgroup::Subgroup(const GroupTable& g, std::vector<elt> members)
    : g_(&g), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(g.order(), 0);
  for (elt m : members_) mask_[m] = 1;
  if (members_.empty() || members_.front() != g.identity())
    fail(ErrorKind::Invalid, "subgroup must contain the identity");
}

Subgroup Subgroup::trivial(const GroupTable& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::whole(const GroupTable& g) {
  std::vector<elt> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::closure(const GroupTable& g, std::span<const elt> seed) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<elt> members{g.identity()};
  in[g.identity()] = 1;
  std::vector<elt> gens(seed.begin(), seed.end());
  for (size_t head = 0; head < members.size(); ++head)
    for (elt s : gens) {
      elt nxt = g.mul(members[head], s);
      if (!in[nxt]) {
        in[nxt] = 1;
        members.push_back(nxt);
      }
    }
  return Subgroup(g, std::move(members));
}

Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<elt> seed;
  for (elt x : a.members())
    for (elt y : b.members()) {
      elt c = g.comm(x, y);
      if (!in[c]) {
        in[c] = 1;
        seed.push_back(c);
      }
    }
  return Subgroup::closure(g, seed);
}

CentralSeries lower_central_series(const GroupTable& g) {
  CentralSeries s;
  s.terms.push_back(Subgroup::whole(g));
  while (true) {
    Subgroup next = commutator_subgroup(g, s.terms.back(), s.terms.front());
    if (next == s.terms.back()) {
      // stabilized above the trivial subgroup
      s.nilpotent = next.is_trivial();
      if (s.nilpotent) s.cls = static_cast<int>(s.terms.size()) - 1;
      return s;
    }
    s.terms.push_back(std::move(next));
    if (s.terms.back().is_trivial()) {
      s.nilpotent = true;
      s.cls = static_cast<int>(s.terms.size()) - 1;
      return s;
    }
  }
}

Subgroup power_subgroup(const GroupTable& g, const Subgroup& h, long q) {
  if (q < 1) fail(ErrorKind::Invalid, "power_subgroup: q must be >= 1");
  std::vector<elt> seed;
  seed.reserve(h.size());
  for (elt x : h.members()) seed.push_back(g.power(x, q));
  return Subgroup::closure(g, seed);
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (int x = 0; x < g.order(); ++x)
    for (elt m : h.members())
      if (!h.contains(g.conj(m, static_cast<elt>(x)))) return false;
  return true;
}

Subgroup subgroup_product(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  if (!is_normal(g, a) && !is_normal(g, b))
    fail(ErrorKind::Invalid, "product may not be a subgroup");
  std::vector<std::uint8_t> in(g.order(), 0);
  std::vector<elt> members;
  for (elt x : a.members())
    for (elt y : b.members()) {
      elt z = g.mul(x, y);
      if (!in[z]) {
        in[z] = 1;
        members.push_back(z);
      }
    }
  return Subgroup(g, std::move(members));
}

// -------------------------------------------------------------- AbelianType

long AbelianType::order() const {
  long r = 1;
  for (long f : factors) r *= f;
  return r;
}

std::string AbelianType::str() const {
  if (factors.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(factors[i]);
  }
  return s;
}

bool is_abelian_subgroup(const GroupTable& g, const Subgroup& h) {
  const auto& m = h.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
  return true;
}

namespace {

// Invariant factors of an abelian p-group from the order-counting profile
// c_k = #{h : h^(p^k) = 1}. With m_j = #(cyclic factors of order p^j) and
// e_k = log_p c_k, the profile gives e_k - e_{k-1} = #{j : j >= k}.
std::vector<long> primary_factors(const GroupTable& g, const std::vector<elt>& members,
                                  long p) {
  std::vector<long> e;  // e[k] = log_p c_k
  e.push_back(0);
  long pk = 1;
  const long size = static_cast<long>(members.size());
  while (pk < size) {
    pk *= p;
    long count = 0;
    for (elt h : members)
      if (g.power(h, pk) == g.identity()) ++count;
    long lg = 0, c = count;
    while (c > 1) {
      if (c % p != 0) fail(ErrorKind::Internal, "order profile not a p-power");
      c /= p;
      ++lg;
    }
    e.push_back(lg);
  }
  std::vector<long> factors;
  const int kmax = static_cast<int>(e.size()) - 1;
  for (int k = kmax; k >= 1; --k) {
    long atleast_k = e[k] - e[k - 1];
    long atleast_k1 = (k == kmax) ? 0 : e[k + 1] - e[k];
    long mk = atleast_k - atleast_k1;
    long f = 1;
    for (int i = 0; i < k; ++i) f *= p;
    for (long i = 0; i < mk; ++i) factors.push_back(f);
  }
  return factors;
}

}  // namespace

AbelianType abelian_type(const GroupTable& g, const Subgroup& h) {
  if (!is_abelian_subgroup(g, h)) fail(ErrorKind::Invalid, "nonabelian subgroup");
  AbelianType t;
  if (h.is_trivial()) return t;
  // Split into primary components: for each prime q | |H|, the elements of
  // q-power order form a subgroup of an abelian group.
  long rest = h.size();
  std::vector<long> primes;
  for (long q = 2; q * q <= rest; ++q)
    while (rest % q == 0) {
      if (primes.empty() || primes.back() != q) primes.push_back(q);
      rest /= q;
    }
  if (rest > 1) primes.push_back(rest);

  std::vector<std::vector<long>> per_prime;
  for (long q : primes) {
    std::vector<elt> comp;
    for (elt x : h.members()) {
      int o = g.element_order(x);
      bool qpow = true;
      while (o > 1) {
        if (o % q != 0) { qpow = false; break; }
        o /= static_cast<int>(q);
      }
      if (qpow) comp.push_back(x);
    }
    per_prime.push_back(primary_factors(g, comp, q));
  }
  // Merge primary decompositions into invariant factors (largest first).
  size_t depth = 0;
  for (const auto& v : per_prime) depth = std::max(depth, v.size());
  for (size_t i = 0; i < depth; ++i) {
    long f = 1;
    for (const auto& v : per_prime)
      if (i < v.size()) f *= v[i];
    t.factors.push_back(f);
  }
  return t;
}

bool is_cyclic(const GroupTable& g, const Subgroup& h) {
  for (elt x : h.members())
    if (g.element_order(x) == h.size()) return true;
  return false;
}

long exponent_of(const GroupTable& g, const Subgroup& h) {
  long e = 1;
  for (elt x : h.members()) e = std::lcm(e, static_cast<long>(g.element_order(x)));
  return e;
}

bool is_central(const GroupTable& g, elt x) {
  for (int y = 0; y < g.order(); ++y)
    if (g.mul(x, static_cast<elt>(y)) != g.mul(static_cast<elt>(y), x)) return false;
  return true;
}

Subgroup center(const GroupTable& g) {
  std::vector<elt> m;
  for (int x = 0; x < g.order(); ++x)
    if (is_central(g, static_cast<elt>(x))) m.push_back(static_cast<elt>(x));
  return Subgroup(g, std::move(m));
}

Subgroup omega1(const GroupTable& g, const Subgroup& h) {
  if (!is_abelian_subgroup(g, h))
    fail(ErrorKind::Invalid, "Omega_1 requested for nonabelian subgroup");
  long size = h.size();
  if (size == 1) return Subgroup::trivial(g);
  long p = 2;
  while (size % p != 0) ++p;
  for (long s = size; s > 1; s /= p)
    if (s % p != 0) fail(ErrorKind::Invalid, "Omega_1 requires a p-group");
  std::vector<elt> m;
  for (elt x : h.members())
    if (g.power(x, p) == g.identity()) m.push_back(x);
  return Subgroup(g, std::move(m));
}

}  // namespace lienil
