#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lienil/dimension.hpp"
#include "lienil/group.hpp"

namespace lienil {

/// Element of F_p[G] as a length-|G| coefficient vector, entries in [0, p).
struct AlgebraVec {
  int p = 0;
  std::vector<std::uint8_t> c;

  AlgebraVec() = default;
  AlgebraVec(int p_, int n) : p(p_), c(n, 0) {}
  static AlgebraVec basis(int p, int n, elt g);
  bool is_zero() const;
  bool operator==(const AlgebraVec&) const = default;
  AlgebraVec& add(const AlgebraVec& o);
  AlgebraVec& sub(const AlgebraVec& o);
  AlgebraVec& scale(int k);
};

/// Convolution over the group table: (ab)_g = sum_{xy=g} a_x b_y.
AlgebraVec multiply(const GroupTable& g, const AlgebraVec& a, const AlgebraVec& b);
/// [a,b] = ab - ba.
AlgebraVec lie_bracket(const GroupTable& g, const AlgebraVec& a, const AlgebraVec& b);

/// Row-reduced basis of a subspace of F_p[G]. Rows are kept in reduced
/// echelon form with strictly increasing pivots, so equal subspaces have
/// identical rows and membership testing is deterministic reduction.
/// GF(2) rows are bit-packed with word-level XOR reduction.
class Subspace {
 public:
  Subspace(int p, int n);

  int p() const { return p_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(pivots_.size()); }
  bool is_zero() const { return pivots_.empty(); }

  /// Reduce v against the basis and adjoin the remainder if nonzero.
  /// Returns true if the dimension grew.
  bool insert(std::span<const std::uint8_t> v);
  bool contains(std::span<const std::uint8_t> v) const;
  void row(int i, std::span<std::uint8_t> out) const;
  bool is_subspace_of(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

 private:
  int p_, n_, words_;
  std::vector<int> pivots_;
  std::vector<std::vector<std::uint64_t>> bits_;  // p == 2
  std::vector<std::vector<std::uint8_t>> rows_;   // p > 2
  std::array<std::uint8_t, 256> modtab_{};
  std::array<std::uint8_t, 16> invtab_{};
};

/// Smallest subspace containing `span` and closed under multiplication by
/// group elements on both sides. Translation by the table's generators
/// reaches the same fixpoint as translation by every element.
Subspace ideal_closure(const GroupTable& g, int p, const std::vector<AlgebraVec>& span);

/// One Lie power chain: dims of the k-th powers for k = 2, 3, ... and the
/// first k where the power vanishes.
struct LieChain {
  std::vector<int> dims;        // dims[i] = dim of the (i+2)-nd power
  long t = -1;                  // first k with vanishing k-th power
  std::vector<Subspace> powers; // powers[i] = the (i+2)-nd power as an ideal
};

/// R^[k]: ideals generated by left-normed brackets of weight k.
LieChain lower_lie_chain(const GroupTable& g, int p, int max_dim, long iter_cap);
/// R^(k): ideal generated by brackets of R^(k-1) with R.
LieChain upper_lie_chain(const GroupTable& g, int p, int max_dim, long iter_cap);

/// D_(m) = {g : g - 1 lies in R^(m)}, read off an upper chain.
DimensionSeries dimension_subgroups_direct(const GroupTable& g, int p,
                                           const LieChain& upper);

/// Nilpotency class of U(KG) for a 2-group G over F_2, by enumerating
/// U = 1 + aug(KG) and running the lower central series on it.
int unit_group_class(const GroupTable& g, int p, unsigned long long size_cap);

}  // namespace lienil
