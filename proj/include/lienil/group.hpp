#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lienil/error.hpp"

namespace lienil {

// Element index inside a GroupTable. Tables are capped at 4096 elements,
// so 16 bits are always enough.
using elt = std::uint16_t;

constexpr int kDefaultElementCap = 4096;

/// Permutation of {0,...,d-1}, stored as the image list.
struct Permutation {
  std::vector<int> img;

  int degree() const { return static_cast<int>(img.size()); }
  bool is_valid() const;
  bool is_identity() const;
  static Permutation identity(int d);
  // Right action: (f*g)(x) = g(f(x)), i.e. apply f first.
  Permutation compose(const Permutation& g) const;
};

/// Square matrix over F_p, row-major.
struct FpMatrix {
  int dim = 0;
  int p = 0;
  std::vector<std::uint8_t> a;

  std::uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
  std::uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
  static FpMatrix identity(int dim, int p);
  FpMatrix mul(const FpMatrix& o) const;
  bool is_invertible() const;
  bool is_identity() const;
};

/// A finite group materialized as a full multiplication table.
/// Element 0 is always the identity. Immutable after construction.
class GroupTable {
 public:
  int order() const { return n_; }
  elt identity() const { return 0; }
  elt mul(elt x, elt y) const { return mult_[static_cast<size_t>(x) * n_ + y]; }
  elt inv(elt x) const { return inv_[x]; }

  elt conj(elt x, elt g) const { return mul(mul(inv(g), x), g); }
  // (x,y) = x^-1 y^-1 x y
  elt comm(elt x, elt y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  elt power(elt x, long e) const;
  int element_order(elt x) const;
  bool is_abelian() const;

  // The element indices of the generators the table was built from.
  // Used by the algebra module to close ideals under translation.
  const std::vector<elt>& generators() const { return gens_; }

  static GroupTable from_permutations(const std::vector<Permutation>& gens,
                                      int cap = kDefaultElementCap);
  static GroupTable from_matrices(const std::vector<FpMatrix>& gens,
                                  int cap = kDefaultElementCap);
  static GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                   int cap = kDefaultElementCap);

  // Exhaustive invariant check (identity row/column, inverses, row/column
  // permutations, associativity). Full associativity for n <= 64, sampled
  // above. Throws Error(Internal) on violation.
  void check_table(unsigned assoc_samples = 20000) const;

 private:
  GroupTable() = default;
  int n_ = 0;
  std::vector<elt> mult_;
  std::vector<elt> inv_;
  std::vector<elt> gens_;

  template <class Elem, class ComposeFn, class KeyFn>
  static GroupTable build_closure(const std::vector<Elem>& gens, const Elem& id,
                                  ComposeFn&& compose, KeyFn&& key, int cap);
};

/// Subset of element indices closed under the group operation,
/// tied to a parent GroupTable.
class Subgroup {
 public:
  Subgroup(const GroupTable& g, std::vector<elt> members);

  const GroupTable& parent() const { return *g_; }
  const std::vector<elt>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(elt x) const { return mask_[x] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return size() == g_->order(); }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

  static Subgroup trivial(const GroupTable& g);
  static Subgroup whole(const GroupTable& g);
  /// Smallest subgroup containing the seed set.
  static Subgroup closure(const GroupTable& g, std::span<const elt> seed);

 private:
  const GroupTable* g_;
  std::vector<elt> members_;       // strictly sorted
  std::vector<std::uint8_t> mask_; // length |G| membership mask
};

/// Lower central series G = gamma_1 >= gamma_2 >= ... ; terms end with the
/// first repeated or trivial subgroup.
struct CentralSeries {
  std::vector<Subgroup> terms;
  bool nilpotent = false;
  int cls = -1;  // nilpotency class, valid when nilpotent
};

Subgroup commutator_subgroup(const GroupTable& g, const Subgroup& a, const Subgroup& b);
CentralSeries lower_central_series(const GroupTable& g);
/// <h^q : h in H>
Subgroup power_subgroup(const GroupTable& g, const Subgroup& h, long q);
bool is_normal(const GroupTable& g, const Subgroup& h);
/// AB = {ab}; requires at least one factor normal in G.
Subgroup subgroup_product(const GroupTable& g, const Subgroup& a, const Subgroup& b);

/// Invariant factor decomposition of a finite abelian group, canonical
/// descending order, e.g. C4 x C2 -> {4, 2}.
struct AbelianType {
  std::vector<long> factors;
  bool operator==(const AbelianType&) const = default;
  long order() const;
  std::string str() const;  // "1", "C2", "C4xC2", ...
};

bool is_abelian_subgroup(const GroupTable& g, const Subgroup& h);
AbelianType abelian_type(const GroupTable& g, const Subgroup& h);

bool is_cyclic(const GroupTable& g, const Subgroup& h);
long exponent_of(const GroupTable& g, const Subgroup& h);
bool is_central(const GroupTable& g, elt x);
Subgroup center(const GroupTable& g);
/// Omega_1(H) = {h : h^p = 1} for an abelian p-group H.
Subgroup omega1(const GroupTable& g, const Subgroup& h);

}  // namespace lienil
