#pragma once

#include <hwit/galois_coh.hpp>

#include <cstdint>
#include <memory>
#include <vector>

namespace hwit {

class FiniteGroup;
using Group = std::shared_ptr<const FiniteGroup>;

// A finite group of order <= 64 given by an explicit multiplication table
// over element indices 0..n-1, with the identity at index 0. Group axioms
// are checked at construction.
class FiniteGroup {
 public:
  static Group from_table(std::vector<std::vector<unsigned>> table);
  static Group trivial();
  static Group cyclic(unsigned n);
  static Group elementary_abelian(unsigned k);  // (Z/2)^k, element = bitmask, mul = xor
  static Group dihedral(unsigned n);            // order 2n: indices r^i s^e -> e*n + i
  static Group direct_product(const Group& a, const Group& b);

  std::size_t order() const { return table_.size(); }
  unsigned mul(unsigned a, unsigned b) const { return table_.at(a).at(b); }
  unsigned inverse(unsigned a) const { return inv_.at(a); }
  bool same(const FiniteGroup& other) const { return table_ == other.table_; }
  static constexpr unsigned kIdentity = 0;

  // True when the element indices themselves form (Z/2)^k under xor; the
  // generator choice for cocycle decomposition is then bit i -> index 1<<i.
  bool xor_indexed() const { return xor_indexed_; }
  unsigned log2_order() const;  // requires xor_indexed

 private:
  explicit FiniteGroup(std::vector<std::vector<unsigned>> table);
  std::vector<std::vector<unsigned>> table_;
  std::vector<unsigned> inv_;
  bool xor_indexed_ = false;
};

// Normalized bar cochain G^n -> F2 for n in {0,1,2} (trivial coefficients):
// the value is 0 whenever any argument is the identity. Values are stored
// densely over the full domain.
class F2Cochain {
 public:
  F2Cochain(Group g, unsigned degree);  // zero cochain
  static F2Cochain from_values(Group g, unsigned degree, std::vector<std::uint8_t> values);
  // Builds a normalized degree-2 cochain from raw values by the constant
  // coboundary shift z |-> z + z(1,1); for a raw 2-cocycle this lands in the
  // same class. Degrees 0 and 1 are passed through (degree-1 raw values must
  // already vanish at the identity).
  static F2Cochain normalized_from_raw(Group g, unsigned degree,
                                       std::vector<std::uint8_t> values);

  const Group& group() const { return group_; }
  unsigned degree() const { return degree_; }
  int constant() const;                            // degree 0
  int operator()(unsigned g) const;                // degree 1
  int operator()(unsigned g, unsigned h) const;    // degree 2
  void set(unsigned g, int v);
  void set(unsigned g, unsigned h, int v);

  bool is_zero() const;
  friend F2Cochain operator+(const F2Cochain& a, const F2Cochain& b);
  friend bool operator==(const F2Cochain& a, const F2Cochain& b);

 private:
  void check_normalized() const;
  Group group_;
  unsigned degree_;
  std::vector<std::uint8_t> v_;
};

// Bar differential: (d0 f)(g) = 0 for trivial coefficients;
// (d1 f)(g,h) = f(g) + f(h) + f(gh). Degree-2 input is rejected.
F2Cochain coboundary(const F2Cochain& f);

// Degree 1: f(gh) = f(g) + f(h); degree 2: the standard 2-cocycle condition
// z(h,k) + z(gh,k) + z(g,hk) + z(g,h) = 0.
bool is_cocycle(const F2Cochain& f);

// dim H^n(G, F2) for n <= 2 by exact F2 linear algebra on the normalized
// bar complex.
std::size_t cohomology_dim(const Group& g, unsigned n);

// z = sum of lambda_ij * beta_ij + d(witness), with beta_ij(g,h) =
// x_i(g) x_j(h) for the coordinate characters x_i of an xor-indexed
// (Z/2)^k; the lambda are unique.
struct CupDecomposition {
  unsigned k = 0;
  std::vector<std::uint8_t> lambda_upper;  // (i,j), i <= j, row-major
  F2Cochain witness;

  int lambda(unsigned i, unsigned j) const;
};

CupDecomposition decompose_cocycle(const F2Cochain& z);

// beta_ij on the xor-indexed (Z/2)^k (i <= j < k).
F2Cochain cup_basis_cochain(const Group& g, unsigned i, unsigned j);

// sum over lambda_ij = 1 of cup((r_i), (r_j)).
BrauerClass inflate_to_brauer(const CupDecomposition& dec, const std::vector<Int>& radicands);

}  // namespace hwit
