#pragma once

#include <hwit/galois_coh.hpp>

namespace hwit {

// An element of the degree <= 2 truncation of the universal ring
// A[HW1, HW2, ...] over the base A = (F2, square classes, Brauer classes):
//   c0 + (c1_a + c1_hw1*HW1) + (c2_a + c2_mix*HW1 + c2_hw1sq*HW1^2 + c2_hw2*HW2).
// Components add independently (the degree-2 part is a free module over the
// listed monomials); products truncate above degree 2.
struct UniversalElement {
  bool c0 = false;
  SquareClass c1_a;
  bool c1_hw1 = false;
  BrauerClass c2_a;
  SquareClass c2_mix;  // coefficient of HW1
  bool c2_hw1sq = false;
  bool c2_hw2 = false;

  static UniversalElement one();
  static UniversalElement base1(SquareClass a);
  static UniversalElement base2(BrauerClass b);
  static UniversalElement hw1();
  static UniversalElement hw2();

  bool is_zero() const;
  friend bool operator==(const UniversalElement&, const UniversalElement&) = default;
  friend UniversalElement operator+(const UniversalElement& x, const UniversalElement& y);
  friend UniversalElement operator*(const UniversalElement& x, const UniversalElement& y);

  std::string str() const;  // e.g. "⟨3⟩ + HW1", "{2,3} + ⟨3⟩·HW1 + HW2"
};

// A unit 1 + a1 + a2 of the truncated ring under the group law
// (1+a1+a2)(1+b1+b2) = 1 + (a1+b1) + (a2+b2+a1∪b1).
class TruncatedUnit {
 public:
  TruncatedUnit();  // the identity 1
  explicit TruncatedUnit(UniversalElement e);  // requires c0 = 1

  const UniversalElement& element() const { return e_; }
  friend TruncatedUnit operator*(const TruncatedUnit& u, const TruncatedUnit& v);
  TruncatedUnit inverse() const;  // 1 + a1 + (a2 + a1∪a1)
  friend bool operator==(const TruncatedUnit&, const TruncatedUnit&) = default;

  std::string str() const;

 private:
  UniversalElement e_;
};

// det[q] = w1(q) + HW1 and [C_q] = (w1(q)∪w1(q) + w2(q)) + w1(q)·HW1 + HW2:
// the degree-1 and degree-2 components classifying the determinant and
// Clifford extensions of the twisted orthogonal group.
UniversalElement det_class(const SquareClass& w1q);
UniversalElement cq_class(const SquareClass& w1q, const BrauerClass& w2q);

// s_q = 1 + det[q] + [C_q].
TruncatedUnit s_q_unit(const SquareClass& w1q, const BrauerClass& w2q);

// The comparison identity s_q = (1 + HW1 + HW2) * (1 + w1(q) + w2(q))^{-1},
// expanded in the truncated unit group.
bool check_sq_identity(const SquareClass& w1q, const BrauerClass& w2q);

// Substitution HW1 -> w1a, HW2 -> w2a, HW1^2 -> cup(w1a, w1a): the pullback
// of a universal class along a concrete twist with those invariants.
struct Specialization {
  bool deg0 = false;
  SquareClass deg1;
  BrauerClass deg2;
  friend bool operator==(const Specialization&, const Specialization&) = default;
};
Specialization specialize(const UniversalElement& e, const SquareClass& w1a,
                          const BrauerClass& w2a);

}  // namespace hwit
