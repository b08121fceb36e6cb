#pragma once

#include <hwit/matrix.hpp>
#include <hwit/multiquad.hpp>
#include <hwit/quadform.hpp>

#include <memory>
#include <vector>

namespace hwit {

class CliffordAlgebra;
using CliffAlg = std::shared_ptr<const CliffordAlgebra>;

// C(q) (x) L for a rational diagonal form q = <a_1,...,a_n>, n <= 8, over a
// multiquadratic coefficient field L. Basis e_S indexed by subsets of
// {1..n}; relations e_i^2 = a_i, e_i e_j = -e_j e_i.
class CliffordAlgebra {
 public:
  static CliffAlg create(DiagonalForm form, MQField base);

  std::size_t n() const { return form_.rank(); }
  std::size_t dim() const { return std::size_t{1} << n(); }
  const DiagonalForm& form() const { return form_; }
  const MQField& base() const { return base_; }

  // Same form, enlarged coefficient field (prefix extension).
  CliffAlg with_base(MQField bigger) const;
  bool same(const CliffordAlgebra& other) const;

 private:
  CliffordAlgebra(DiagonalForm form, MQField base)
      : form_(std::move(form)), base_(std::move(base)) {}
  DiagonalForm form_;
  MQField base_;
};

class CliffordElement {
 public:
  explicit CliffordElement(CliffAlg alg);  // zero
  static CliffordElement scalar(CliffAlg alg, FieldElement value);
  static CliffordElement basis(CliffAlg alg, unsigned subset);  // e_S
  static CliffordElement from_vector(CliffAlg alg, const std::vector<FieldElement>& coords);

  const CliffAlg& alg() const { return alg_; }
  const FieldElement& coeff(unsigned subset) const { return c_.at(subset); }
  void set_coeff(unsigned subset, FieldElement v) { c_.at(subset) = std::move(v); }

  bool is_zero() const;
  bool is_scalar() const;
  FieldElement scalar_value() const;          // throws if not scalar
  bool is_vector() const;
  std::vector<FieldElement> vector_coords() const;  // throws if not a vector

  CliffordElement operator-() const;
  friend CliffordElement operator+(const CliffordElement&, const CliffordElement&);
  friend CliffordElement operator-(const CliffordElement&, const CliffordElement&);
  friend CliffordElement operator*(const CliffordElement&, const CliffordElement&);
  CliffordElement scaled(const FieldElement& f) const;
  friend bool operator==(const CliffordElement&, const CliffordElement&);

  // Reversal anti-automorphism: identity on vectors, reverses products.
  // Diagonal on the basis: t(e_S) = (-1)^(|S| choose 2) e_S.
  CliffordElement reversal() const;
  CliffordElement even_part() const;
  CliffordElement odd_part() const;

  CliffordElement galois(GaloisElement g) const;  // coefficientwise
  CliffordElement embed(const CliffAlg& bigger) const;

  std::string str() const;

 private:
  CliffAlg alg_;
  std::vector<FieldElement> c_;
};

// Spinor norm form N(x) = x * t(x). Multiplicative on products of vectors
// (for a vector v, N(v) = q(v)); throws when the product fails to be scalar,
// i.e. x was not in the Clifford group's supported constructor range.
FieldElement norm_N(const CliffordElement& x);

// B(u,v) = sum a_i u_i v_i for the diagonal form; bilinear_value(q,v,v) = q(v).
FieldElement bilinear_value(const DiagonalForm& q, const std::vector<FieldElement>& u,
                            const std::vector<FieldElement>& v);

// A homogeneous element of the Clifford group with N(x) = 1, produced by
// the reflection-lift constructors. Sign-normalized: the first nonzero
// coefficient (basis-mask order, then field-subset order) is positive.
class PinElement {
 public:
  PinElement(CliffordElement elt, bool odd);  // validates parity and N = 1

  const CliffordElement& element() const { return elt_; }
  bool odd() const { return odd_; }
  PinElement inverse() const { return PinElement(elt_.reversal(), odd_); }
  PinElement negated() const;  // the other representative of the same isometry

  friend PinElement operator*(const PinElement& a, const PinElement& b) {
    return PinElement(a.elt_ * b.elt_, a.odd_ != b.odd_);
  }

 private:
  CliffordElement elt_;
  bool odd_;
};

// Twisted conjugation r_q(x): v -> eps * x v x^{-1} with eps = +1 for even
// x, -1 for odd x; lands in O(q) with kernel {+-1}.
std::vector<FieldElement> r_q_apply(const PinElement& x, const std::vector<FieldElement>& v);
Mat<FieldElement> r_q_matrix(const PinElement& x);

// Cartan-Dieudonne: reflection vectors w_1,...,w_m (m <= 2n) with
// m = prod of reflections in order, processing columns left to right; to
// move u onto e it reflects in u - e when q(u-e) != 0, else in u + e and
// then in e. Input must be an isometry of q over its field.
std::vector<std::vector<FieldElement>> reflection_decomposition(const DiagonalForm& q,
                                                                const Mat<FieldElement>& m);
Mat<FieldElement> reflection_matrix(const DiagonalForm& q, const std::vector<FieldElement>& w);

struct LiftResult {
  PinElement pin;
  CliffAlg alg;  // algebra over the (possibly enlarged) splitting field
};

// Lift of the reflection in v: v / sqrt(q(v)). Requires q(v) to be a nonzero
// rational scalar; its squarefree part is adjoined to the base field when
// needed. Irrational reflection norms raise UnsupportedSplittingField.
LiftResult lift_reflection(const CliffAlg& alg, const std::vector<FieldElement>& v);

// Pin lift of an isometry via Cartan-Dieudonne; the result satisfies
// r_q(lift) = m exactly and is unique up to the global sign, which the
// canonical normalization fixes.
LiftResult lift_isometry(const CliffAlg& alg, const Mat<FieldElement>& m);

// The graded extension of an isometry t to an algebra automorphism, realized
// through a Pin lift s: x -> s x s^{-1} on even x and x -> det(t) * s x s^{-1}
// on odd x. Restricted to vectors this is t itself.
CliffordElement psi_apply(const PinElement& s, bool improper, const CliffordElement& x);

}  // namespace hwit
