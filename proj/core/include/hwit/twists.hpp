#pragma once

#include <hwit/clifford.hpp>
#include <hwit/group_coh.hpp>
#include <hwit/quadform.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hwit {

// Descent datum for a twisted form: a normalized 1-cocycle on Gal(L/Q) =
// (Z/2)^k with values in O(q)(L), indexed by Galois bitmask. Construction
// checks that every value is an exact isometry of q, that c(1) = 1, and the
// cocycle law c(gh) = c(g) * g(c(h)) on all pairs.
class OrthCocycle {
 public:
  OrthCocycle(MQField field, DiagonalForm form, std::vector<Mat<FieldElement>> values);

  const MQField& field() const { return field_; }
  const DiagonalForm& form() const { return form_; }
  std::size_t group_size() const { return values_.size(); }  // 2^k
  const Mat<FieldElement>& value(unsigned mask) const { return values_.at(mask); }
  const Mat<FieldElement>& value(GaloisElement g) const { return values_.at(g.mask); }

 private:
  MQField field_;
  DiagonalForm form_;
  std::vector<Mat<FieldElement>> values_;
};

OrthCocycle trivial_cocycle(DiagonalForm q, MQField field);

// L = Q(sqrt(squarefree_part(d))), c(sigma) = m for the involutive rational
// isometry m of q. Rejects d whose square class is trivial.
OrthCocycle quadratic_cocycle(const DiagonalForm& q, const Int& d, const Mat<Rat>& m);

// The Z/2-torsor Spec Q(sqrt(d)) with the regular permutation representation
// in O(t_2): c(sigma) = coordinate swap.
OrthCocycle regular_rep_cocycle(const Int& d);

// Same cocycle over a larger field (L must be a prefix of bigger): values
// pulled back along the restriction Gal(bigger/Q) ->> Gal(L/Q).
OrthCocycle inflate_cocycle(const OrthCocycle& c, const MQField& bigger);

// The cohomologous cocycle g -> m^{-1} c(g) g(m) for a rational isometry m.
OrthCocycle conjugate_cocycle(const OrthCocycle& c, const Mat<Rat>& m);

// rho: G -> O(q) with exact rational isometry images, identity at index 0.
class OrthogonalRep {
 public:
  OrthogonalRep(Group group, DiagonalForm form, std::vector<Mat<Rat>> images);

  const Group& group() const { return group_; }
  const DiagonalForm& form() const { return form_; }
  const Mat<Rat>& image(unsigned g) const { return images_.at(g); }

 private:
  Group group_;
  DiagonalForm form_;
  std::vector<Mat<Rat>> images_;
};

// A G-torsor presented by a surjection chi: Gal(L/Q) ->> G (chi[mask] is a
// group index), composed with rho. The values are rational, so the cocycle
// law reduces to the homomorphism property.
OrthCocycle rep_to_cocycle(const OrthogonalRep& rho, const MQField& field,
                           const std::vector<unsigned>& chi);

// Galois descent: the Q-form on the fixed space {v in L^n : c(g)g(v) = v}.
// The basis columns certify the L-equivalence with q.
struct TwistResult {
  QuadraticForm form;
  Mat<FieldElement> basis;  // column j = j-th descent basis vector in L^n
};
TwistResult twist_form(const DiagonalForm& q, const OrthCocycle& c);

// Boundary of the determinant map: the square class of the quadratic
// subextension cut out by the character g -> det(c(g)).
SquareClass delta1(const OrthCocycle& c);

// Boundary of the Pin extension 1 -> ±1 -> Pin(q) -> O(q) -> 1: lift every
// c(g) to Pin over a common enlargement of L, read off the ±1-valued
// 2-cocycle z(g,h) = s(g) g(s(h)) s(gh)^{-1}, decompose it in the cup basis
// of the enlarged Galois group and inflate to a Brauer class. The result is
// independent of lift signs and of further unused enlargement.
BrauerClass delta2(const OrthCocycle& c);

struct Delta2Options {
  std::uint64_t flip_lift_signs = 0;    // bit g: negate the lift of mask g
  std::optional<Int> extra_radicand;    // adjoin before lifting
};
BrauerClass delta2_with(const OrthCocycle& c, const Delta2Options& options);

// The squarefree radicands the delta2 pipeline touches: the cocycle field's
// own radicands plus every reflection norm of every value. Sorted, deduped;
// a prime dividing none of them generates a genuinely new extension.
std::vector<Int> delta2_radicands(const OrthCocycle& c);

// Gram matrix Tr(x^i x^j) of Q[x]/(f) for a separable polynomial, via
// Newton's identities. Coefficients leading-first; degree 1..8.
QuadraticForm trace_form(const std::vector<Rat>& coeffs);

// Both comparison identities for a twist q_alpha = twist_form(q, c):
//   i.  w1(q_alpha) = w1(q) + delta1
//   ii. w2(q_alpha) = w2(q) + cup(w1(q), delta1) + delta2
// plus the rearrangement that recomputes delta2 purely from invariants:
//   delta2 = w2(q_alpha) + w2(q) + cup(w1(q), w1(q)) + cup(w1(q), w1(q_alpha)),
// giving a route independent of the Clifford-cocycle pipeline.
struct Cor62Report {
  QuadraticForm twisted;
  Mat<FieldElement> descent_basis;
  SquareClass w1_base, w1_twisted, d1;
  BrauerClass w2_base, w2_twisted, d2;
  bool identity_i = false;
  bool identity_ii = false;
  BrauerClass invariant_route_d2;
  bool two_route_match = false;
};
Cor62Report verify_cor62(const DiagonalForm& q, const OrthCocycle& c);

}  // namespace hwit
