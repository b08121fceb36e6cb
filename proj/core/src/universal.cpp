#include <hwit/universal.hpp>

#include <stdexcept>

namespace hwit {

UniversalElement UniversalElement::one() {
  UniversalElement e;
  e.c0 = true;
  return e;
}

UniversalElement UniversalElement::base1(SquareClass a) {
  UniversalElement e;
  e.c1_a = std::move(a);
  return e;
}

UniversalElement UniversalElement::base2(BrauerClass b) {
  UniversalElement e;
  e.c2_a = std::move(b);
  return e;
}

UniversalElement UniversalElement::hw1() {
  UniversalElement e;
  e.c1_hw1 = true;
  return e;
}

UniversalElement UniversalElement::hw2() {
  UniversalElement e;
  e.c2_hw2 = true;
  return e;
}

bool UniversalElement::is_zero() const { return *this == UniversalElement{}; }

UniversalElement operator+(const UniversalElement& x, const UniversalElement& y) {
  UniversalElement e;
  e.c0 = x.c0 != y.c0;
  e.c1_a = x.c1_a * y.c1_a;
  e.c1_hw1 = x.c1_hw1 != y.c1_hw1;
  e.c2_a = x.c2_a + y.c2_a;
  e.c2_mix = x.c2_mix * y.c2_mix;
  e.c2_hw1sq = x.c2_hw1sq != y.c2_hw1sq;
  e.c2_hw2 = x.c2_hw2 != y.c2_hw2;
  return e;
}

UniversalElement operator*(const UniversalElement& x, const UniversalElement& y) {
  UniversalElement e;
  e.c0 = x.c0 && y.c0;
  // degree 0 * degree 1
  if (x.c0) {
    e.c1_a = y.c1_a;
    e.c1_hw1 = y.c1_hw1;
  }
  if (y.c0) {
    e.c1_a = e.c1_a * x.c1_a;
    e.c1_hw1 = e.c1_hw1 != x.c1_hw1;
  }
  // degree 0 * degree 2
  UniversalElement d2;
  if (x.c0) {
    d2.c2_a = d2.c2_a + y.c2_a;
    d2.c2_mix = d2.c2_mix * y.c2_mix;
    d2.c2_hw1sq = d2.c2_hw1sq != y.c2_hw1sq;
    d2.c2_hw2 = d2.c2_hw2 != y.c2_hw2;
  }
  if (y.c0) {
    d2.c2_a = d2.c2_a + x.c2_a;
    d2.c2_mix = d2.c2_mix * x.c2_mix;
    d2.c2_hw1sq = d2.c2_hw1sq != x.c2_hw1sq;
    d2.c2_hw2 = d2.c2_hw2 != x.c2_hw2;
  }
  // degree 1 * degree 1:
  //   (a + s*HW1)(b + t*HW1) = a∪b + (t·a + s·b)·HW1 + st·HW1^2
  d2.c2_a = d2.c2_a + cup(x.c1_a, y.c1_a);
  SquareClass mix;
  if (y.c1_hw1) mix = mix * x.c1_a;
  if (x.c1_hw1) mix = mix * y.c1_a;
  d2.c2_mix = d2.c2_mix * mix;
  d2.c2_hw1sq = d2.c2_hw1sq != (x.c1_hw1 && y.c1_hw1);
  e.c2_a = d2.c2_a;
  e.c2_mix = d2.c2_mix;
  e.c2_hw1sq = d2.c2_hw1sq;
  e.c2_hw2 = d2.c2_hw2;
  return e;
}

std::string UniversalElement::str() const {
  std::string out;
  auto add = [&out](const std::string& term) {
    if (!out.empty()) out += " + ";
    out += term;
  };
  if (c0) add("1");
  if (!c1_a.is_trivial()) add(c1_a.str());
  if (c1_hw1) add("HW1");
  if (!c2_a.is_zero()) add(c2_a.str());
  if (!c2_mix.is_trivial()) add(c2_mix.str() + "·HW1");
  if (c2_hw1sq) add("HW1^2");
  if (c2_hw2) add("HW2");
  return out.empty() ? "0" : out;
}

TruncatedUnit::TruncatedUnit() : e_(UniversalElement::one()) {}

TruncatedUnit::TruncatedUnit(UniversalElement e) : e_(std::move(e)) {
  if (!e_.c0) throw std::domain_error("truncated unit needs leading coefficient 1");
}

TruncatedUnit operator*(const TruncatedUnit& u, const TruncatedUnit& v) {
  return TruncatedUnit(u.e_ * v.e_);
}

TruncatedUnit TruncatedUnit::inverse() const {
  // (1+a1+a2)^{-1} = 1 + a1 + (a2 + a1∪a1): check (1+a1+a2)(1+a1+a2+a1∪a1)
  // = 1 + 0 + (a1∪a1 + a1∪a1) = 1.
  UniversalElement a1;
  a1.c1_a = e_.c1_a;
  a1.c1_hw1 = e_.c1_hw1;
  return TruncatedUnit(e_ + a1 * a1);
}

std::string TruncatedUnit::str() const { return e_.str(); }

UniversalElement det_class(const SquareClass& w1q) {
  UniversalElement e = UniversalElement::base1(w1q);
  e.c1_hw1 = true;
  return e;
}

UniversalElement cq_class(const SquareClass& w1q, const BrauerClass& w2q) {
  UniversalElement e;
  e.c2_a = cup(w1q, w1q) + w2q;
  e.c2_mix = w1q;
  e.c2_hw2 = true;
  return e;
}

TruncatedUnit s_q_unit(const SquareClass& w1q, const BrauerClass& w2q) {
  return TruncatedUnit(UniversalElement::one() + det_class(w1q) + cq_class(w1q, w2q));
}

bool check_sq_identity(const SquareClass& w1q, const BrauerClass& w2q) {
  const TruncatedUnit tq(UniversalElement::one() + UniversalElement::hw1() +
                         UniversalElement::hw2());
  const TruncatedUnit theta(UniversalElement::one() + UniversalElement::base1(w1q) +
                            UniversalElement::base2(w2q));
  return s_q_unit(w1q, w2q) == tq * theta.inverse();
}

Specialization specialize(const UniversalElement& e, const SquareClass& w1a,
                          const BrauerClass& w2a) {
  Specialization out;
  out.deg0 = e.c0;
  out.deg1 = e.c1_a;
  if (e.c1_hw1) out.deg1 = out.deg1 * w1a;
  out.deg2 = e.c2_a + cup(e.c2_mix, w1a);
  if (e.c2_hw1sq) out.deg2 = out.deg2 + cup(w1a, w1a);
  if (e.c2_hw2) out.deg2 = out.deg2 + w2a;
  return out;
}

}  // namespace hwit
