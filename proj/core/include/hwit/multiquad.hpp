#pragma once

#include <hwit/arith.hpp>

#include <memory>
#include <vector>

namespace hwit {

class MultiQuadField;
using MQField = std::shared_ptr<const MultiQuadField>;

// L = Q(sqrt(r_1), ..., sqrt(r_k)) for squarefree, multiplicatively
// independent radicands (no nonempty subset product is a square), k <= 6.
// Negative radicands are fine; the field is the abstract Q-algebra
// Q[x_1,...,x_k]/(x_i^2 - r_i), which independence makes a field of degree
// 2^k. Galois group: (Z/2)^k, bit i flipping the sign of sqrt(r_i).
class MultiQuadField {
 public:
  static MQField rationals();                      // k = 0
  static MQField create(std::vector<Int> radicands);

  std::size_t generator_count() const { return radicands_.size(); }
  std::size_t dim() const { return std::size_t{1} << radicands_.size(); }
  const std::vector<Int>& radicands() const { return radicands_; }

  bool same(const MultiQuadField& other) const { return radicands_ == other.radicands_; }
  // True when other's radicand list starts with ours; the subset-indexed
  // basis then embeds by reading masks low-bits-first.
  bool prefix_of(const MultiQuadField& other) const;

  std::string str() const;  // "Q(sqrt(2),sqrt(-3))"

 private:
  explicit MultiQuadField(std::vector<Int> radicands) : radicands_(std::move(radicands)) {}
  std::vector<Int> radicands_;
};

// An element of the Galois group (Z/2)^k: bit i set means sqrt(r_i) -> -sqrt(r_i).
struct GaloisElement {
  unsigned mask = 0;
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
  GaloisElement compose(GaloisElement other) const { return {mask ^ other.mask}; }
};

// Dense coefficient table over the subset basis: the coefficient at mask T
// multiplies prod_{i in T} sqrt(r_i). Binary operations align fields
// automatically when one side lives in a prefix subfield (in particular any
// rational constant); genuinely incompatible fields throw.
class FieldElement {
 public:
  FieldElement() : FieldElement(Rat(0)) {}
  FieldElement(long v) : FieldElement(Rat(v)) {}  // NOLINT: deliberate promotion
  explicit FieldElement(Rat v);
  FieldElement(MQField field, Rat rational_value);
  static FieldElement monomial(MQField field, unsigned subset, Rat coeff);
  static FieldElement sqrt_generator(const MQField& field, std::size_t i);

  const MQField& field() const { return field_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(unsigned subset) const { return c_.at(subset); }

  bool is_zero() const;
  bool is_rational() const;
  Rat as_rational() const;  // throws if irrational

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // Norm-cofactor inverse: multiply the conjugates in over each generator in
  // turn; the full product is the rational norm, the partial product the
  // cofactor, and x^{-1} = cofactor / norm.
  FieldElement inverse() const;

  FieldElement galois(GaloisElement g) const;
  FieldElement embed(const MQField& bigger) const;

  std::string str() const;

 private:
  FieldElement(MQField field, std::vector<Rat> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {}
  MQField field_;
  std::vector<Rat> c_;
};

struct AdjoinResult {
  MQField field;
  FieldElement sqrt_witness;  // witness^2 == d inside field
  bool enlarged = false;
};

// Adjoin sqrt(d) for a nonzero integer d (squarefree or not). When d's
// square class is already generated by a subset of the radicands the field
// is returned unchanged together with the explicit square root; otherwise
// the squarefree part is appended as a new radicand (k <= 6 enforced via
// UnsupportedSplittingField).
AdjoinResult adjoin(const MQField& field, const Int& d);

}  // namespace hwit
