#include <hwit/errors.hpp>
#include <hwit/galois_coh.hpp>
#include <hwit/multiquad.hpp>

#include <bit>

namespace hwit {

MQField MultiQuadField::rationals() {
  static const MQField q(new MultiQuadField({}));
  return q;
}

MQField MultiQuadField::create(std::vector<Int> radicands) {
  if (radicands.size() > 6)
    throw UnsupportedSplittingField("multiquadratic field capped at six radicands");
  for (const Int& r : radicands) {
    if (r == 0 || r == 1) throw std::domain_error("radicand must be a nonzero nonsquare");
    if (squarefree_part(r) != r)
      throw std::domain_error("radicand " + r.str() + " is not squarefree");
  }
  // Multiplicative independence: no nonempty subset multiplies to a square.
  const std::size_t n = radicands.size();
  std::vector<SquareClass> cls(std::size_t{1} << n);
  for (unsigned t = 1; t < (1u << n); ++t) {
    unsigned low = t & (~t + 1u);
    cls[t] = cls[t ^ low] * SquareClass(radicands[std::countr_zero(low)]);
    if (cls[t].is_trivial())
      throw std::domain_error("radicands are multiplicatively dependent");
  }
  return MQField(new MultiQuadField(std::move(radicands)));
}

bool MultiQuadField::prefix_of(const MultiQuadField& other) const {
  if (radicands_.size() > other.radicands_.size()) return false;
  return std::equal(radicands_.begin(), radicands_.end(), other.radicands_.begin());
}

std::string MultiQuadField::str() const {
  if (radicands_.empty()) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < radicands_.size(); ++i) {
    if (i) s += ",";
    s += "sqrt(" + radicands_[i].str() + ")";
  }
  return s + ")";
}

FieldElement::FieldElement(Rat v) : field_(MultiQuadField::rationals()), c_{std::move(v)} {}

FieldElement::FieldElement(MQField field, Rat rational_value)
    : field_(std::move(field)), c_(field_->dim()) {
  c_[0] = std::move(rational_value);
}

FieldElement FieldElement::monomial(MQField field, unsigned subset, Rat coeff) {
  if (subset >= field->dim()) throw std::domain_error("monomial subset out of range");
  std::vector<Rat> c(field->dim());
  c[subset] = std::move(coeff);
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::sqrt_generator(const MQField& field, std::size_t i) {
  if (i >= field->generator_count()) throw std::domain_error("generator index out of range");
  return monomial(field, 1u << i, Rat(1));
}

bool FieldElement::is_zero() const {
  for (const Rat& x : c_)
    if (x != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t t = 1; t < c_.size(); ++t)
    if (c_[t] != 0) return false;
  return true;
}

Rat FieldElement::as_rational() const {
  if (!is_rational()) throw std::domain_error("field element is irrational: " + str());
  return c_[0];
}

FieldElement FieldElement::embed(const MQField& bigger) const {
  if (field_->same(*bigger)) return *this;
  if (!field_->prefix_of(*bigger))
    throw std::invalid_argument("embed: " + field_->str() + " is not a prefix subfield of " +
                                bigger->str());
  std::vector<Rat> c(bigger->dim());
  for (std::size_t t = 0; t < c_.size(); ++t) c[t] = c_[t];
  return FieldElement(bigger, std::move(c));
}

namespace {

std::pair<FieldElement, FieldElement> aligned(const FieldElement& a, const FieldElement& b) {
  if (a.field()->same(*b.field())) return {a, b};
  if (a.field()->prefix_of(*b.field())) return {a.embed(b.field()), b};
  if (b.field()->prefix_of(*a.field())) return {a, b.embed(a.field())};
  throw std::invalid_argument("field elements live in incompatible fields: " +
                              a.field()->str() + " vs " + b.field()->str());
}

}  // namespace

FieldElement FieldElement::operator-() const {
  std::vector<Rat> c(c_);
  for (Rat& x : c) x = -x;
  return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rat> c(x.c_);
  for (std::size_t t = 0; t < c.size(); ++t) c[t] += y.c_[t];
  return FieldElement(x.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rat> c(x.c_);
  for (std::size_t t = 0; t < c.size(); ++t) c[t] -= y.c_[t];
  return FieldElement(x.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = aligned(a, b);
  const auto& rad = x.field_->radicands();
  std::vector<Rat> c(x.field_->dim());
  for (unsigned s = 0; s < c.size(); ++s) {
    if (x.c_[s] == 0) continue;
    for (unsigned t = 0; t < c.size(); ++t) {
      if (y.c_[t] == 0) continue;
      // e_S * e_T = (prod_{i in S&T} r_i) e_{S^T}: each shared sqrt squares away.
      Rat term = x.c_[s] * y.c_[t];
      unsigned shared = s & t;
      while (shared) {
        unsigned low = shared & (~shared + 1u);
        term *= Rat(rad[std::countr_zero(low)]);
        shared ^= low;
      }
      c[s ^ t] += term;
    }
  }
  return FieldElement(x.field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  FieldElement cof(field_, Rat(1));
  FieldElement z = *this;
  for (std::size_t i = 0; i < field_->generator_count(); ++i) {
    FieldElement zc = z.galois(GaloisElement{1u << i});
    cof = cof * zc;
    z = z * zc;
  }
  // z is now the full norm, a nonzero rational since L is a field.
  Rat n = z.as_rational();
  std::vector<Rat> c(cof.c_);
  for (Rat& v : c) v /= n;
  return FieldElement(field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = aligned(a, b);
  return x * y.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  auto [x, y] = aligned(a, b);
  return x.c_ == y.c_;
}

FieldElement FieldElement::galois(GaloisElement g) const {
  std::vector<Rat> c(c_);
  for (unsigned t = 0; t < c.size(); ++t)
    if (std::popcount(t & g.mask) & 1) c[t] = -c[t];
  return FieldElement(field_, std::move(c));
}

std::string FieldElement::str() const {
  std::string s;
  for (unsigned t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c_[t]) + ")";
    unsigned rem = t;
    while (rem) {
      unsigned low = rem & (~rem + 1u);
      s += "*sqrt(" + field_->radicands()[std::countr_zero(low)].str() + ")";
      rem ^= low;
    }
  }
  return s.empty() ? "0" : s;
}

AdjoinResult adjoin(const MQField& field, const Int& d) {
  if (d == 0) throw std::domain_error("adjoin: radicand must be nonzero");
  const Int ds = squarefree_part(d);
  const Rat square_scale = Rat(d) / Rat(ds);  // positive rational square
  const Rat t = sqrt_exact(square_scale);

  // Representable already? Find the subset of radicands with the same
  // square class as ds.
  const auto& rad = field->radicands();
  for (unsigned subset = 0; subset < field->dim(); ++subset) {
    Int prod(1);
    for (std::size_t i = 0; i < rad.size(); ++i)
      if (subset & (1u << i)) prod *= rad[i];
    if (squarefree_part(Rat(prod) * Rat(ds)) != 1) continue;
    // ds * prod = g^2 exactly, so sqrt(ds) = (g / prod) * e_subset.
    Int g = sqrt_exact(Int(ds * prod));
    // Divide rather than Rat(g, prod): prod may be negative, and the two-arg
    // rational constructor rejects negative denominators for cpp_int.
    return AdjoinResult{field, FieldElement::monomial(field, subset, t * Rat(g) / Rat(prod)),
                        false};
  }

  if (field->generator_count() >= 6)
    throw UnsupportedSplittingField("adjoining sqrt(" + d.str() +
                                    ") would exceed six radicands");
  std::vector<Int> bigger = rad;
  bigger.push_back(ds);
  MQField f = MultiQuadField::create(std::move(bigger));
  return AdjoinResult{
      f, FieldElement::monomial(f, 1u << (f->generator_count() - 1), t), true};
}

}  // namespace hwit
