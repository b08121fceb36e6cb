#include <hwit/clifford.hpp>
#include <hwit/errors.hpp>

#include <bit>

namespace hwit {

namespace {

// Transpositions needed to sort the concatenation of two ascending subsets:
// pairs (i in S, j in T) with i > j.
int transposition_parity(unsigned s, unsigned t) {
  int count = 0;
  for (unsigned rem = t; rem;) {
    unsigned low = rem & (~rem + 1u);
    count += std::popcount(s & ~((low << 1) - 1u));
    rem ^= low;
  }
  return count & 1;
}

FieldElement rat_in(const MQField& f, Rat v) { return FieldElement(f, std::move(v)); }

}  // namespace

CliffAlg CliffordAlgebra::create(DiagonalForm form, MQField base) {
  if (form.rank() > 8) throw std::domain_error("Clifford algebra capped at rank 8");
  return CliffAlg(new CliffordAlgebra(std::move(form), std::move(base)));
}

CliffAlg CliffordAlgebra::with_base(MQField bigger) const {
  if (!base_->prefix_of(*bigger))
    throw std::invalid_argument("with_base: not a prefix field extension");
  return create(form_, std::move(bigger));
}

bool CliffordAlgebra::same(const CliffordAlgebra& other) const {
  return form_ == other.form_ && base_->same(*other.base_);
}

CliffordElement::CliffordElement(CliffAlg alg) : alg_(std::move(alg)) {
  c_.assign(alg_->dim(), FieldElement(alg_->base(), Rat(0)));
}

CliffordElement CliffordElement::scalar(CliffAlg alg, FieldElement value) {
  CliffordElement x(std::move(alg));
  x.c_[0] = value.embed(x.alg_->base());
  return x;
}

CliffordElement CliffordElement::basis(CliffAlg alg, unsigned subset) {
  CliffordElement x(std::move(alg));
  if (subset >= x.alg_->dim()) throw std::domain_error("basis subset out of range");
  x.c_[subset] = rat_in(x.alg_->base(), Rat(1));
  return x;
}

CliffordElement CliffordElement::from_vector(CliffAlg alg,
                                             const std::vector<FieldElement>& coords) {
  CliffordElement x(std::move(alg));
  if (coords.size() != x.alg_->n())
    throw std::invalid_argument("from_vector: coordinate count != rank");
  for (std::size_t i = 0; i < coords.size(); ++i)
    x.c_[1u << i] = coords[i].embed(x.alg_->base());
  return x;
}

bool CliffordElement::is_zero() const {
  for (const FieldElement& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

bool CliffordElement::is_scalar() const {
  for (std::size_t s = 1; s < c_.size(); ++s)
    if (!c_[s].is_zero()) return false;
  return true;
}

FieldElement CliffordElement::scalar_value() const {
  if (!is_scalar()) throw std::domain_error("Clifford element is not scalar: " + str());
  return c_[0];
}

bool CliffordElement::is_vector() const {
  for (unsigned s = 0; s < c_.size(); ++s)
    if (std::popcount(s) != 1 && !c_[s].is_zero()) return false;
  return true;
}

std::vector<FieldElement> CliffordElement::vector_coords() const {
  if (!is_vector()) throw std::domain_error("Clifford element is not a vector: " + str());
  std::vector<FieldElement> v;
  v.reserve(alg_->n());
  for (std::size_t i = 0; i < alg_->n(); ++i) v.push_back(c_[1u << i]);
  return v;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement x = *this;
  for (FieldElement& f : x.c_) f = -f;
  return x;
}

namespace {

void require_same_alg(const CliffordElement& a, const CliffordElement& b) {
  if (!a.alg()->same(*b.alg()))
    throw std::invalid_argument("Clifford elements from different algebras");
}

}  // namespace

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  require_same_alg(a, b);
  CliffordElement x = a;
  for (unsigned s = 0; s < x.alg()->dim(); ++s)
    x.c_[s] = x.c_[s] + b.c_[s];
  return x;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  require_same_alg(a, b);
  CliffordElement x = a;
  for (unsigned s = 0; s < x.alg()->dim(); ++s)
    x.c_[s] = x.c_[s] - b.c_[s];
  return x;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  require_same_alg(a, b);
  const auto& entries = a.alg()->form().entries();
  CliffordElement x(a.alg());
  const unsigned dim = static_cast<unsigned>(a.alg()->dim());
  for (unsigned s = 0; s < dim; ++s) {
    if (a.c_[s].is_zero()) continue;
    for (unsigned t = 0; t < dim; ++t) {
      if (b.c_[t].is_zero()) continue;
      Rat factor(transposition_parity(s, t) ? -1 : 1);
      for (unsigned shared = s & t; shared;) {
        unsigned low = shared & (~shared + 1u);
        factor *= entries[std::countr_zero(low)];
        shared ^= low;
      }
      const unsigned target = s ^ t;
      x.c_[target] = x.c_[target] + a.c_[s] * b.c_[t] * rat_in(a.alg()->base(), factor);
    }
  }
  return x;
}

CliffordElement CliffordElement::scaled(const FieldElement& f) const {
  if (!f.field()->same(*alg_->base()) && !f.field()->prefix_of(*alg_->base()))
    throw std::invalid_argument("scaled: scalar field exceeds algebra base");
  CliffordElement x = *this;
  for (FieldElement& c : x.c_) c = c * f;
  return x;
}

bool operator==(const CliffordElement& a, const CliffordElement& b) {
  require_same_alg(a, b);
  return a.c_ == b.c_;
}

CliffordElement CliffordElement::reversal() const {
  CliffordElement x = *this;
  for (unsigned s = 0; s < c_.size(); ++s) {
    int m = std::popcount(s);
    if ((m * (m - 1) / 2) & 1) x.c_[s] = -x.c_[s];
  }
  return x;
}

CliffordElement CliffordElement::even_part() const {
  CliffordElement x = *this;
  for (unsigned s = 0; s < c_.size(); ++s)
    if (std::popcount(s) & 1) x.c_[s] = FieldElement(alg_->base(), Rat(0));
  return x;
}

CliffordElement CliffordElement::odd_part() const {
  CliffordElement x = *this;
  for (unsigned s = 0; s < c_.size(); ++s)
    if (!(std::popcount(s) & 1)) x.c_[s] = FieldElement(alg_->base(), Rat(0));
  return x;
}

CliffordElement CliffordElement::galois(GaloisElement g) const {
  CliffordElement x = *this;
  for (FieldElement& f : x.c_) f = f.galois(g);
  return x;
}

CliffordElement CliffordElement::embed(const CliffAlg& bigger) const {
  if (!(alg_->form() == bigger->form()))
    throw std::invalid_argument("embed: Clifford algebras over different forms");
  CliffordElement x(bigger);
  for (unsigned s = 0; s < c_.size(); ++s) x.c_[s] = c_[s].embed(bigger->base());
  return x;
}

std::string CliffordElement::str() const {
  std::string out;
  for (unsigned s = 0; s < c_.size(); ++s) {
    if (c_[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + c_[s].str() + "]";
    for (unsigned rem = s; rem;) {
      unsigned low = rem & (~rem + 1u);
      out += "e" + std::to_string(std::countr_zero(low) + 1);
      rem ^= low;
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement norm_N(const CliffordElement& x) {
  return (x * x.reversal()).scalar_value();
}

PinElement::PinElement(CliffordElement elt, bool odd) : elt_(std::move(elt)), odd_(odd) {
  if (!(odd_ ? elt_.even_part() : elt_.odd_part()).is_zero())
    throw std::domain_error("PinElement: element is not parity-homogeneous");
  if (!(norm_N(elt_) == FieldElement(Rat(1))))
    throw std::domain_error("PinElement: spinor norm is not 1");
}

PinElement PinElement::negated() const { return PinElement(-elt_, odd_); }

namespace {

// Fixes the global sign: first nonzero coefficient (basis mask order, then
// field subset order) made positive.
PinElement canonical_sign(PinElement x) {
  for (unsigned s = 0; s < x.element().alg()->dim(); ++s) {
    const FieldElement& f = x.element().coeff(s);
    if (f.is_zero()) continue;
    for (const Rat& r : f.coeffs()) {
      if (r == 0) continue;
      return r > 0 ? x : x.negated();
    }
  }
  throw std::domain_error("canonical_sign: zero element");
}

std::vector<FieldElement> embed_all(const std::vector<FieldElement>& v, const MQField& f) {
  std::vector<FieldElement> out;
  out.reserve(v.size());
  for (const FieldElement& x : v) out.push_back(x.embed(f));
  return out;
}

}  // namespace

FieldElement bilinear_value(const DiagonalForm& q, const std::vector<FieldElement>& u,
                            const std::vector<FieldElement>& v) {
  if (u.size() != q.rank() || v.size() != q.rank())
    throw std::invalid_argument("bilinear_value: vector size does not match the form");
  FieldElement acc(Rat(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    acc = acc + u[i] * v[i] * FieldElement(q.entries()[i]);
  return acc;
}

std::vector<FieldElement> r_q_apply(const PinElement& x, const std::vector<FieldElement>& v) {
  CliffordElement w =
      x.element() * CliffordElement::from_vector(x.element().alg(), v) * x.element().reversal();
  if (x.odd()) w = -w;
  return w.vector_coords();
}

Mat<FieldElement> r_q_matrix(const PinElement& x) {
  const std::size_t n = x.element().alg()->n();
  const MQField& base = x.element().alg()->base();
  Mat<FieldElement> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<FieldElement> ej(n, FieldElement(base, Rat(0)));
    ej[j] = FieldElement(base, Rat(1));
    std::vector<FieldElement> col = r_q_apply(x, ej);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Mat<FieldElement> reflection_matrix(const DiagonalForm& q, const std::vector<FieldElement>& w) {
  const std::size_t n = q.rank();
  if (w.size() != n) throw std::invalid_argument("reflection_matrix: bad vector size");
  FieldElement qw = bilinear_value(q, w, w);
  if (qw.is_zero()) throw std::domain_error("reflection in an isotropic vector");
  Mat<FieldElement> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      FieldElement val = FieldElement(Rat(0)) - w[r] * w[c] * FieldElement(Rat(2) * q.entries()[c]) / qw;
      if (r == c) val = val + FieldElement(Rat(1));
      m(r, c) = val;
    }
  return m;
}

namespace {

void require_isometry(const DiagonalForm& q, const Mat<FieldElement>& m) {
  const std::size_t n = q.rank();
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("isometry matrix size does not match the form");
  Mat<FieldElement> d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = FieldElement(q.entries()[i]);
  if (!(m.transpose() * d * m == d))
    throw std::domain_error("matrix is not an isometry of the form");
}

}  // namespace

std::vector<std::vector<FieldElement>> reflection_decomposition(const DiagonalForm& q,
                                                                const Mat<FieldElement>& m) {
  require_isometry(q, m);
  const std::size_t n = q.rank();
  Mat<FieldElement> cur = m;
  std::vector<std::vector<FieldElement>> ws;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> u(n), e(n, FieldElement(Rat(0)));
    for (std::size_t r = 0; r < n; ++r) u[r] = cur(r, i);
    e[i] = FieldElement(Rat(1));

    std::vector<FieldElement> diff(n);
    bool is_e = true;
    for (std::size_t r = 0; r < n; ++r) {
      diff[r] = u[r] - e[r];
      if (!diff[r].is_zero()) is_e = false;
    }
    if (is_e) continue;

    auto reflect = [&](const std::vector<FieldElement>& w) {
      cur = reflection_matrix(q, w) * cur;
      ws.push_back(w);
    };
    if (!bilinear_value(q, diff, diff).is_zero()) {
      reflect(diff);
    } else {
      // q(u-e) = 0 forces q(u+e) = 4*q(e) - q(u-e) != 0 since q(u) = q(e).
      std::vector<FieldElement> sum(n);
      for (std::size_t r = 0; r < n; ++r) sum[r] = u[r] + e[r];
      reflect(sum);  // sends u to -e
      reflect(e);    // sends -e to e
    }
  }
  return ws;
}

namespace {

struct ScaledReflection {
  Rat inv_t_ds;   // 1 / (t * ds), with q(w) = ds * t^2
  Int ds;         // squarefree part of the rational reflection norm
};

ScaledReflection reflection_scale(const DiagonalForm& q, const std::vector<FieldElement>& w) {
  FieldElement qw = bilinear_value(q, w, w);
  if (qw.is_zero()) throw std::domain_error("lift of a reflection in an isotropic vector");
  if (!qw.is_rational())
    throw UnsupportedSplittingField("reflection norm " + qw.str() +
                                    " is irrational; no supported Pin lift");
  const Rat val = qw.as_rational();
  const Int ds = squarefree_part(val);
  const Rat t = sqrt_exact(val / Rat(ds));
  return ScaledReflection{Rat(1) / (t * Rat(ds)), ds};
}

}  // namespace

LiftResult lift_reflection(const CliffAlg& alg, const std::vector<FieldElement>& v) {
  if (v.size() != alg->n()) throw std::invalid_argument("lift_reflection: bad vector size");
  const ScaledReflection sc = reflection_scale(alg->form(), v);
  AdjoinResult adj = adjoin(alg->base(), sc.ds);
  CliffAlg big = adj.enlarged ? alg->with_base(adj.field) : alg;
  // v / sqrt(q(v)) = witness/(t*ds) * v, since (witness/(t*ds))^2 = 1/q(v).
  FieldElement lambda = adj.sqrt_witness * FieldElement(sc.inv_t_ds);
  CliffordElement elt =
      CliffordElement::from_vector(big, embed_all(v, big->base())).scaled(lambda);
  return LiftResult{canonical_sign(PinElement(std::move(elt), true)), big};
}

LiftResult lift_isometry(const CliffAlg& alg, const Mat<FieldElement>& m) {
  const auto ws = reflection_decomposition(alg->form(), m);

  // First enlarge the field enough for every reflection norm, then build the
  // product over the final field.
  MQField f = alg->base();
  std::vector<ScaledReflection> scales;
  scales.reserve(ws.size());
  for (const auto& w : ws) {
    scales.push_back(reflection_scale(alg->form(), w));
    f = adjoin(f, scales.back().ds).field;
  }
  CliffAlg big = f->same(*alg->base()) ? alg : alg->with_base(f);

  CliffordElement acc = CliffordElement::scalar(big, FieldElement(Rat(1)));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    FieldElement lambda = adjoin(f, scales[i].ds).sqrt_witness * FieldElement(scales[i].inv_t_ds);
    acc = acc * CliffordElement::from_vector(big, embed_all(ws[i], f)).scaled(lambda);
  }
  PinElement pin = canonical_sign(PinElement(std::move(acc), ws.size() % 2 == 1));

  // r_q of the lift must reproduce the input exactly.
  Mat<FieldElement> back = r_q_matrix(pin);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(back(i, j) == m(i, j)))
        throw std::logic_error("lift_isometry: r_q(lift) != input isometry");
  return LiftResult{std::move(pin), big};
}

CliffordElement psi_apply(const PinElement& s, bool improper, const CliffordElement& x) {
  const CliffordElement sinv = s.element().reversal();
  CliffordElement even = s.element() * x.even_part() * sinv;
  CliffordElement odd = s.element() * x.odd_part() * sinv;
  return improper ? even - odd : even + odd;
}

}  // namespace hwit
