#include <hwit/twists.hpp>

#include <hwit/errors.hpp>

#include <algorithm>
#include <bit>
#include <string>

namespace hwit {

namespace {

Mat<FieldElement> mat_identity(const MQField& f, std::size_t n) {
  Mat<FieldElement> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = FieldElement(f, Rat(i == j ? 1 : 0));
  return m;
}

Mat<FieldElement> mat_embed(const Mat<FieldElement>& m, const MQField& f) {
  Mat<FieldElement> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).embed(f);
  return out;
}

Mat<FieldElement> mat_rational(const Mat<Rat>& m, const MQField& f) {
  Mat<FieldElement> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = FieldElement(f, m(i, j));
  return out;
}

Mat<FieldElement> mat_galois(const Mat<FieldElement>& m, GaloisElement g) {
  Mat<FieldElement> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).galois(g);
  return out;
}

Mat<FieldElement> form_matrix(const DiagonalForm& q, const MQField& f) {
  Mat<FieldElement> d(q.rank(), q.rank());
  for (std::size_t i = 0; i < q.rank(); ++i)
    for (std::size_t j = 0; j < q.rank(); ++j)
      d(i, j) = FieldElement(f, i == j ? q.entries()[i] : Rat(0));
  return d;
}

}  // namespace

OrthCocycle::OrthCocycle(MQField field, DiagonalForm form, std::vector<Mat<FieldElement>> values)
    : field_(std::move(field)), form_(std::move(form)) {
  const std::size_t n = form_.rank();
  if (values.size() != field_->dim())
    throw std::invalid_argument("cocycle needs one value per Galois element (2^k)");
  values_.reserve(values.size());
  for (const auto& m : values) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("cocycle value size does not match the form");
    values_.push_back(mat_embed(m, field_));
  }
  if (!(values_[0] == mat_identity(field_, n)))
    throw std::domain_error("cocycle is not normalized: c(1) != identity");
  const Mat<FieldElement> d = form_matrix(form_, field_);
  for (std::size_t g = 0; g < values_.size(); ++g)
    if (!(values_[g].transpose() * d * values_[g] == d))
      throw std::domain_error("cocycle value at mask " + std::to_string(g) +
                              " is not an isometry of the form");
  for (unsigned g = 0; g < values_.size(); ++g)
    for (unsigned h = 0; h < values_.size(); ++h)
      if (!(values_[g ^ h] == values_[g] * mat_galois(values_[h], GaloisElement{g})))
        throw std::domain_error("cocycle law fails at masks " + std::to_string(g) + ", " +
                                std::to_string(h));
}

OrthCocycle trivial_cocycle(DiagonalForm q, MQField field) {
  const std::size_t n = q.rank();
  std::vector<Mat<FieldElement>> values(field->dim(), mat_identity(field, n));
  return OrthCocycle(std::move(field), std::move(q), std::move(values));
}

OrthCocycle quadratic_cocycle(const DiagonalForm& q, const Int& d, const Mat<Rat>& m) {
  if (d == 0) throw std::domain_error("quadratic twist needs a nonzero d");
  const Int ds = squarefree_part(d);
  if (ds == 1)
    throw std::domain_error("d = " + d.str() + " has trivial square class; Q(√d) is not a field");
  MQField field = MultiQuadField::create({ds});
  std::vector<Mat<FieldElement>> values;
  values.push_back(mat_identity(field, q.rank()));
  values.push_back(mat_rational(m, field));
  return OrthCocycle(std::move(field), q, std::move(values));
}

OrthCocycle regular_rep_cocycle(const Int& d) {
  Mat<Rat> swap(2, 2);
  swap(0, 1) = Rat(1);
  swap(1, 0) = Rat(1);
  return quadratic_cocycle(standard_form(2), d, swap);
}

OrthCocycle inflate_cocycle(const OrthCocycle& c, const MQField& bigger) {
  if (!c.field()->prefix_of(*bigger))
    throw std::invalid_argument("inflation target is not a prefix extension of the cocycle field");
  const unsigned small_mask = static_cast<unsigned>(c.field()->dim()) - 1;
  std::vector<Mat<FieldElement>> values;
  values.reserve(bigger->dim());
  for (unsigned g = 0; g < bigger->dim(); ++g)
    values.push_back(mat_embed(c.value(g & small_mask), bigger));
  return OrthCocycle(bigger, c.form(), std::move(values));
}

OrthCocycle conjugate_cocycle(const OrthCocycle& c, const Mat<Rat>& m) {
  const Mat<Rat> gram = c.form().gram();
  if (!(m.transpose() * gram * m == gram))
    throw std::domain_error("conjugating matrix is not a rational isometry of the form");
  const Mat<FieldElement> mf = mat_rational(m, c.field());
  const Mat<FieldElement> mf_inv = mat_rational(inverse(m), c.field());
  std::vector<Mat<FieldElement>> values;
  values.reserve(c.group_size());
  for (unsigned g = 0; g < c.group_size(); ++g)
    values.push_back(mf_inv * c.value(g) * mf);  // g(m) = m for rational m
  return OrthCocycle(c.field(), c.form(), std::move(values));
}

OrthogonalRep::OrthogonalRep(Group group, DiagonalForm form, std::vector<Mat<Rat>> images)
    : group_(std::move(group)), form_(std::move(form)), images_(std::move(images)) {
  const std::size_t n = form_.rank();
  if (images_.size() != group_->order())
    throw std::invalid_argument("representation needs one image per group element");
  const Mat<Rat> gram = form_.gram();
  for (const auto& m : images_) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("representation image size does not match the form");
    if (!(m.transpose() * gram * m == gram))
      throw std::domain_error("representation image is not an isometry of the form");
  }
  if (!(images_[FiniteGroup::kIdentity] == Mat<Rat>::identity(n)))
    throw std::domain_error("representation does not send the identity to the identity");
  for (unsigned a = 0; a < group_->order(); ++a)
    for (unsigned b = 0; b < group_->order(); ++b)
      if (!(images_[group_->mul(a, b)] == images_[a] * images_[b]))
        throw std::domain_error("representation is not a homomorphism");
}

OrthCocycle rep_to_cocycle(const OrthogonalRep& rho, const MQField& field,
                           const std::vector<unsigned>& chi) {
  const std::size_t gal = field->dim();
  if (chi.size() != gal) throw std::invalid_argument("chi needs one value per Galois element");
  const std::size_t order = rho.group()->order();
  std::vector<bool> hit(order, false);
  for (unsigned g = 0; g < gal; ++g) {
    if (chi[g] >= order) throw std::invalid_argument("chi value out of range");
    hit[chi[g]] = true;
  }
  for (unsigned g = 0; g < gal; ++g)
    for (unsigned h = 0; h < gal; ++h)
      if (chi[g ^ h] != rho.group()->mul(chi[g], chi[h]))
        throw std::domain_error("chi is not a homomorphism from the Galois group");
  for (bool b : hit)
    if (!b) throw std::domain_error("chi is not surjective onto the group");
  std::vector<Mat<FieldElement>> values;
  values.reserve(gal);
  for (unsigned g = 0; g < gal; ++g) values.push_back(mat_rational(rho.image(chi[g]), field));
  return OrthCocycle(field, rho.form(), std::move(values));
}

TwistResult twist_form(const DiagonalForm& q, const OrthCocycle& c) {
  if (!(q == c.form())) throw std::invalid_argument("twist_form: cocycle belongs to another form");
  const std::size_t n = q.rank();
  const unsigned k = static_cast<unsigned>(c.field()->generator_count());
  const unsigned dim = 1u << k;
  const std::vector<Int>& rad = c.field()->radicands();

  // One block of equations per Galois generator: c(s_t) * s_t(v) - v = 0,
  // written over the n * 2^k rational coordinates v[j*dim + T].
  Mat<Rat> sys(static_cast<std::size_t>(k) * n * dim, n * dim);
  for (unsigned t = 0; t < k; ++t) {
    const unsigned g = 1u << t;
    const Mat<FieldElement>& m = c.value(g);
    for (std::size_t row_coord = 0; row_coord < n; ++row_coord)
      for (unsigned row_sub = 0; row_sub < dim; ++row_sub) {
        const std::size_t row = (static_cast<std::size_t>(t) * n + row_coord) * dim + row_sub;
        for (std::size_t j = 0; j < n; ++j) {
          const FieldElement& entry = m(row_coord, j);
          for (unsigned t1 = 0; t1 < dim; ++t1) {
            if (entry.coeff(t1) == 0) continue;
            const unsigned t2 = t1 ^ row_sub;
            Rat coeff = entry.coeff(t1);
            if (std::popcount(t2 & g) & 1) coeff = -coeff;
            for (unsigned shared = t1 & t2; shared;) {
              unsigned low = shared & (~shared + 1u);
              coeff *= Rat(rad[static_cast<unsigned>(std::countr_zero(low))]);
              shared ^= low;
            }
            sys(row, j * dim + t2) += coeff;
          }
        }
        sys(row, row_coord * dim + row_sub) -= 1;
      }
  }

  const auto kernel = kernel_basis(sys);
  if (kernel.size() != n)
    throw std::domain_error("twisted fixed space has dimension " +
                            std::to_string(kernel.size()) + ", expected " + std::to_string(n));

  Mat<FieldElement> basis(n, n);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement val(c.field(), Rat(0));
      for (unsigned t = 0; t < dim; ++t) {
        const Rat& x = kernel[col][j * dim + t];
        if (x != 0) val = val + FieldElement::monomial(c.field(), t, x);
      }
      basis(j, col) = val;
    }

  Mat<Rat> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::vector<FieldElement> vi(n), vj(n);
      for (std::size_t r = 0; r < n; ++r) {
        vi[r] = basis(r, i);
        vj[r] = basis(r, j);
      }
      const FieldElement b = bilinear_value(q, vi, vj);
      if (!b.is_rational())
        throw std::logic_error("twisted Gram entry is not Galois-invariant: " + b.str());
      gram(i, j) = gram(j, i) = b.as_rational();
    }
  return TwistResult{QuadraticForm(std::move(gram)), std::move(basis)};
}

SquareClass delta1(const OrthCocycle& c) {
  Rat prod(1);
  for (std::size_t i = 0; i < c.field()->generator_count(); ++i) {
    const FieldElement d = det(c.value(1u << static_cast<unsigned>(i)));
    const Rat dv = d.as_rational();  // isometry determinant, +-1
    if (dv == -1)
      prod *= Rat(c.field()->radicands()[i]);
    else if (dv != 1)
      throw std::logic_error("cocycle value has determinant " + to_string(dv));
  }
  return SquareClass(prod);
}

namespace {

Int reflection_radicand(const DiagonalForm& q, const std::vector<FieldElement>& w) {
  const FieldElement qw = bilinear_value(q, w, w);
  if (!qw.is_rational())
    throw UnsupportedSplittingField("reflection norm " + qw.str() +
                                    " is irrational; no supported Pin lift");
  return squarefree_part(qw.as_rational());
}

}  // namespace

BrauerClass delta2_with(const OrthCocycle& c, const Delta2Options& options) {
  const DiagonalForm& q = c.form();

  // Enlarge L so every reflection norm becomes a square, then inflate.
  MQField big = c.field();
  for (unsigned g = 0; g < c.group_size(); ++g)
    for (const auto& w : reflection_decomposition(q, c.value(g)))
      big = adjoin(big, reflection_radicand(q, w)).field;
  if (options.extra_radicand) big = adjoin(big, *options.extra_radicand).field;

  const OrthCocycle inflated = big->same(*c.field()) ? c : inflate_cocycle(c, big);
  const CliffAlg alg = CliffordAlgebra::create(q, big);
  const unsigned gal = static_cast<unsigned>(inflated.group_size());

  std::vector<CliffordElement> lift;
  lift.reserve(gal);
  for (unsigned g = 0; g < gal; ++g) {
    LiftResult lr = lift_isometry(alg, inflated.value(g));
    if (!lr.alg->same(*alg))
      throw std::logic_error("Pin lift enlarged an already-sufficient field");
    CliffordElement e = lr.pin.element();
    if (options.flip_lift_signs >> g & 1) e = -e;
    lift.push_back(std::move(e));
  }

  // z(g,h) = s(g) g(s(h)) s(gh)^{-1} in {+-1}.
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(gal) * gal, 0);
  for (unsigned g = 0; g < gal; ++g)
    for (unsigned h = 0; h < gal; ++h) {
      const CliffordElement t = lift[g] * lift[h].galois(GaloisElement{g});
      const CliffordElement& u = lift[g ^ h];
      if (t == u)
        raw[static_cast<std::size_t>(g) * gal + h] = 0;
      else if (t == -u)
        raw[static_cast<std::size_t>(g) * gal + h] = 1;
      else
        throw std::logic_error("lift cocycle escaped {+1,-1}");
    }

  const Group gal_group = FiniteGroup::elementary_abelian(
      static_cast<unsigned>(big->generator_count()));
  const F2Cochain z = F2Cochain::normalized_from_raw(gal_group, 2, std::move(raw));
  return inflate_to_brauer(decompose_cocycle(z), big->radicands());
}

BrauerClass delta2(const OrthCocycle& c) { return delta2_with(c, Delta2Options{}); }

std::vector<Int> delta2_radicands(const OrthCocycle& c) {
  std::vector<Int> out = c.field()->radicands();
  for (unsigned g = 0; g < c.group_size(); ++g)
    for (const auto& w : reflection_decomposition(c.form(), c.value(g))) {
      const Int r = reflection_radicand(c.form(), w);
      if (r != 1) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<Rat> poly_trim(std::vector<Rat> p) {
  std::size_t lead = 0;
  while (lead < p.size() && p[lead] == 0) ++lead;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(lead));
  return p;
}

// Remainder of a mod b, coefficients leading-first, b nonzero and trimmed.
std::vector<Rat> poly_rem(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = poly_trim(std::move(a));
  while (a.size() >= b.size()) {
    const Rat f = a[0] / b[0];
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

bool is_separable(const std::vector<Rat>& monic) {
  std::vector<Rat> a = monic;
  std::vector<Rat> b(monic.size() - 1);  // derivative
  const std::size_t n = monic.size() - 1;
  for (std::size_t i = 0; i < n; ++i) b[i] = Rat(static_cast<long>(n - i)) * monic[i];
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    std::vector<Rat> r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;  // gcd is a nonzero constant
}

}  // namespace

QuadraticForm trace_form(const std::vector<Rat>& coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("trace form needs degree >= 1");
  if (coeffs[0] == 0) throw std::invalid_argument("leading coefficient is zero");
  const std::size_t n = coeffs.size() - 1;
  if (n > 8) throw std::domain_error("trace form degree capped at 8");

  std::vector<Rat> monic(coeffs);
  for (Rat& x : monic) x /= coeffs[0];
  if (!is_separable(monic))
    throw SingularFormError("polynomial is not separable; the trace pairing is degenerate");

  // Newton's identities: p_m + c_1 p_{m-1} + ... + c_{m-1} p_1 + m c_m = 0
  // for m <= n, and p_m + sum_{i=1..n} c_i p_{m-i} = 0 beyond.
  std::vector<Rat> p(2 * n - 1);
  p[0] = Rat(static_cast<long>(n));
  for (std::size_t m = 1; m <= 2 * n - 2; ++m) {
    Rat acc(0);
    for (std::size_t i = 1; i <= std::min(m, n); ++i) {
      if (i == m)
        acc += Rat(static_cast<long>(m)) * monic[i];
      else
        acc += monic[i] * p[m - i];
    }
    p[m] = -acc;
  }
  Mat<Rat> gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = p[i + j];
  return QuadraticForm(std::move(gram));
}

Cor62Report verify_cor62(const DiagonalForm& q, const OrthCocycle& c) {
  if (!(q == c.form())) throw std::invalid_argument("verify_cor62: cocycle belongs to another form");
  TwistResult tw = twist_form(q, c);

  const SquareClass w1_base = w1(q);
  const SquareClass w1_twisted = w1(tw.form);
  const BrauerClass w2_base = w2(q);
  const BrauerClass w2_twisted = w2(tw.form);
  const SquareClass d1 = delta1(c);
  const BrauerClass d2 = delta2(c);

  const bool identity_i = (w1_twisted == w1_base * d1);
  const bool identity_ii = (w2_twisted == w2_base + cup(w1_base, d1) + d2);
  const BrauerClass invariant_route =
      w2_twisted + w2_base + cup(w1_base, w1_base) + cup(w1_base, w1_twisted);

  return Cor62Report{std::move(tw.form),
                     std::move(tw.basis),
                     w1_base,
                     w1_twisted,
                     d1,
                     w2_base,
                     w2_twisted,
                     d2,
                     identity_i,
                     identity_ii,
                     invariant_route,
                     d2 == invariant_route};
}

}  // namespace hwit
