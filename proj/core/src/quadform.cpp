#include <hwit/errors.hpp>
#include <hwit/quadform.hpp>

#include <algorithm>
#include <map>

namespace hwit {

DiagonalForm::DiagonalForm(std::vector<Rat> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::domain_error("DiagonalForm: rank zero");
  for (const Rat& a : entries_)
    if (a == 0) throw SingularFormError("DiagonalForm: zero diagonal entry");
}

Mat<Rat> DiagonalForm::gram() const {
  Mat<Rat> g(rank(), rank());
  for (std::size_t i = 0; i < rank(); ++i) g(i, i) = entries_[i];
  return g;
}

std::string DiagonalForm::str() const {
  std::string s = "⟨";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += to_string(entries_[i]);
  }
  return s + "⟩";
}

QuadraticForm::QuadraticForm(Mat<Rat> gram) : gram_(std::move(gram)) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw std::domain_error("QuadraticForm: Gram matrix must be square and nonempty");
  if (gram_ != gram_.transpose())
    throw std::domain_error("QuadraticForm: Gram matrix must be symmetric");
  det_ = hwit::det(gram_);
  if (det_ == 0) throw SingularFormError("QuadraticForm: Gram determinant is zero");
}

QuadraticForm QuadraticForm::from_diagonal(const DiagonalForm& d) {
  return QuadraticForm(d.gram());
}

Diagonalization diagonalize(const QuadraticForm& q, PivotStrategy strategy) {
  const std::size_t n = q.rank();
  Mat<Rat> a = q.gram();
  Mat<Rat> p = Mat<Rat>::identity(n);

  // Congruence column operation with its paired row operation on the working
  // matrix; the basis accumulates column operations only.
  auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, dst) += f * a(r, src);
    for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (std::size_t r = 0; r < n; ++r) p(r, dst) += f * p(r, src);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(p(r, i), p(r, j));
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = n;
    if (strategy == PivotStrategy::kLargestDiagonal) {
      for (std::size_t j = i; j < n; ++j) {
        if (a(j, j) == 0) continue;
        if (piv == n || abs(a(j, j)) > abs(a(piv, piv))) piv = j;
      }
    } else {
      for (std::size_t j = i; j < n; ++j)
        if (a(j, j) != 0) {
          piv = j;
          break;
        }
    }
    if (piv == n) {
      // Remaining diagonal is all zero; create a pivot from the first
      // nonzero off-diagonal entry.
      bool found = false;
      for (std::size_t r = i; r < n && !found; ++r)
        for (std::size_t s = r + 1; s < n && !found; ++s)
          if (a(r, s) != 0) {
            add_col(r, s, Rat(1));  // new a(r,r) = 2*a(r,s) != 0
            piv = r;
            found = true;
          }
      if (!found) throw SingularFormError("diagonalize: form is degenerate");
    }
    if (piv != i) swap_cols(i, piv);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (a(r, i) == 0) continue;
      add_col(r, i, -a(r, i) / a(i, i));
    }
  }

  std::vector<Rat> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  return Diagonalization{DiagonalForm(std::move(diag)), std::move(p)};
}

SquareClass w1(const QuadraticForm& q) { return SquareClass(q.det()); }

SquareClass w1(const DiagonalForm& d) {
  Rat prod(1);
  for (const Rat& a : d.entries()) prod *= a;
  return SquareClass(prod);
}

BrauerClass w2(const DiagonalForm& d) {
  BrauerClass total;
  std::vector<SquareClass> cls;
  cls.reserve(d.rank());
  for (const Rat& a : d.entries()) cls.emplace_back(a);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j) total = total + cup(cls[i], cls[j]);
  return total;
}

BrauerClass w2(const QuadraticForm& q) { return w2(diagonalize(q).diag); }

LocalData local_data(const DiagonalForm& d) {
  LocalData out;
  out.rank = d.rank();
  out.det_class = w1(d);
  out.signature = {0, 0};
  for (const Rat& a : d.entries()) (a > 0 ? out.signature.first : out.signature.second)++;

  // Support: the archimedean place, 2, and every prime dividing some entry.
  std::map<Int, Place> finite;
  finite.emplace(2, Place::prime(2));
  for (const Rat& a : d.entries())
    for (const Int& part : {num(a), den(a)})
      for (const auto& [prime, exp] : factorize(part))
        finite.emplace(prime, Place::prime(prime));
  std::vector<Place> support;
  for (auto& [ignored, v] : finite) support.push_back(v);
  support.push_back(Place::infinite());

  for (const Place& v : support) {
    int sign = 1;
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = i + 1; j < d.rank(); ++j)
        sign *= hilbert_symbol(d.entries()[i], d.entries()[j], v);
    out.hasse_signs.emplace_back(v, sign);
  }
  return out;
}

LocalData local_data(const QuadraticForm& q) { return local_data(diagonalize(q).diag); }

bool is_equivalent(const QuadraticForm& a, const QuadraticForm& b) {
  const LocalData la = local_data(a), lb = local_data(b);
  if (la.rank != lb.rank || !(la.det_class == lb.det_class) || la.signature != lb.signature)
    return false;
  auto sign_at = [](const LocalData& l, const Place& v) {
    for (const auto& [place, s] : l.hasse_signs)
      if (place == v) return s;
    return 1;  // outside the support every Hasse symbol is +1
  };
  for (const auto& [v, s] : la.hasse_signs)
    if (s != sign_at(lb, v)) return false;
  for (const auto& [v, s] : lb.hasse_signs)
    if (s != sign_at(la, v)) return false;
  return true;
}

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b) {
  const std::size_t n = a.rank(), m = b.rank();
  Mat<Rat> g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  return QuadraticForm(std::move(g));
}

QuadraticForm scale(const QuadraticForm& q, const Rat& c) {
  if (c == 0) throw std::domain_error("scale: factor must be nonzero");
  Mat<Rat> g = q.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= c;
  return QuadraticForm(std::move(g));
}

DiagonalForm standard_form(std::size_t n) {
  return DiagonalForm(std::vector<Rat>(n, Rat(1)));
}

}  // namespace hwit
