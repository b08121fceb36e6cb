#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hwit {

// Small dense matrix over an exact field K. K must default-construct to
// zero, construct one from int(1), and provide +, -, *, /, ==. Sizes here
// are tiny (rank <= 8 forms, descent systems of a few hundred rational
// unknowns), so plain Gaussian elimination with exact arithmetic is the
// right tool; pivots are chosen deterministically (first nonzero).
template <class K>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: size mismatch in product");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (bkj == K()) continue;
          c(i, j) = c(i, j) + aik * bkj;
        }
      }
    return c;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Mat: size mismatch in sum");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] + b.d_[i];
    return c;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Mat: size mismatch in difference");
    Mat c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.d_.size(); ++i) c.d_[i] = a.d_[i] - b.d_[i];
    return c;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat: size mismatch in apply");
    std::vector<K> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) == K()) continue;
        out[i] = out[i] + (*this)(i, j) * v[j];
      }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> d_;
};

template <class K>
K det(Mat<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  K d = K(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == K()) ++piv;
    if (piv == n) return K();
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = K() - d;
    }
    d = d * m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == K()) continue;
      K f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) = m(r, j) - f * m(c, j);
    }
  }
  return d;
}

template <class K>
Mat<K> inverse(const Mat<K>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Mat<K> m = a, inv = Mat<K>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == K()) ++piv;
    if (piv == n) throw std::domain_error("inverse: matrix is singular");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    K p = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = m(c, j) / p;
      inv(c, j) = inv(c, j) / p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == K()) continue;
      K f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

// Basis of the right kernel via reduced row echelon form. Deterministic:
// pivots scan left to right, free variables are set to one in ascending
// column order, so callers get a reproducible basis.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == K()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    K p = m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = m(r, j) / p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == K()) continue;
      K f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(cols);
    v[free] = K(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = K() - m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hwit
