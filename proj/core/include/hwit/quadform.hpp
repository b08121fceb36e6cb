#pragma once

#include <hwit/galois_coh.hpp>
#include <hwit/matrix.hpp>

#include <utility>
#include <vector>

namespace hwit {

// A nondegenerate diagonal form <a_1,...,a_n> over Q.
class DiagonalForm {
 public:
  explicit DiagonalForm(std::vector<Rat> entries);

  std::size_t rank() const { return entries_.size(); }
  const std::vector<Rat>& entries() const { return entries_; }
  Mat<Rat> gram() const;

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;
  std::string str() const;  // "⟨2,6⟩"

 private:
  std::vector<Rat> entries_;
};

// A symmetric bilinear form over Q with nonzero determinant, as a Gram
// matrix. q(x) = x^T G x.
class QuadraticForm {
 public:
  explicit QuadraticForm(Mat<Rat> gram);  // throws SingularFormError / domain_error
  static QuadraticForm from_diagonal(const DiagonalForm& d);

  std::size_t rank() const { return gram_.rows(); }
  const Mat<Rat>& gram() const { return gram_; }
  const Rat& det() const { return det_; }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Mat<Rat> gram_;
  Rat det_;
};

enum class PivotStrategy {
  kLargestDiagonal,      // largest |diagonal| pivot (default)
  kFirstNonzeroDiagonal  // first nonzero diagonal pivot
};

// Congruence diagonalization: basis^T * G * basis == diag(entries), exactly.
// When the remaining diagonal is all zero the move e_r <- e_r + e_s for the
// first pair with G[r][s] != 0 creates a usable pivot.
struct Diagonalization {
  DiagonalForm diag;
  Mat<Rat> basis;
};
Diagonalization diagonalize(const QuadraticForm& q,
                            PivotStrategy strategy = PivotStrategy::kLargestDiagonal);

// First Stiefel-Whitney class: the determinant's square class.
SquareClass w1(const QuadraticForm& q);
SquareClass w1(const DiagonalForm& d);

// Second Stiefel-Whitney class of the form, computed from any
// diagonalization <a_1,...,a_n> as sum_{i<j} (a_i) u (a_j). Independent of
// the diagonalization chosen.
BrauerClass w2(const QuadraticForm& q);
BrauerClass w2(const DiagonalForm& d);

// The complete local-global invariant set: rank, determinant class, real
// signature and the local Hasse symbols prod_{i<j} (a_i,a_j)_v over the
// support {inf} u {p : p | 2 * prod num*den}.
struct LocalData {
  std::size_t rank = 0;
  SquareClass det_class;
  std::pair<int, int> signature;  // (positive, negative) diagonal entries
  std::vector<std::pair<Place, int>> hasse_signs;
};
LocalData local_data(const QuadraticForm& q);
LocalData local_data(const DiagonalForm& d);

// Hasse-Minkowski: forms over Q are equivalent iff rank, determinant class,
// signature and every local Hasse symbol agree.
bool is_equivalent(const QuadraticForm& a, const QuadraticForm& b);

QuadraticForm direct_sum(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm scale(const QuadraticForm& q, const Rat& c);  // c != 0

// The standard form t_n = <1,...,1>.
DiagonalForm standard_form(std::size_t n);

}  // namespace hwit
