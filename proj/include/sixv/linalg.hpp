#ifndef SIXV_LINALG_HPP
#define SIXV_LINALG_HPP

#include <vector>

#include "sixv/scalar.hpp"
#include "sixv/series.hpp"

namespace sixv {

// Dense rectangular matrix of Scalars.
class ScalarMatrix {
 public:
  ScalarMatrix(int rows, int cols, Precision p)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(p)) {
    if (rows <= 0 || cols <= 0) throw numeric_error("ScalarMatrix: dimensions must be positive");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

  // Minor with the given (sorted or not) row and column index sets removed.
  ScalarMatrix without(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

// Determinant via Gaussian elimination with largest-modulus pivoting.
// A singular matrix returns a value of negligible modulus, not an error.
Scalar determinant(ScalarMatrix m);

// Solve A x = b by pivoted elimination.
std::vector<Scalar> solve_linear(ScalarMatrix a, std::vector<Scalar> b);

// Determinant over the truncated-series ring, division-free (cofactor
// expansion along the first column); entries may be non-invertible.
MultiSeries series_determinant(const std::vector<std::vector<MultiSeries>>& m);

}  // namespace sixv

#endif
