#pragma once

#include <vector>

#include "immaculate/rational.hpp"

namespace immaculate {

// Dense matrix over exact rationals. Dimensions at desk scale; everything is
// computed exactly, with fraction-free (Bareiss) elimination wherever the
// pivoting happens over cleared denominators.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);  // zero-filled
  static RationalMatrix identity(int k);
  static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Rational& at(int r, int c) { return entries_[index(r, c)]; }
  const Rational& at(int r, int c) const { return entries_[index(r, c)]; }

  RationalMatrix multiply(const RationalMatrix& other) const;
  RationalMatrix transpose() const;

  // Bareiss fraction-free elimination after clearing denominators row-wise.
  // Pivots are chosen by first-nonzero scan order, so results are
  // deterministic. determinant() requires a square matrix; inverse() throws
  // SingularMatrixError when the determinant vanishes.
  Rational determinant() const;
  RationalMatrix inverse() const;
  int rank() const;

  // Exact basis of {v : Mv = 0}; size = cols - rank. Each vector is
  // normalized so that its entry at the corresponding free column is 1.
  std::vector<std::vector<Rational>> nullspace() const;

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  return a.multiply(b);
}

}  // namespace immaculate
