#include "immaculate/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

#include "immaculate/errors.hpp"

namespace immaculate {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

using IntGrid = std::vector<std::vector<Int>>;

Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Clears denominators row by row; the scaling factors multiply the
// determinant but leave rank and nullspace unchanged.
IntGrid integerize(const RationalMatrix& m, std::vector<Int>* row_scales) {
  IntGrid grid(m.rows(), std::vector<Int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    Int lcm = 1;
    for (int c = 0; c < m.cols(); ++c) {
      const Int den = denominator(m.at(r, c));
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rational scaled = m.at(r, c) * Rational(lcm);
      grid[r][c] = numerator(scaled);
    }
    if (row_scales) row_scales->push_back(lcm);
  }
  return grid;
}

Int exact_div(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw InvariantViolation("fraction-free elimination: inexact division");
  return q;
}

struct Echelon {
  std::vector<int> pivot_cols;  // pivot_cols[i] = column of pivot row i
  int sign = 1;
};

// One-step fraction-free (Bareiss) row echelon with pivoting by first
// nonzero scan. Only the first `pivot_limit` columns are searched for
// pivots; trailing columns (an augmented block, if any) are carried along.
Echelon bareiss_echelon(IntGrid& m, int pivot_limit) {
  Echelon ech;
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Int prev = 1;
  int pr = 0;
  for (int col = 0; col < pivot_limit && pr < rows; ++col) {
    int found = -1;
    for (int r = pr; r < rows; ++r) {
      if (m[r][col] != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != pr) {
      std::swap(m[found], m[pr]);
      ech.sign = -ech.sign;
    }
    for (int i = pr + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m[i][j] = exact_div(m[pr][col] * m[i][j] - m[i][col] * m[pr][j], prev);
      }
      m[i][col] = 0;
    }
    prev = m[pr][col];
    ech.pivot_cols.push_back(col);
    ++pr;
  }
  return ech;
}

// Solves the echelon system U x = rhs for the pivot variables by upward
// substitution, with the free variables preassigned in x.
void back_substitute(const IntGrid& u, const Echelon& ech, int cols,
                     std::vector<Rational>& x, const std::vector<Rational>& rhs) {
  for (int i = static_cast<int>(ech.pivot_cols.size()) - 1; i >= 0; --i) {
    const int p = ech.pivot_cols[i];
    Rational sum = rhs[i];
    for (int j = p + 1; j < cols; ++j) {
      if (u[i][j] != 0 && x[j] != 0) sum -= Rational(u[i][j]) * x[j];
    }
    x[p] = sum / Rational(u[i][p]);
  }
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int k) {
  RationalMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("multiply: shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        if (other.at(k, j) != 0) out.at(i, j) += aik * other.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
  if (rows_ == 0) return 1;
  std::vector<Int> scales;
  IntGrid grid = integerize(*this, &scales);
  const Echelon ech = bareiss_echelon(grid, cols_);
  if (static_cast<int>(ech.pivot_cols.size()) < rows_) return 0;
  Rational det(grid[rows_ - 1][cols_ - 1] * ech.sign);
  for (const Int& s : scales) det /= Rational(s);
  return det;
}

int RationalMatrix::rank() const {
  IntGrid grid = integerize(*this, nullptr);
  return static_cast<int>(bareiss_echelon(grid, cols_).pivot_cols.size());
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  IntGrid grid = integerize(*this, nullptr);
  const Echelon ech = bareiss_echelon(grid, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : ech.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  const std::vector<Rational> zero_rhs(ech.pivot_cols.size(), Rational(0));
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    back_substitute(grid, ech, cols_, v, zero_rhs);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
  const int n = rows_;
  // Augment with the identity, eliminate fraction-free on the left block,
  // then back-substitute each augmented column.
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  IntGrid grid = integerize(aug, nullptr);
  const Echelon ech = bareiss_echelon(grid, n);
  if (static_cast<int>(ech.pivot_cols.size()) < n)
    throw SingularMatrixError("inverse: singular matrix");
  RationalMatrix out(n, n);
  for (int col = 0; col < n; ++col) {
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = Rational(grid[i][n + col]);
    std::vector<Rational> x(n, Rational(0));
    back_substitute(grid, ech, n, x, rhs);
    for (int i = 0; i < n; ++i) out.at(i, col) = std::move(x[i]);
  }
  return out;
}

}  // namespace immaculate
