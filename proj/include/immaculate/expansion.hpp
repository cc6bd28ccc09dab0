#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "immaculate/composition.hpp"
#include "immaculate/rational.hpp"
#include "immaculate/rational_matrix.hpp"

namespace immaculate {

enum class Algebra { QSym, NSym };

enum class ExpansionBasis { Monomial, Fundamental, DualImmaculate, Complete, Immaculate };

Algebra algebra_of(ExpansionBasis basis);
std::string basis_tag(ExpansionBasis basis);  // "M", "F", "S*", "H", "S"

// A homogeneous element of QSym or NSym written in one basis: a sparse map
// from compositions of the degree to exact rational coefficients. Zero
// coefficients are never stored; keys iterate in graded-lex order.
class BasisExpansion {
 public:
  BasisExpansion() = default;
  BasisExpansion(ExpansionBasis basis, int degree);

  static BasisExpansion unit(ExpansionBasis basis);  // degree 0, {[] -> 1}
  static BasisExpansion single(ExpansionBasis basis, const Composition& index,
                               const Rational& coefficient = 1);

  ExpansionBasis basis() const noexcept { return basis_; }
  Algebra algebra() const noexcept { return algebra_of(basis_); }
  int degree() const noexcept { return degree_; }

  const std::map<Composition, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(const Composition& index) const;
  int term_count() const noexcept { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Adds c to the coefficient at `index`, erasing it if the sum vanishes.
  // The index must be a composition of the degree.
  void add(const Composition& index, const Rational& c);

  BasisExpansion& operator+=(const BasisExpansion& other);
  BasisExpansion& operator*=(const Rational& scalar);

  bool operator==(const BasisExpansion& other) const = default;

 private:
  ExpansionBasis basis_ = ExpansionBasis::Monomial;
  int degree_ = 0;
  std::map<Composition, Rational> coeffs_;
};

// F_a = sum of M_b over all b refining a, extended linearly.
BasisExpansion fundamental_to_monomial(const BasisExpansion& x);

// Inverse of the above: M_a = sum over b refining a of (-1)^(l(b)-l(a)) F_b.
BasisExpansion monomial_to_fundamental(const BasisExpansion& x);

// Product of monomial expansions: interleave the parts of the two index
// compositions, optionally merging the two lead parts by addition.
BasisExpansion quasi_shuffle(const BasisExpansion& x, const BasisExpansion& y);

// The product h_{a1} h_{a2} ... inside QSym, each factor being the sum of
// M_b over all compositions b of that part.
BasisExpansion h_in_qsym(const Composition& alpha);

// Dual immaculate function of alpha in the monomial basis: the coefficient
// of M_beta is the immaculate Kostka number K_{alpha,beta}.
BasisExpansion dual_immaculate_via_kostka(const Composition& alpha);

// Same function through its fundamental-positive expansion: one F_{D(T)}
// term per standard immaculate tableau T of shape alpha.
BasisExpansion dual_immaculate_via_fundamentals(const Composition& alpha);

// The immaculate function of alpha written in the complete homogeneous
// basis of NSym, by exact inversion of the degree's Kostka matrix.
BasisExpansion immaculate_in_h(const Composition& alpha);

// Duality pairing <H_a, M_b> = delta_{a,b} extended bilinearly; x must be an
// H-expansion and y an M-expansion of the same degree.
Rational pairing(const BasisExpansion& x, const BasisExpansion& y);

// Per-degree table of immaculate Kostka numbers over the graded-lex list of
// compositions. Cached once per degree; safe for concurrent readers.
class KostkaTable {
 public:
  explicit KostkaTable(int degree);

  int degree() const noexcept { return degree_; }
  const std::vector<Composition>& compositions() const noexcept { return comps_; }
  int index_of(const Composition& alpha) const;

  // K[shape][content].
  long long value(int shape_index, int content_index) const {
    return matrix_[shape_index][content_index];
  }

  // The transition matrix T with T[b][a] = K_{comps[a],comps[b]}, i.e. the
  // matrix expressing each H_beta over the immaculate functions.
  RationalMatrix transition_matrix() const;

 private:
  int degree_ = 0;
  std::vector<Composition> comps_;
  std::vector<std::vector<long long>> matrix_;
};

std::shared_ptr<const KostkaTable> kostka_table(int degree);

// Inverse of KostkaTable::transition_matrix, cached per degree. Throws
// InvariantViolation if the matrix were singular (it never is).
std::shared_ptr<const RationalMatrix> inverse_kostka_matrix(int degree);

}  // namespace immaculate
