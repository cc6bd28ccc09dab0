#include "immaculate/expansion.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "immaculate/errors.hpp"
#include "immaculate/tableau.hpp"

namespace immaculate {

Algebra algebra_of(ExpansionBasis basis) {
  switch (basis) {
    case ExpansionBasis::Complete:
    case ExpansionBasis::Immaculate:
      return Algebra::NSym;
    default:
      return Algebra::QSym;
  }
}

std::string basis_tag(ExpansionBasis basis) {
  switch (basis) {
    case ExpansionBasis::Monomial: return "M";
    case ExpansionBasis::Fundamental: return "F";
    case ExpansionBasis::DualImmaculate: return "S*";
    case ExpansionBasis::Complete: return "H";
    case ExpansionBasis::Immaculate: return "S";
  }
  throw std::invalid_argument("unknown basis");
}

BasisExpansion::BasisExpansion(ExpansionBasis basis, int degree)
    : basis_(basis), degree_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
}

BasisExpansion BasisExpansion::unit(ExpansionBasis basis) {
  BasisExpansion e(basis, 0);
  e.add(Composition{}, 1);
  return e;
}

BasisExpansion BasisExpansion::single(ExpansionBasis basis, const Composition& index,
                                      const Rational& coefficient) {
  BasisExpansion e(basis, index.weight());
  e.add(index, coefficient);
  return e;
}

Rational BasisExpansion::coefficient(const Composition& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BasisExpansion::add(const Composition& index, const Rational& c) {
  if (index.weight() != degree_)
    throw std::invalid_argument("expansion key of wrong degree");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BasisExpansion& BasisExpansion::operator+=(const BasisExpansion& other) {
  if (basis_ != other.basis_ || degree_ != other.degree_)
    throw std::invalid_argument("adding expansions in different bases or degrees");
  for (const auto& [key, c] : other.coeffs_) add(key, c);
  return *this;
}

BasisExpansion& BasisExpansion::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [key, c] : coeffs_) c *= scalar;
  return *this;
}

namespace {

void require_basis(const BasisExpansion& x, ExpansionBasis expected, const char* op) {
  if (x.basis() != expected)
    throw std::invalid_argument(std::string(op) + ": expansion in the wrong basis");
}

// All compositions refining alpha: refine each part independently and
// concatenate the pieces.
std::vector<Composition> refinements_of(const Composition& alpha) {
  std::vector<Composition> out{Composition{}};
  for (int part : alpha.parts()) {
    const auto pieces = compositions_of(part);
    std::vector<Composition> next;
    next.reserve(out.size() * pieces.size());
    for (const auto& prefix : out) {
      for (const auto& piece : pieces) {
        std::vector<int> parts = prefix.parts();
        parts.insert(parts.end(), piece.parts().begin(), piece.parts().end());
        next.push_back(Composition(std::move(parts)));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Quasi-shuffle of two index compositions, as a multiset of compositions.
void quasi_shuffle_parts(const std::vector<int>& a, std::size_t ia,
                         const std::vector<int>& b, std::size_t ib,
                         std::vector<int>& prefix,
                         std::map<Composition, Rational>& out, const Rational& mult) {
  if (ia == a.size() && ib == b.size()) {
    out[Composition(prefix)] += mult;
    return;
  }
  if (ia < a.size()) {
    prefix.push_back(a[ia]);
    quasi_shuffle_parts(a, ia + 1, b, ib, prefix, out, mult);
    prefix.pop_back();
  }
  if (ib < b.size()) {
    prefix.push_back(b[ib]);
    quasi_shuffle_parts(a, ia, b, ib + 1, prefix, out, mult);
    prefix.pop_back();
  }
  if (ia < a.size() && ib < b.size()) {
    prefix.push_back(a[ia] + b[ib]);
    quasi_shuffle_parts(a, ia + 1, b, ib + 1, prefix, out, mult);
    prefix.pop_back();
  }
}

}  // namespace

BasisExpansion fundamental_to_monomial(const BasisExpansion& x) {
  require_basis(x, ExpansionBasis::Fundamental, "fundamental_to_monomial");
  BasisExpansion out(ExpansionBasis::Monomial, x.degree());
  for (const auto& [alpha, c] : x.coefficients()) {
    for (const auto& beta : refinements_of(alpha)) out.add(beta, c);
  }
  return out;
}

BasisExpansion monomial_to_fundamental(const BasisExpansion& x) {
  require_basis(x, ExpansionBasis::Monomial, "monomial_to_fundamental");
  BasisExpansion out(ExpansionBasis::Fundamental, x.degree());
  for (const auto& [alpha, c] : x.coefficients()) {
    for (const auto& beta : refinements_of(alpha)) {
      const int sign_exp = beta.length() - alpha.length();
      out.add(beta, sign_exp % 2 == 0 ? c : -c);
    }
  }
  return out;
}

BasisExpansion quasi_shuffle(const BasisExpansion& x, const BasisExpansion& y) {
  require_basis(x, ExpansionBasis::Monomial, "quasi_shuffle");
  require_basis(y, ExpansionBasis::Monomial, "quasi_shuffle");
  BasisExpansion out(ExpansionBasis::Monomial, x.degree() + y.degree());
  for (const auto& [a, ca] : x.coefficients()) {
    for (const auto& [b, cb] : y.coefficients()) {
      std::map<Composition, Rational> terms;
      std::vector<int> prefix;
      quasi_shuffle_parts(a.parts(), 0, b.parts(), 0, prefix, terms, ca * cb);
      for (const auto& [key, c] : terms) out.add(key, c);
    }
  }
  return out;
}

BasisExpansion h_in_qsym(const Composition& alpha) {
  BasisExpansion out = BasisExpansion::unit(ExpansionBasis::Monomial);
  for (int part : alpha.parts()) {
    BasisExpansion factor(ExpansionBasis::Monomial, part);
    for (const auto& beta : compositions_of(part)) factor.add(beta, 1);
    out = quasi_shuffle(out, factor);
  }
  return out;
}

BasisExpansion dual_immaculate_via_kostka(const Composition& alpha) {
  const auto table = kostka_table(alpha.weight());
  const int a = table->index_of(alpha);
  BasisExpansion out(ExpansionBasis::Monomial, alpha.weight());
  for (std::size_t b = 0; b < table->compositions().size(); ++b) {
    const long long k = table->value(a, static_cast<int>(b));
    if (k != 0) out.add(table->compositions()[b], k);
  }
  return out;
}

BasisExpansion dual_immaculate_via_fundamentals(const Composition& alpha) {
  BasisExpansion out(ExpansionBasis::Fundamental, alpha.weight());
  for (const auto& t : standard_immaculate_tableaux(alpha)) {
    out.add(descent_composition(t), 1);
  }
  return out;
}

BasisExpansion immaculate_in_h(const Composition& alpha) {
  const auto table = kostka_table(alpha.weight());
  const auto inverse = inverse_kostka_matrix(alpha.weight());
  const int a = table->index_of(alpha);
  BasisExpansion out(ExpansionBasis::Complete, alpha.weight());
  for (std::size_t b = 0; b < table->compositions().size(); ++b) {
    const Rational& c = inverse->at(a, static_cast<int>(b));
    if (c != 0) out.add(table->compositions()[b], c);
  }
  return out;
}

Rational pairing(const BasisExpansion& x, const BasisExpansion& y) {
  require_basis(x, ExpansionBasis::Complete, "pairing");
  require_basis(y, ExpansionBasis::Monomial, "pairing");
  if (x.degree() != y.degree())
    throw std::invalid_argument("pairing: degree mismatch");
  Rational sum = 0;
  for (const auto& [alpha, c] : x.coefficients()) sum += c * y.coefficient(alpha);
  return sum;
}

KostkaTable::KostkaTable(int degree) : degree_(degree), comps_(compositions_of(degree)) {
  const std::size_t count = comps_.size();
  matrix_.assign(count, std::vector<long long>(count, 0));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      matrix_[a][b] = kostka(comps_[a], comps_[b]);
    }
  }
}

int KostkaTable::index_of(const Composition& alpha) const {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), alpha);
  if (it == comps_.end() || *it != alpha)
    throw std::invalid_argument("composition of the wrong degree");
  return static_cast<int>(it - comps_.begin());
}

RationalMatrix KostkaTable::transition_matrix() const {
  const int count = static_cast<int>(comps_.size());
  RationalMatrix t(count, count);
  for (int b = 0; b < count; ++b)
    for (int a = 0; a < count; ++a) t.at(b, a) = matrix_[a][b];
  return t;
}

namespace {

std::mutex cache_mutex;
std::unordered_map<int, std::shared_ptr<const KostkaTable>> table_cache;
std::unordered_map<int, std::shared_ptr<const RationalMatrix>> inverse_cache;

}  // namespace

std::shared_ptr<const KostkaTable> kostka_table(int degree) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = table_cache[degree];
  if (!slot) slot = std::make_shared<const KostkaTable>(degree);
  return slot;
}

std::shared_ptr<const RationalMatrix> inverse_kostka_matrix(int degree) {
  auto table = kostka_table(degree);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto& slot = inverse_cache[degree];
  if (!slot) {
    try {
      slot = std::make_shared<const RationalMatrix>(table->transition_matrix().inverse());
    } catch (const SingularMatrixError&) {
      throw InvariantViolation("Kostka matrix is singular");
    }
  }
  return slot;
}

}  // namespace immaculate
