#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace immaculate {

// A composition of n: an ordered tuple of positive parts summing to n. The
// empty composition is the unique composition of 0. Values are immutable,
// hashable, and ordered graded-lexicographically (by weight, then
// lexicographically on the parts); that order is the canonical enumeration
// and matrix-indexing order used throughout.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  // Parses the text form "[a1,a2,...]" (no spaces), "[]" for the empty
  // composition. Throws std::invalid_argument on anything else.
  static Composition parse(const std::string& text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }  // |alpha|
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int part(std::size_t i) const { return parts_.at(i); }  // 0-based

  std::string to_string() const;

  bool operator==(const Composition& other) const = default;
  std::strong_ordering operator<=>(const Composition& other) const {
    if (auto cmp = weight_ <=> other.weight_; cmp != 0) return cmp;
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// A subset of {1,...,n-1}, the combinatorial shadow of a composition of n.
struct DescentSet {
  int n = 0;
  std::vector<int> elements;  // strictly increasing
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // weakly decreasing, positive

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept;

  bool operator==(const Partition& other) const = default;

 private:
  std::vector<int> parts_;
};

// All 2^(n-1) compositions of n (just [[]] for n = 0) in graded-lex order.
std::vector<Composition> compositions_of(int n);

// {a1, a1+a2, ..., a1+...+a(m-1)} with ambient n = |alpha|.
DescentSet to_descent_set(const Composition& alpha);

// Inverse of to_descent_set; throws std::invalid_argument when the elements
// are not a strictly increasing subset of {1,...,n-1}.
Composition from_descent_set(const DescentSet& descents);

// True iff alpha refines beta, i.e. S(beta) is a subset of S(alpha).
// Throws std::invalid_argument when the weights differ.
bool refines(const Composition& alpha, const Composition& beta);

Partition sort_to_partition(const Composition& alpha);

}  // namespace immaculate

template <>
struct std::hash<immaculate::Composition> {
  std::size_t operator()(const immaculate::Composition& alpha) const noexcept;
};
