#pragma once

#include <compare>
#include <string>
#include <vector>

#include "immaculate/composition.hpp"

namespace immaculate {

// A word on the letters 1..m in which every letter up to the maximum occurs.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int letter(std::size_t position) const { return letters_.at(position); }  // 0-based

  Composition content() const;

  // Digits when the largest letter is at most 9, comma-separated otherwise.
  std::string to_string() const;

  bool operator==(const Word& other) const = default;
  std::strong_ordering operator<=>(const Word& other) const {
    return letters_ <=> other.letters_;
  }

 private:
  std::vector<int> letters_;
};

// A filling of the diagram of a composition: rows weakly increasing left to
// right, first column strictly increasing top to bottom, and the letter
// multiplicities themselves forming a composition (every letter 1..max used).
class ImmaculateTableau {
 public:
  ImmaculateTableau() = default;  // the empty tableau
  explicit ImmaculateTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Composition shape() const;
  Composition content() const;
  int size() const noexcept;  // number of boxes

  // Non-throwing form of the constructor checks; used as the invariant
  // oracle in tests as well.
  static bool valid_filling(const std::vector<std::vector<int>>& rows);

  std::string to_string() const;  // e.g. "[1,1,3|2,4|4]"

  bool operator==(const ImmaculateTableau& other) const = default;
  std::strong_ordering operator<=>(const ImmaculateTableau& other) const {
    return rows_ <=> other.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

// An immaculate tableau with content 1^n: the entries are exactly 1..n.
class StandardImmaculateTableau {
 public:
  StandardImmaculateTableau() = default;
  explicit StandardImmaculateTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return tableau_.rows(); }
  const ImmaculateTableau& tableau() const noexcept { return tableau_; }
  Composition shape() const { return tableau_.shape(); }
  int size() const noexcept { return tableau_.size(); }

  // Rows are numbered 1 at the top.
  int row_of(int letter) const;
  bool in_first_column(int letter) const;

  std::string to_string() const { return tableau_.to_string(); }

  bool operator==(const StandardImmaculateTableau& other) const = default;
  std::strong_ordering operator<=>(const StandardImmaculateTableau& other) const {
    return tableau_ <=> other.tableau_;
  }

 private:
  ImmaculateTableau tableau_;
  std::vector<int> row_of_;  // letter -> 1-based row index; [0] unused
};

// All immaculate tableaux of the given shape and content, each exactly once,
// in lexicographic order of the row-index word (the concatenation, letter by
// letter, of the weakly increasing row indices receiving that letter's
// boxes). Throws std::invalid_argument when |shape| != |content|.
std::vector<ImmaculateTableau> immaculate_tableaux(const Composition& shape,
                                                   const Composition& content);

// The immaculate Kostka number: how many tableaux the call above returns,
// counted without materializing them.
long long kostka(const Composition& shape, const Composition& content);

// All standard immaculate tableaux of the given shape; equals
// immaculate_tableaux(shape, [1,1,...,1]). The enumeration order coincides
// with lexicographic order on the associated Y-words.
std::vector<StandardImmaculateTableau> standard_immaculate_tableaux(const Composition& shape);

// D(T): the composition of the descent set {i : i+1 lies strictly below i}.
Composition descent_composition(const StandardImmaculateTableau& t);

// True iff for every letter j, the first j appears before the first j+1.
bool is_y_word(const Word& w);

// The standard immaculate tableau with letter j in row w_j. Throws
// std::invalid_argument when w is not a Y-word.
StandardImmaculateTableau yword_to_tableau(const Word& w);

// Inverse of yword_to_tableau: w_j = row containing j.
Word tableau_to_yword(const StandardImmaculateTableau& t);

// Row i holds the i-th consecutive block of letters; the lex-least standard
// immaculate tableau of its shape.
StandardImmaculateTableau super_standard(const Composition& alpha);

}  // namespace immaculate
