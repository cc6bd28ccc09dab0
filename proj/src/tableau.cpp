#include "immaculate/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace immaculate {

namespace {

// Multiplicity vector of a letter sequence, as a Composition. Throws when
// some intermediate letter is missing.
Composition content_of_letters(const std::vector<int>& letters) {
  int max_letter = 0;
  for (int x : letters) {
    if (x < 1) throw std::invalid_argument("letters must be positive");
    max_letter = std::max(max_letter, x);
  }
  std::vector<int> counts(max_letter, 0);
  for (int x : letters) ++counts[x - 1];
  return Composition(std::move(counts));  // throws if a letter is absent
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  content_of_letters(letters_);  // validate
}

Composition Word::content() const { return content_of_letters(letters_); }

std::string Word::to_string() const {
  const bool digits = std::all_of(letters_.begin(), letters_.end(),
                                  [](int x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

ImmaculateTableau::ImmaculateTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  if (!valid_filling(rows_))
    throw std::invalid_argument("not a valid immaculate tableau filling");
}

bool ImmaculateTableau::valid_filling(const std::vector<std::vector<int>>& rows) {
  std::vector<int> all;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 1) return false;
      if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;  // weakly increasing row
      all.push_back(rows[r][c]);
    }
    if (r > 0 && rows[r][0] <= rows[r - 1][0]) return false;  // strict first column
  }
  if (all.empty()) return true;
  // Content must be a composition: every letter 1..max present.
  const int max_letter = *std::max_element(all.begin(), all.end());
  std::vector<int> counts(max_letter, 0);
  for (int x : all) ++counts[x - 1];
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c > 0; });
}

Composition ImmaculateTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Composition(std::move(parts));
}

Composition ImmaculateTableau::content() const {
  std::vector<int> all;
  for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
  return content_of_letters(all);
}

int ImmaculateTableau::size() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::string ImmaculateTableau::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '|';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  out += ']';
  return out;
}

StandardImmaculateTableau::StandardImmaculateTableau(std::vector<std::vector<int>> rows)
    : tableau_(std::move(rows)) {
  const int n = tableau_.size();
  row_of_.assign(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < tableau_.rows().size(); ++r) {
    for (int x : tableau_.rows()[r]) {
      if (x > n || seen[x])
        throw std::invalid_argument("standard tableau entries must be exactly 1..n");
      seen[x] = true;
      row_of_[x] = static_cast<int>(r) + 1;
    }
  }
}

int StandardImmaculateTableau::row_of(int letter) const {
  if (letter < 1 || letter > size())
    throw std::invalid_argument("letter out of range");
  return row_of_[letter];
}

bool StandardImmaculateTableau::in_first_column(int letter) const {
  const auto& row = rows()[row_of(letter) - 1];
  return row.front() == letter;
}

namespace {

// Backtracking enumeration of immaculate fillings. Letters are placed in
// increasing order, each letter's boxes going left-to-right into a weakly
// increasing sequence of rows. Because rows of a filling are sorted, a
// filling is exactly an assignment of box counts per (letter, row), and the
// first-column letter of a row is whichever letter first lands in it. The
// first column is strictly increasing iff rows open top-to-bottom, at most
// one row per letter, with no unopened row above an opened one.
class Filler {
 public:
  template <typename Visitor>
  Filler(const Composition& shape, const Composition& content, Visitor&& visit)
      : shape_(shape.parts()), content_(content.parts()) {
    free_ = shape_;
    rows_.resize(shape_.size());
    run(0, [&](const std::vector<std::vector<int>>& rows) { visit(rows); });
  }

 private:
  template <typename Emit>
  void run(std::size_t letter, const Emit& emit) {
    if (letter == content_.size()) {
      if (open_ == shape_.size()) emit(rows_);
      return;
    }
    // Each remaining letter can open at most one new row.
    if (shape_.size() - open_ > content_.size() - letter) return;
    place(letter, content_[letter], 0, false, emit);
  }

  template <typename Emit>
  void place(std::size_t letter, int remaining, std::size_t min_row, bool opened,
             const Emit& emit) {
    if (remaining == 0) {
      run(letter + 1, emit);
      return;
    }
    for (std::size_t r = min_row; r < open_; ++r) {
      if (free_[r] == 0) continue;
      put(letter, r);
      place(letter, remaining - 1, r, opened, emit);
      take(letter, r);
    }
    if (!opened && open_ < shape_.size()) {
      const std::size_t r = open_++;
      put(letter, r);
      place(letter, remaining - 1, r, true, emit);
      take(letter, r);
      --open_;
    }
  }

  void put(std::size_t letter, std::size_t row) {
    --free_[row];
    rows_[row].push_back(static_cast<int>(letter) + 1);
  }

  void take(std::size_t letter, std::size_t row) {
    (void)letter;
    ++free_[row];
    rows_[row].pop_back();
  }

  std::vector<int> shape_;
  std::vector<int> content_;
  std::vector<int> free_;
  std::vector<std::vector<int>> rows_;
  std::size_t open_ = 0;
};

void check_sizes(const Composition& shape, const Composition& content) {
  if (shape.weight() != content.weight())
    throw std::invalid_argument("shape and content have different weights");
}

}  // namespace

std::vector<ImmaculateTableau> immaculate_tableaux(const Composition& shape,
                                                   const Composition& content) {
  check_sizes(shape, content);
  std::vector<ImmaculateTableau> out;
  Filler(shape, content, [&](const std::vector<std::vector<int>>& rows) {
    out.push_back(ImmaculateTableau(rows));
  });
  return out;
}

long long kostka(const Composition& shape, const Composition& content) {
  check_sizes(shape, content);
  long long count = 0;
  Filler(shape, content, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

std::vector<StandardImmaculateTableau> standard_immaculate_tableaux(const Composition& shape) {
  const Composition ones(std::vector<int>(shape.weight(), 1));
  std::vector<StandardImmaculateTableau> out;
  Filler(shape, ones, [&](const std::vector<std::vector<int>>& rows) {
    out.push_back(StandardImmaculateTableau(rows));
  });
  return out;
}

Composition descent_composition(const StandardImmaculateTableau& t) {
  const int n = t.size();
  DescentSet descents;
  descents.n = n;
  for (int i = 1; i < n; ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) descents.elements.push_back(i);
  }
  return from_descent_set(descents);
}

bool is_y_word(const Word& w) {
  int opened = 0;
  for (int x : w.letters()) {
    if (x > opened + 1) return false;
    if (x == opened + 1) ++opened;
  }
  return true;
}

StandardImmaculateTableau yword_to_tableau(const Word& w) {
  if (!is_y_word(w)) throw std::invalid_argument("not a Y-word");
  const Composition shape = w.content();
  std::vector<std::vector<int>> rows(shape.length());
  for (int j = 0; j < w.size(); ++j) rows[w.letter(j) - 1].push_back(j + 1);
  return StandardImmaculateTableau(std::move(rows));
}

Word tableau_to_yword(const StandardImmaculateTableau& t) {
  std::vector<int> letters;
  letters.reserve(t.size());
  for (int j = 1; j <= t.size(); ++j) letters.push_back(t.row_of(j));
  return Word(std::move(letters));
}

StandardImmaculateTableau super_standard(const Composition& alpha) {
  std::vector<std::vector<int>> rows(alpha.length());
  int next = 1;
  for (int r = 0; r < alpha.length(); ++r) {
    for (int c = 0; c < alpha.parts()[r]; ++c) rows[r].push_back(next++);
  }
  return StandardImmaculateTableau(std::move(rows));
}

}  // namespace immaculate
