#include "immaculate/hecke.hpp"

#include <algorithm>
#include <stdexcept>

#include "immaculate/errors.hpp"

namespace immaculate {

GeneratorAction::GeneratorAction(int n, int dim) : n_(n), dim_(dim) {
  if (n < 0 || dim < 0) throw std::invalid_argument("negative module size");
  images_.assign(generator_count(), std::vector<GeneratorImage>(dim));
}

const GeneratorImage& GeneratorAction::image(int generator, int index) const {
  if (generator < 1 || generator > generator_count())
    throw std::invalid_argument("generator index out of range");
  return images_.at(generator - 1).at(index);
}

void GeneratorAction::set_image(int generator, int index, GeneratorImage image) {
  if (image.kind == ImageKind::MovedTo && image.target == index)
    throw InvariantViolation("moved-to image must differ from its source");
  images_.at(generator - 1).at(index) = image;
}

const StandardImmaculateTableau& HeckeModule::tableau(int index) const {
  if (kind_ != ModuleKind::Quotient)
    throw std::invalid_argument("word modules have no tableau basis");
  return tableaux_.at(index);
}

int HeckeModule::index_of_word(const Word& w) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) return -1;
  return static_cast<int>(it - words_.begin());
}

int HeckeModule::canonical_seed() const {
  std::vector<int> sorted;
  for (int r = 0; r < alpha_.length(); ++r)
    sorted.insert(sorted.end(), alpha_.parts()[r], r + 1);
  const int index = index_of_word(Word(std::move(sorted)));
  if (index < 0) throw InvariantViolation("sorted word missing from basis");
  return index;
}

std::optional<int> HeckeModule::act(int generator, int index) const {
  const GeneratorImage& image = action_.image(generator, index);
  switch (image.kind) {
    case ImageKind::Fixed: return index;
    case ImageKind::Zero: return std::nullopt;
    case ImageKind::MovedTo: return image.target;
  }
  throw InvariantViolation("corrupt generator image");
}

namespace {

std::vector<Word> words_of_content(const Composition& alpha) {
  std::vector<int> letters;
  for (int r = 0; r < alpha.length(); ++r)
    letters.insert(letters.end(), alpha.parts()[r], r + 1);
  std::vector<Word> words;
  // next_permutation from the sorted word enumerates in lex order.
  do {
    words.push_back(Word(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return words;
}

// Swap the letters i and i+1 between their rows. Only called in the moved
// case, where the result is again a standard immaculate tableau.
StandardImmaculateTableau swap_letters(const StandardImmaculateTableau& t, int i) {
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows) {
    for (int& entry : row) {
      if (entry == i) entry = i + 1;
      else if (entry == i + 1) entry = i;
    }
    std::sort(row.begin(), row.end());
  }
  return StandardImmaculateTableau(std::move(rows));
}

}  // namespace

HeckeModule word_module(const Composition& alpha) {
  HeckeModule m;
  m.kind_ = ModuleKind::Word;
  m.alpha_ = alpha;
  m.words_ = words_of_content(alpha);
  const int n = alpha.weight();
  const int dim = static_cast<int>(m.words_.size());
  m.action_ = GeneratorAction(n, dim);
  for (int b = 0; b < dim; ++b) {
    const auto& letters = m.words_[b].letters();
    for (int i = 1; i < n; ++i) {
      if (letters[i - 1] >= letters[i]) {
        m.action_.set_image(i, b, GeneratorImage::fixed());
        continue;
      }
      std::vector<int> swapped = letters;
      std::swap(swapped[i - 1], swapped[i]);
      const int target = m.index_of_word(Word(std::move(swapped)));
      if (target < 0) throw InvariantViolation("swapped word missing from basis");
      m.action_.set_image(i, b, GeneratorImage::moved_to(target));
    }
  }
  return m;
}

HeckeModule quotient_module(const Composition& alpha) {
  HeckeModule m;
  m.kind_ = ModuleKind::Quotient;
  m.alpha_ = alpha;
  m.tableaux_ = standard_immaculate_tableaux(alpha);
  m.words_.reserve(m.tableaux_.size());
  for (const auto& t : m.tableaux_) m.words_.push_back(tableau_to_yword(t));
  if (!std::is_sorted(m.words_.begin(), m.words_.end()))
    throw InvariantViolation("tableau enumeration is not in Y-word order");
  const int n = alpha.weight();
  const int dim = static_cast<int>(m.words_.size());
  m.action_ = GeneratorAction(n, dim);
  for (int b = 0; b < dim; ++b) {
    const auto& t = m.tableaux_[b];
    for (int i = 1; i < n; ++i) {
      if (t.in_first_column(i) && t.in_first_column(i + 1)) {
        m.action_.set_image(i, b, GeneratorImage::zero());
      } else if (t.row_of(i) >= t.row_of(i + 1)) {
        m.action_.set_image(i, b, GeneratorImage::fixed());
      } else {
        const int target = m.index_of_word(tableau_to_yword(swap_letters(t, i)));
        if (target < 0) throw InvariantViolation("swapped tableau missing from basis");
        m.action_.set_image(i, b, GeneratorImage::moved_to(target));
      }
    }
  }
  return m;
}

SparseVector apply_generator(const HeckeModule& m, int generator, const SparseVector& v) {
  if (generator < 1 || generator > m.action().generator_count())
    throw std::invalid_argument("generator index out of range");
  SparseVector out;
  for (const auto& [index, c] : v) {
    if (index < 0 || index >= m.dim())
      throw std::invalid_argument("sparse vector index out of range");
    const auto image = m.act(generator, index);
    if (!image) continue;
    auto [it, inserted] = out.try_emplace(*image, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

SparseVector apply_sequence(const HeckeModule& m, const std::vector<int>& generators,
                            SparseVector v) {
  for (auto it = generators.rbegin(); it != generators.rend(); ++it) {
    v = apply_generator(m, *it, v);
  }
  return v;
}

namespace {

std::optional<int> act_sequence(const HeckeModule& m, std::initializer_list<int> gens,
                                int index) {
  std::optional<int> cur = index;
  // Right-to-left, matching apply_sequence.
  for (auto it = std::rbegin(gens); it != std::rend(gens); ++it) {
    if (!cur) return std::nullopt;
    cur = m.act(*it, *cur);
  }
  return cur;
}

std::string describe(const HeckeModule& m, std::optional<int> index) {
  return index ? m.label(*index) : std::string("0");
}

}  // namespace

RelationReport verify_relations(const HeckeModule& m) {
  RelationReport report;
  const int gens = m.action().generator_count();
  auto fail = [&](const std::string& text) {
    report.ok = false;
    report.violations.push_back(text);
  };
  for (int b = 0; b < m.dim(); ++b) {
    for (int i = 1; i <= gens; ++i) {
      const auto once = act_sequence(m, {i}, b);
      if (act_sequence(m, {i, i}, b) != once)
        fail("idempotence fails at generator " + std::to_string(i) + ", basis " + m.label(b));
      if (i + 1 <= gens) {
        const auto lhs = act_sequence(m, {i, i + 1, i}, b);
        const auto rhs = act_sequence(m, {i + 1, i, i + 1}, b);
        if (lhs != rhs)
          fail("braid relation fails at generators (" + std::to_string(i) + "," +
               std::to_string(i + 1) + "), basis " + m.label(b) + ": " +
               describe(m, lhs) + " vs " + describe(m, rhs));
      }
      for (int j = i + 2; j <= gens; ++j) {
        if (act_sequence(m, {i, j}, b) != act_sequence(m, {j, i}, b))
          fail("far commutation fails at generators (" + std::to_string(i) + "," +
               std::to_string(j) + "), basis " + m.label(b));
      }
    }
  }
  return report;
}

bool nonyword_closure_check(const Composition& alpha) {
  const HeckeModule m = word_module(alpha);
  for (int b = 0; b < m.dim(); ++b) {
    if (is_y_word(m.word(b))) continue;
    for (int i = 1; i <= m.action().generator_count(); ++i) {
      const auto image = m.act(i, b);
      if (!image) throw InvariantViolation("word module produced a zero image");
      if (is_y_word(m.word(*image))) return false;
    }
  }
  return true;
}

}  // namespace immaculate
