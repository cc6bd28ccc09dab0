#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "immaculate/composition.hpp"
#include "immaculate/rational.hpp"
#include "immaculate/tableau.hpp"

namespace immaculate {

enum class ModuleKind { Word, Quotient };

enum class ImageKind : std::uint8_t { Fixed, Zero, MovedTo };

// Image of one basis element under one generator. Zero is a distinct tag,
// never a sentinel index.
struct GeneratorImage {
  ImageKind kind = ImageKind::Fixed;
  int target = -1;  // valid iff kind == MovedTo

  static GeneratorImage fixed() { return {ImageKind::Fixed, -1}; }
  static GeneratorImage zero() { return {ImageKind::Zero, -1}; }
  static GeneratorImage moved_to(int index) { return {ImageKind::MovedTo, index}; }

  bool operator==(const GeneratorImage& other) const = default;
};

// For each generator i in 1..n-1, a total map basis-index -> image. The
// action is a partial permutation (at most one nonzero per column, value 1),
// so this is the whole module structure in O(dim) per generator.
class GeneratorAction {
 public:
  GeneratorAction() = default;
  GeneratorAction(int n, int dim);

  int n() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }
  int generator_count() const noexcept { return n_ > 1 ? n_ - 1 : 0; }

  const GeneratorImage& image(int generator, int index) const;
  void set_image(int generator, int index, GeneratorImage image);

 private:
  int n_ = 0;
  int dim_ = 0;
  std::vector<std::vector<GeneratorImage>> images_;  // [generator-1][index]
};

// Vectors over the module basis; zero entries are never stored.
using SparseVector = std::map<int, Rational>;

// A 0-Hecke module with a combinatorial basis: either the word module of a
// composition (all words of that content, lex order) or its quotient with
// standard-immaculate-tableau basis (ordered by Y-word, lex).
class HeckeModule {
 public:
  ModuleKind kind() const noexcept { return kind_; }
  const Composition& alpha() const noexcept { return alpha_; }
  int n() const noexcept { return action_.n(); }
  int dim() const noexcept { return action_.dim(); }
  const GeneratorAction& action() const noexcept { return action_; }

  const std::vector<Word>& basis_words() const noexcept { return words_; }
  const Word& word(int index) const { return words_.at(index); }
  std::string label(int index) const { return words_.at(index).to_string(); }

  // Quotient modules only.
  const StandardImmaculateTableau& tableau(int index) const;

  // Binary search over the lex-sorted basis; -1 when absent.
  int index_of_word(const Word& w) const;

  // The sorted word / super-standard tableau; cyclic generator of the module.
  int canonical_seed() const;

  // Basis-level action: the index of pi_i applied to basis element `index`,
  // or nullopt when the image is zero.
  std::optional<int> act(int generator, int index) const;

  friend HeckeModule word_module(const Composition& alpha);
  friend HeckeModule quotient_module(const Composition& alpha);

 private:
  ModuleKind kind_ = ModuleKind::Word;
  Composition alpha_;
  std::vector<Word> words_;
  std::vector<StandardImmaculateTableau> tableaux_;  // Quotient kind only
  GeneratorAction action_;
};

// Basis: all words of content alpha. pi_i fixes w when w_i >= w_{i+1} and
// otherwise swaps the two letters; no word is ever sent to zero.
HeckeModule word_module(const Composition& alpha);

// Basis: standard immaculate tableaux of shape alpha. pi_i sends T to zero
// when i and i+1 are both in the first column, fixes T when the row of i is
// weakly below the row of i+1, and otherwise swaps the letters i and i+1.
HeckeModule quotient_module(const Composition& alpha);

SparseVector apply_generator(const HeckeModule& m, int generator, const SparseVector& v);

// Right-to-left composition: the last index in `generators` acts first.
SparseVector apply_sequence(const HeckeModule& m, const std::vector<int>& generators,
                            SparseVector v);

struct RelationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Checks idempotence, the braid relation, and far commutation on every basis
// element. Violations are reported, not thrown.
RelationReport verify_relations(const HeckeModule& m);

// True iff the span of the non-Y-words of content alpha is closed under
// every generator of the word module.
bool nonyword_closure_check(const Composition& alpha);

}  // namespace immaculate
