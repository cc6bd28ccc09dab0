#include "immaculate/tableau.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace immaculate;

namespace {

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

Composition ones(int n) { return Composition(std::vector<int>(n, 1)); }

// Independent oracle: try every multiset permutation of the content letters
// as a row-major filling of the diagram and count the ones that satisfy the
// invariant checker. Never touches the backtracking enumerator.
long long brute_force_kostka(const Composition& shape, const Composition& content) {
  std::vector<int> letters;
  for (int i = 0; i < content.length(); ++i)
    letters.insert(letters.end(), content.parts()[i], i + 1);
  long long count = 0;
  std::sort(letters.begin(), letters.end());
  do {
    std::vector<std::vector<int>> rows;
    std::size_t cursor = 0;
    for (int r = 0; r < shape.length(); ++r) {
      const std::size_t width = static_cast<std::size_t>(shape.parts()[r]);
      rows.emplace_back(letters.begin() + cursor, letters.begin() + cursor + width);
      cursor += width;
    }
    if (ImmaculateTableau::valid_filling(rows)) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

}  // namespace

TEST_CASE("the five immaculate tableaux of shape [4,2,3] and content [3,1,2,3]") {
  const auto found = immaculate_tableaux(comp({4, 2, 3}), comp({3, 1, 2, 3}));
  REQUIRE(found.size() == 5);
  const std::set<ImmaculateTableau> expected{
      ImmaculateTableau({{1, 1, 1, 3}, {2, 3}, {4, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 3}, {2, 4}, {3, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 4}, {2, 3}, {3, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 4}, {2, 4}, {3, 3, 4}}),
      ImmaculateTableau({{1, 1, 1, 2}, {3, 3}, {4, 4, 4}}),
  };
  CHECK(std::set<ImmaculateTableau>(found.begin(), found.end()) == expected);
  CHECK(kostka(comp({4, 2, 3}), comp({3, 1, 2, 3})) == 5);
}

TEST_CASE("degenerate shapes and contents") {
  // Equal shape and content force row i to be filled with letter i.
  for (const auto& alpha : {comp({3, 1, 2}), comp({2, 2}), comp({5})}) {
    const auto found = immaculate_tableaux(alpha, alpha);
    REQUIRE(found.size() == 1);
    for (int r = 0; r < alpha.length(); ++r) {
      CHECK(found[0].rows()[r] ==
            std::vector<int>(alpha.parts()[r], r + 1));
    }
    CHECK(kostka(alpha, alpha) == 1);
  }
  CHECK(kostka(comp({2, 3}), comp({3, 2})) == 0);
  CHECK(brute_force_kostka(comp({2, 3}), comp({3, 2})) == 0);
  CHECK(immaculate_tableaux(comp({2, 3}), comp({3, 2})).empty());
  CHECK(kostka(Composition{}, Composition{}) == 1);
  CHECK_THROWS_AS(immaculate_tableaux(comp({2}), comp({3})), std::invalid_argument);
  CHECK_THROWS_AS(kostka(comp({2}), comp({3})), std::invalid_argument);
}

TEST_CASE("enumerator agrees with the brute-force filler up to degree 6") {
  for (int n = 0; n <= 6; ++n) {
    const auto comps = compositions_of(n);
    for (const auto& shape : comps) {
      for (const auto& content : comps) {
        CHECK(kostka(shape, content) == brute_force_kostka(shape, content));
      }
    }
  }
}

TEST_CASE("every enumerated tableau satisfies the invariants, each exactly once") {
  for (int n = 0; n <= 6; ++n) {
    const auto comps = compositions_of(n);
    for (const auto& shape : comps) {
      for (const auto& content : comps) {
        const auto found = immaculate_tableaux(shape, content);
        std::set<ImmaculateTableau> dedup(found.begin(), found.end());
        CHECK(dedup.size() == found.size());
        for (const auto& t : found) {
          CHECK(ImmaculateTableau::valid_filling(t.rows()));
          CHECK(t.shape() == shape);
          CHECK(t.content() == content);
        }
      }
    }
  }
}

TEST_CASE("standard immaculate tableaux") {
  CHECK(standard_immaculate_tableaux(comp({6})).size() == 1);
  CHECK(standard_immaculate_tableaux(ones(5)).size() == 1);
  CHECK(standard_immaculate_tableaux(comp({2, 2, 3})).size() == 24);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      const auto sits = standard_immaculate_tableaux(alpha);
      CHECK(sits.size() == static_cast<std::size_t>(kostka(alpha, ones(n))));
    }
  }
}

TEST_CASE("descent compositions") {
  const StandardImmaculateTableau example({{1, 2, 4, 5, 10, 11},
                                           {3, 6, 7, 8, 9},
                                           {12, 13, 14, 15, 16, 17, 18}});
  CHECK(descent_composition(example) == comp({2, 3, 6, 7}));

  const StandardImmaculateTableau single_row({{1, 2, 3, 4, 5}});
  CHECK(descent_composition(single_row) == comp({5}));

  for (int n = 0; n <= 7; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      CHECK(descent_composition(super_standard(alpha)) == alpha);
    }
  }
}

TEST_CASE("Y-words") {
  CHECK(is_y_word(Word({1, 1, 2, 3, 2, 2, 2, 3, 1})));
  CHECK_FALSE(is_y_word(Word({2, 1})));
  CHECK(is_y_word(Word({1, 1, 1, 2, 2})));
  CHECK(is_y_word(Word{}));
}

TEST_CASE("the bijection between Y-words and standard immaculate tableaux") {
  const Word w({1, 1, 2, 3, 2, 2, 2, 3, 1});
  const StandardImmaculateTableau expected({{1, 2, 9}, {3, 5, 6, 7}, {4, 8}});
  CHECK(yword_to_tableau(w) == expected);
  CHECK(tableau_to_yword(expected) == w);

  CHECK(yword_to_tableau(Word({1, 1, 1, 1})) ==
        StandardImmaculateTableau({{1, 2, 3, 4}}));
  CHECK(yword_to_tableau(Word({1, 1, 2, 2})) == super_standard(comp({2, 2})));
  CHECK_THROWS_AS(yword_to_tableau(Word({2, 1})), std::invalid_argument);

  for (int n = 0; n <= 7; ++n) {
    for (const auto& alpha : compositions_of(n)) {
      const auto sits = standard_immaculate_tableaux(alpha);
      for (const auto& t : sits) {
        const Word word = tableau_to_yword(t);
        CHECK(is_y_word(word));
        CHECK(word.content() == alpha);
        CHECK(yword_to_tableau(word) == t);  // round trip
      }
      // All Y-words of this content, enumerated from scratch, hit exactly
      // the standard immaculate tableaux of the shape.
      std::vector<int> letters;
      for (int r = 0; r < alpha.length(); ++r)
        letters.insert(letters.end(), alpha.parts()[r], r + 1);
      std::sort(letters.begin(), letters.end());
      std::set<StandardImmaculateTableau> via_words;
      if (!letters.empty()) {
        do {
          const Word w2(letters);
          if (is_y_word(w2)) via_words.insert(yword_to_tableau(w2));
        } while (std::next_permutation(letters.begin(), letters.end()));
      } else {
        via_words.insert(yword_to_tableau(Word{}));
      }
      CHECK(via_words == std::set<StandardImmaculateTableau>(sits.begin(), sits.end()));
    }
  }
}

TEST_CASE("super-standard tableaux") {
  CHECK(super_standard(comp({2, 2, 3})) ==
        StandardImmaculateTableau({{1, 2}, {3, 4}, {5, 6, 7}}));
  CHECK(super_standard(comp({4})) == StandardImmaculateTableau({{1, 2, 3, 4}}));
  CHECK(tableau_to_yword(super_standard(comp({3, 4, 2}))) ==
        Word({1, 1, 1, 2, 2, 2, 2, 3, 3}));
}

TEST_CASE("word text forms") {
  CHECK(Word({1, 1, 2, 3}).to_string() == "1123");
  std::vector<int> long_letters;
  for (int i = 1; i <= 10; ++i) long_letters.push_back(i);
  CHECK(Word(long_letters).to_string() == "1,2,3,4,5,6,7,8,9,10");
  CHECK_THROWS_AS(Word({1, 3}), std::invalid_argument);  // missing letter 2
  CHECK_THROWS_AS(Word({0, 1}), std::invalid_argument);
}

TEST_CASE("tableau validation rejects bad fillings") {
  CHECK_FALSE(ImmaculateTableau::valid_filling({{1, 1}, {1, 2, 2}}));  // first column
  CHECK_FALSE(ImmaculateTableau::valid_filling({{2, 1}}));             // row order
  CHECK_FALSE(ImmaculateTableau::valid_filling({{1, 3}}));             // missing letter
  CHECK_FALSE(ImmaculateTableau::valid_filling({{1}, {}}));            // empty row
  CHECK(ImmaculateTableau::valid_filling({}));
  CHECK_THROWS_AS(ImmaculateTableau({{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardImmaculateTableau({{1, 1}}), std::invalid_argument);
}
