// Acceptance suite: every criterion is exact arithmetic at desk scale. One
// pass/fail line per criterion; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "immaculate/analysis.hpp"
#include "immaculate/composition.hpp"
#include "immaculate/expansion.hpp"
#include "immaculate/hecke.hpp"
#include "immaculate/parallel.hpp"
#include "immaculate/serialize.hpp"
#include "immaculate/tableau.hpp"

using namespace immaculate;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, double seconds,
            double limit_seconds) {
  const bool in_time = seconds < limit_seconds;
  if (!ok || !in_time) ++failures;
  std::printf("[%s] %2d %s (%.3fs%s)\n", ok && in_time ? "PASS" : "FAIL", number,
              name.c_str(), seconds, in_time ? "" : ", over budget");
}

template <typename Check>
void criterion(int number, const std::string& name, double limit_seconds, Check&& check) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = check();
  } catch (const std::exception& e) {
    std::printf("       criterion %d threw: %s\n", number, e.what());
    ok = false;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, ok, seconds, limit_seconds);
}

Composition comp(std::vector<int> parts) { return Composition(std::move(parts)); }

std::vector<Composition> compositions_up_to(int max_n) {
  std::vector<Composition> out;
  for (int n = 0; n <= max_n; ++n) {
    const auto level = compositions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Independent of the tableau enumerator and of is_y_word: scan all words of
// the given content and keep those whose first occurrences appear in letter
// order.
long long brute_force_yword_count(const std::vector<int>& content) {
  std::vector<int> letters;
  for (std::size_t j = 0; j < content.size(); ++j)
    letters.insert(letters.end(), content[j], static_cast<int>(j) + 1);
  std::sort(letters.begin(), letters.end());
  long long count = 0;
  do {
    std::vector<int> first(content.size() + 1, -1);
    for (std::size_t pos = 0; pos < letters.size(); ++pos) {
      if (first[letters[pos]] < 0) first[letters[pos]] = static_cast<int>(pos);
    }
    bool ordered = true;
    for (std::size_t j = 1; j < content.size(); ++j) {
      if (first[j] >= first[j + 1]) ordered = false;
    }
    if (ordered) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

bool kostka_example() {
  if (kostka(comp({4, 2, 3}), comp({3, 1, 2, 3})) != 5) return false;
  const auto found = immaculate_tableaux(comp({4, 2, 3}), comp({3, 1, 2, 3}));
  const std::set<ImmaculateTableau> expected{
      ImmaculateTableau({{1, 1, 1, 3}, {2, 3}, {4, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 3}, {2, 4}, {3, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 4}, {2, 3}, {3, 4, 4}}),
      ImmaculateTableau({{1, 1, 1, 4}, {2, 4}, {3, 3, 4}}),
      ImmaculateTableau({{1, 1, 1, 2}, {3, 3}, {4, 4, 4}}),
  };
  return std::set<ImmaculateTableau>(found.begin(), found.end()) == expected;
}

bool descent_example() {
  const StandardImmaculateTableau t({{1, 2, 4, 5, 10, 11},
                                     {3, 6, 7, 8, 9},
                                     {12, 13, 14, 15, 16, 17, 18}});
  std::vector<int> descents;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) descents.push_back(i);
  }
  return descents == std::vector<int>{2, 5, 11} &&
         descent_composition(t) == comp({2, 3, 6, 7});
}

bool bijection_and_action_example() {
  const Word w({1, 1, 2, 3, 2, 2, 2, 3, 1});
  const StandardImmaculateTableau expected({{1, 2, 9}, {3, 5, 6, 7}, {4, 8}});
  if (yword_to_tableau(w) != expected) return false;

  const HeckeModule v = quotient_module(comp({3, 4, 2}));
  const int idx = v.index_of_word(w);
  if (idx < 0 || v.tableau(idx) != expected) return false;
  for (int i : {1, 4, 5, 6, 8}) {
    if (v.action().image(i, idx) != GeneratorImage::fixed()) return false;
  }
  if (v.action().image(3, idx) != GeneratorImage::zero()) return false;
  const auto via2 = v.act(2, idx);
  const auto via7 = v.act(7, idx);
  return via2 && via7 &&
         v.tableau(*via2) ==
             StandardImmaculateTableau({{1, 3, 9}, {2, 5, 6, 7}, {4, 8}}) &&
         v.tableau(*via7) ==
             StandardImmaculateTableau({{1, 2, 9}, {3, 5, 6, 8}, {4, 7}});
}

bool characteristic_sweep() {
  const auto results = parallel_map(compositions_up_to(6), [](const Composition& alpha) {
    BasisExpansion expected(ExpansionBasis::Monomial, alpha.weight());
    for (const auto& beta : compositions_of(alpha.weight())) {
      expected.add(beta, kostka(alpha, beta));
    }
    return fundamental_to_monomial(characteristic(quotient_module(alpha))) == expected;
  });
  return std::all_of(results.begin(), results.end(), [](bool ok) { return ok; });
}

bool relation_sweep() {
  const auto results = parallel_map(compositions_up_to(6), [](const Composition& alpha) {
    return verify_relations(word_module(alpha)).ok &&
           verify_relations(quotient_module(alpha)).ok;
  });
  return std::all_of(results.begin(), results.end(), [](bool ok) { return ok; });
}

bool closure_sweep() {
  const auto results = parallel_map(compositions_up_to(6), [](const Composition& alpha) {
    return nonyword_closure_check(alpha);
  });
  return std::all_of(results.begin(), results.end(), [](bool ok) { return ok; });
}

bool certificate_sweep() {
  const auto results = parallel_map(compositions_up_to(7), [](const Composition& alpha) {
    const auto cert = indecomposability_certificate(alpha);
    return cert.valid && cert.cyclic.complete &&
           cert.separation.size() == static_cast<std::size_t>(cert.dim - 1) &&
           cert.commutant_dim == 1;
  });
  return std::all_of(results.begin(), results.end(), [](bool ok) { return ok; });
}

bool decomposable_contrast() {
  return commutant_dimension(word_module(comp({1, 1}))) == 2;
}

bool induced_character_sweep() {
  const auto results = parallel_map(compositions_up_to(6), [](const Composition& alpha) {
    return fundamental_to_monomial(characteristic(word_module(alpha))) ==
           h_in_qsym(alpha);
  });
  return std::all_of(results.begin(), results.end(), [](bool ok) { return ok; });
}

bool figure_structure() {
  const long long expected_vertices = brute_force_yword_count({2, 2, 3});
  if (expected_vertices != 24) return false;

  const std::string dot = module_dot(quotient_module(comp({2, 2, 3})));
  std::set<std::string> vertices;
  std::set<std::string> edge_targets;
  bool has_zero_sink = false;
  std::istringstream lines(dot);
  std::string line;
  while (std::getline(lines, line)) {
    const auto arrow = line.find(" -> ");
    if (arrow != std::string::npos) {
      const auto open = line.find('"', arrow);
      const auto close = line.find('"', open + 1);
      edge_targets.insert(line.substr(open + 1, close - open - 1));
    } else if (line.size() > 4 && line.substr(0, 3) == "  \"" && line.back() == ';') {
      const std::string name = line.substr(3, line.size() - 5);
      if (name == "0") has_zero_sink = true;
      else vertices.insert(name);
    }
  }
  if (!has_zero_sink) return false;
  if (static_cast<long long>(vertices.size()) != expected_vertices) return false;

  std::vector<std::string> sources;
  for (const auto& name : vertices) {
    if (!edge_targets.contains(name)) sources.push_back(name);
  }
  return sources == std::vector<std::string>{"1122333"};  // the super-standard tableau
}

bool kostka_invertibility() {
  for (int n = 0; n <= 6; ++n) {
    const Rational det = kostka_table(n)->transition_matrix().determinant();
    if (det != 1 && det != -1) return false;
  }
  for (const auto& alpha : compositions_of(5)) {
    for (const auto& beta : compositions_of(5)) {
      const Rational value =
          pairing(immaculate_in_h(alpha), dual_immaculate_via_kostka(beta));
      if (value != (alpha == beta ? Rational(1) : Rational(0))) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "Kostka example: K([4,2,3],[3,1,2,3]) = 5 with the exact tableaux",
            1.0, kostka_example);
  criterion(2, "descents of the shape-[6,5,7] tableau are {2,5,11}, D(T) = [2,3,6,7]",
            60.0, descent_example);
  criterion(3, "bijection image of 112322231 and its generator images", 60.0,
            bijection_and_action_example);
  criterion(4, "quotient characteristics match the Kostka expansions for n <= 6",
            30.0, characteristic_sweep);
  criterion(5, "0-Hecke relations hold on word and quotient modules for n <= 6",
            60.0, relation_sweep);
  criterion(6, "non-Y-words span a submodule for n <= 6", 60.0, closure_sweep);
  criterion(7, "indecomposability certificates are valid for n <= 7", 300.0,
            certificate_sweep);
  criterion(8, "word module of [1,1] has a 2-dimensional commutant", 60.0,
            decomposable_contrast);
  criterion(9, "word characteristics match the h-products for n <= 6", 60.0,
            induced_character_sweep);
  criterion(10, "action graph of [2,2,3]: 24 vertices, zero sink, unique source",
            60.0, figure_structure);
  criterion(11, "Kostka determinants are units and the bases pair dually at n = 5",
            60.0, kostka_invertibility);
  return failures;
}
