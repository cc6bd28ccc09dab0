#include "immaculate/analysis.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>

#include "immaculate/errors.hpp"
#include "immaculate/rational_matrix.hpp"

namespace immaculate {

FiltrationOrder filtration_order(const HeckeModule& m) {
  const int dim = m.dim();
  const int gens = m.action().generator_count();
  // b can be emitted once every moved-to image of b has been emitted.
  std::vector<int> pending(dim, 0);
  std::vector<std::vector<int>> dependents(dim);
  for (int b = 0; b < dim; ++b) {
    for (int i = 1; i <= gens; ++i) {
      const GeneratorImage& image = m.action().image(i, b);
      if (image.kind == ImageKind::MovedTo) {
        ++pending[b];
        dependents[image.target].push_back(b);
      }
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int b = 0; b < dim; ++b)
    if (pending[b] == 0) ready.push(b);
  FiltrationOrder out;
  out.order.reserve(dim);
  while (!ready.empty()) {
    const int b = ready.top();
    ready.pop();
    out.order.push_back(b);
    for (int d : dependents[b])
      if (--pending[d] == 0) ready.push(d);
  }
  if (static_cast<int>(out.order.size()) != dim)
    throw InvariantViolation("generator action graph has a cycle");
  return out;
}

std::map<Composition, long long> composition_factors(const HeckeModule& m) {
  std::map<Composition, long long> factors;
  const int gens = m.action().generator_count();
  for (int b = 0; b < m.dim(); ++b) {
    DescentSet descents;
    descents.n = m.n();
    for (int i = 1; i <= gens; ++i) {
      if (m.action().image(i, b).kind != ImageKind::Fixed) descents.elements.push_back(i);
    }
    ++factors[from_descent_set(descents)];
  }
  return factors;
}

BasisExpansion characteristic(const HeckeModule& m) {
  BasisExpansion out(ExpansionBasis::Fundamental, m.n());
  for (const auto& [beta, count] : composition_factors(m)) out.add(beta, count);
  return out;
}

CyclicGeneration cyclic_generation(const HeckeModule& m, int seed) {
  if (seed < 0 || seed >= m.dim()) throw std::invalid_argument("seed out of range");
  CyclicGeneration gen;
  gen.seed = seed;
  gen.witnesses.assign(m.dim(), std::nullopt);
  gen.witnesses[seed] = std::vector<int>{};
  std::deque<int> queue{seed};
  int reached = 1;
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (int i = 1; i <= m.action().generator_count(); ++i) {
      const GeneratorImage& image = m.action().image(i, b);
      if (image.kind != ImageKind::MovedTo || gen.witnesses[image.target]) continue;
      std::vector<int> path{i};
      path.insert(path.end(), gen.witnesses[b]->begin(), gen.witnesses[b]->end());
      gen.witnesses[image.target] = std::move(path);
      queue.push_back(image.target);
      ++reached;
    }
  }
  gen.complete = reached == m.dim();
  return gen;
}

std::map<int, int> separation_witnesses(const HeckeModule& quotient) {
  if (quotient.kind() != ModuleKind::Quotient)
    throw std::invalid_argument("separation witnesses are defined on quotient modules");
  const int super = quotient.canonical_seed();
  const auto descents = to_descent_set(quotient.alpha()).elements;
  std::vector<int> complement;
  for (int i = 1; i <= quotient.action().generator_count(); ++i) {
    if (!std::binary_search(descents.begin(), descents.end(), i)) complement.push_back(i);
  }
  for (int i : complement) {
    if (quotient.action().image(i, super).kind != ImageKind::Fixed)
      throw InvariantViolation("super-standard tableau not fixed off its descent set");
  }
  std::map<int, int> witnesses;
  for (int b = 0; b < quotient.dim(); ++b) {
    if (b == super) continue;
    int witness = 0;
    for (int i : complement) {
      if (quotient.action().image(i, b).kind != ImageKind::Fixed) {
        witness = i;
        break;
      }
    }
    if (witness == 0)
      throw InvariantViolation("no separating generator for basis element " +
                               quotient.label(b));
    witnesses.emplace(b, witness);
  }
  return witnesses;
}

std::map<int, int> separation_witnesses(const Composition& alpha) {
  return separation_witnesses(quotient_module(alpha));
}

namespace detail {

int commutant_dimension_stacked(const HeckeModule& m) {
  const int d = m.dim();
  const int gens = m.action().generator_count();
  if (d == 0) return 0;
  // Unknowns f_{r,c} at index r*d + c; one equation per (generator, entry).
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i <= gens; ++i) {
    std::vector<std::vector<int>> preimages(d);
    for (int k = 0; k < d; ++k) {
      if (const auto image = m.act(i, k)) preimages[*image].push_back(k);
    }
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        std::vector<Rational> row(static_cast<std::size_t>(d) * d, Rational(0));
        if (const auto image = m.act(i, c)) {
          row[static_cast<std::size_t>(r) * d + *image] += 1;
        }
        for (int k : preimages[r]) {
          row[static_cast<std::size_t>(k) * d + c] -= 1;
        }
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; }))
          rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return d * d;
  return static_cast<int>(RationalMatrix::from_rows(std::move(rows)).nullspace().size());
}

namespace {

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column

// Subtracts factor * pivot from row, keeping it sorted and zero-free.
SparseRow combine(const SparseRow& row, const SparseRow& pivot, const Rational& factor) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      out.emplace_back(pivot[b].first, -factor * pivot[b].second);
      ++b;
    } else {
      Rational value = row[a].second - factor * pivot[b].second;
      if (value != 0) out.emplace_back(row[a].first, std::move(value));
      ++a;
      ++b;
    }
  }
  return out;
}

// Incremental elimination over sparse rows; returns the rank.
class SparseEliminator {
 public:
  explicit SparseEliminator(int cols) : pivots_(cols) {}

  void add_row(SparseRow row) {
    while (!row.empty()) {
      const int lead = row.front().first;
      if (!pivots_[lead]) {
        pivots_[lead] = std::move(row);
        ++rank_;
        return;
      }
      const Rational factor = row.front().second / pivots_[lead]->front().second;
      row = combine(row, *pivots_[lead], factor);
    }
  }

  int rank() const noexcept { return rank_; }
  const std::vector<std::optional<SparseRow>>& pivots() const noexcept { return pivots_; }

 private:
  std::vector<std::optional<SparseRow>> pivots_;
  int rank_ = 0;
};

}  // namespace

// The columns of a candidate endomorphism are A_b v where A_b is the partial
// permutation carrying each basis element along the witness word of b; the
// commutation constraints F P_i = P_i F become integer-linear equations in
// the d entries of v alone.
std::optional<std::vector<std::vector<Rational>>> commutant_seed_space(const HeckeModule& m) {
  const CyclicGeneration gen = cyclic_generation(m, m.canonical_seed());
  if (!gen.complete) return std::nullopt;
  const int d = m.dim();
  const int gens = m.action().generator_count();

  // column_map[b][s] = A_b(s): where pi_{witness(b)} sends basis element s
  // (-1 for zero). Partial permutations compose to partial permutations.
  std::vector<std::vector<int>> column_map(d, std::vector<int>(d));
  for (int b = 0; b < d; ++b) {
    const auto& witness = *gen.witnesses[b];
    for (int s = 0; s < d; ++s) {
      std::optional<int> cur = s;
      for (auto it = witness.rbegin(); it != witness.rend() && cur; ++it)
        cur = m.act(*it, *cur);
      column_map[b][s] = cur ? *cur : -1;
    }
  }
  // preimage[b][r] = { s : A_b(s) = r }.
  std::vector<std::vector<std::vector<int>>> preimage(d, std::vector<std::vector<int>>(d));
  for (int b = 0; b < d; ++b)
    for (int s = 0; s < d; ++s)
      if (column_map[b][s] >= 0) preimage[b][column_map[b][s]].push_back(s);

  std::set<std::vector<std::pair<int, long long>>> rows;
  std::vector<long long> coeff(d, 0);
  for (int i = 1; i <= gens; ++i) {
    std::vector<std::vector<int>> gen_preimage(d);
    for (int k = 0; k < d; ++k)
      if (const auto image = m.act(i, k)) gen_preimage[*image].push_back(k);
    for (int c = 0; c < d; ++c) {
      const auto target = m.act(i, c);
      for (int r = 0; r < d; ++r) {
        // (F P_i)_{r,c} = (A_{target} v)_r, (P_i F)_{r,c} = sum over the
        // generator preimages k of r of (A_c v)_k.
        std::vector<int> touched;
        if (target) {
          for (int s : preimage[*target][r]) {
            if (coeff[s]++ == 0) touched.push_back(s);
          }
        }
        for (int k : gen_preimage[r]) {
          for (int s : preimage[c][k]) {
            if (coeff[s]-- == 0) touched.push_back(s);
          }
        }
        std::sort(touched.begin(), touched.end());
        std::vector<std::pair<int, long long>> row;
        for (int s : touched) {
          if (coeff[s] != 0) row.emplace_back(s, coeff[s]);
          coeff[s] = 0;
        }
        if (!row.empty()) rows.insert(std::move(row));
      }
    }
  }

  SparseEliminator eliminator(d);
  for (const auto& row : rows) {
    SparseRow sparse;
    sparse.reserve(row.size());
    for (const auto& [s, value] : row) sparse.emplace_back(s, Rational(value));
    eliminator.add_row(std::move(sparse));
  }

  // Back-substitute the echelon pivots to a basis of the solution space.
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivot_cols;
  for (int col = 0; col < d; ++col)
    if (eliminator.pivots()[col]) pivot_cols.push_back(col);
  for (int free = 0; free < d; ++free) {
    if (eliminator.pivots()[free]) continue;
    std::vector<Rational> v(d, Rational(0));
    v[free] = 1;
    for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
      const SparseRow& row = *eliminator.pivots()[*it];
      Rational sum = 0;
      for (std::size_t k = 1; k < row.size(); ++k) sum += row[k].second * v[row[k].first];
      v[*it] = -sum / row.front().second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<int> commutant_dimension_cyclic(const HeckeModule& m) {
  const auto basis = commutant_seed_space(m);
  if (!basis) return std::nullopt;
  return static_cast<int>(basis->size());
}

}  // namespace detail

int commutant_dimension(const HeckeModule& m) {
  // Small modules go through the stacked dim^2 nullspace directly; larger
  // cyclic ones through the seed-image reduction, which computes the same
  // space with dim unknowns instead of dim^2.
  constexpr int kStackedLimit = 12;
  if (m.dim() <= kStackedLimit) return detail::commutant_dimension_stacked(m);
  if (const auto dim = detail::commutant_dimension_cyclic(m)) return *dim;
  return detail::commutant_dimension_stacked(m);
}

IndecomposabilityCertificate indecomposability_certificate(const Composition& alpha) {
  const HeckeModule m = quotient_module(alpha);
  IndecomposabilityCertificate cert;
  cert.alpha = alpha;
  cert.dim = m.dim();
  cert.cyclic = cyclic_generation(m, m.canonical_seed());
  bool separation_total = true;
  try {
    cert.separation = separation_witnesses(m);
  } catch (const InvariantViolation&) {
    separation_total = false;
  }
  cert.commutant_dim = commutant_dimension(m);
  if (!cert.cyclic.complete) {
    cert.failure = "cyclic generation incomplete";
  } else if (!separation_total) {
    cert.failure = "separation witnesses missing";
  } else if (cert.commutant_dim != 1) {
    cert.failure = "commutant dimension is " + std::to_string(cert.commutant_dim);
  }
  cert.valid = cert.failure.empty();
  return cert;
}

}  // namespace immaculate
