#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "immaculate/composition.hpp"
#include "immaculate/expansion.hpp"
#include "immaculate/hecke.hpp"

namespace immaculate {

// A total order on the basis compatible with the reachability preorder:
// whenever some generator sequence maps basis element T to S != T, S occurs
// earlier. order[k] is the basis index at filtration step k.
struct FiltrationOrder {
  std::vector<int> order;
};

// Topological order of the moved-to graph, ties broken by basis index.
// Throws InvariantViolation if the graph had a cycle (it never does: moves
// strictly increase the inversion number of the underlying word).
FiltrationOrder filtration_order(const HeckeModule& m);

// The multiset of irreducible factors: each basis element contributes the
// composition whose descent set is { i : pi_i does not fix the element }.
std::map<Composition, long long> composition_factors(const HeckeModule& m);

// Image of the module class in QSym: the sum of F_beta over the composition
// factors, with multiplicity.
BasisExpansion characteristic(const HeckeModule& m);

struct CyclicGeneration {
  int seed = 0;
  bool complete = false;
  // witnesses[b] is a generator sequence with pi_sequence(seed) = b, applied
  // right to left; unreached indices stay empty.
  std::vector<std::optional<std::vector<int>>> witnesses;
};

// Breadth-first search along moved-to edges. Generator images of basis
// elements are basis elements or zero, so the reached set spans the cyclic
// submodule generated by the seed.
CyclicGeneration cyclic_generation(const HeckeModule& m, int seed);

// For every standard immaculate tableau P other than the super-standard one,
// a generator i with pi_i fixing the super-standard tableau but not P.
// Throws InvariantViolation if some P has no witness (it never does).
std::map<int, int> separation_witnesses(const HeckeModule& quotient);
std::map<int, int> separation_witnesses(const Composition& alpha);

// Dimension of { f : f P_i = P_i f for every generator }, the space of
// module endomorphisms, computed by exact linear algebra.
int commutant_dimension(const HeckeModule& m);

namespace detail {

// Nullspace of the stacked commutator system in the dim^2 matrix unknowns.
int commutant_dimension_stacked(const HeckeModule& m);

// Reduction for cyclic modules: an endomorphism f is determined by the image
// v = f(seed), and the commutation constraints are linear in v. Returns
// nullopt when the module is not cyclic from its canonical seed.
std::optional<int> commutant_dimension_cyclic(const HeckeModule& m);

// Basis of admissible seed images v = f(seed) for a cyclic module; the
// commutant dimension is its size.
std::optional<std::vector<std::vector<Rational>>> commutant_seed_space(const HeckeModule& m);

}  // namespace detail

struct IndecomposabilityCertificate {
  Composition alpha;
  int dim = 0;
  CyclicGeneration cyclic;
  std::map<int, int> separation;
  int commutant_dim = 0;
  bool valid = false;
  std::string failure;  // names the failing component; empty when valid
};

// Bundles cyclic generation from the super-standard tableau, the separation
// witnesses, and the commutant dimension of the quotient module. Valid iff
// generation is total, separation is total, and the commutant is the scalars.
IndecomposabilityCertificate indecomposability_certificate(const Composition& alpha);

}  // namespace immaculate
