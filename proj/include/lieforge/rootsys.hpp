// rootsys.hpp -- exact Cartan/root data for the simple types A,B,C,D,G2 and
// Weyl-group orbit machinery.
//
// Conventions (fixed once, used everywhere):
//   * Bourbaki node ordering.  The Cartan matrix is A[i][j] = <alpha_i, alpha_j^vee>,
//     so row i of the Cartan matrix is the simple root alpha_i written in
//     fundamental-weight coordinates.  G2 is [[2,-1],[-3,2]].
//   * Weights are stored in fundamental-weight coordinates; all structural
//     invariants are integer checks.
//   * The invariant form is normalised so that short roots have squared
//     length 2 (only ratios matter downstream).
#pragma once

#include "lieforge/common.hpp"

#include <map>
#include <set>
#include <vector>

namespace lieforge {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int r);  // validates rank per family
  std::string name() const;     // e.g. "A3", "G2"
  auto operator<=>(const SimpleType&) const = default;
};

struct SemisimpleAlgebra {
  std::vector<SimpleType> factors;

  explicit SemisimpleAlgebra(std::vector<SimpleType> fs);
  static SemisimpleAlgebra simple(SimpleType t) { return SemisimpleAlgebra({t}); }
  int total_rank() const;
  std::string name() const;  // e.g. "A1xC2"
  auto operator<=>(const SemisimpleAlgebra&) const = default;
};

struct RootDatum {
  SimpleType type;
  std::vector<std::vector<int>> cartan;   // rank x rank
  std::vector<Rat> symmetrizer;           // d_i = |alpha_i|^2 / 2
  std::vector<Weight> positive_roots;     // fundamental-weight coordinates
  Weight weyl_vector;                     // (1,1,...,1)
  std::vector<std::vector<Rat>> gram;     // Gram matrix of fundamental weights
};

// Full datum for a simple type (cached; the reference stays valid for the
// lifetime of the program).
const RootDatum& root_datum(SimpleType t);

// Simple reflection s_i applied to a weight of a *simple* type.
Weight reflect_simple(const RootDatum& rd, int i, const Weight& w);

// Orbit of w under the Weyl group of alg (reflections act blockwise).
// Result is sorted lexicographically; it contains exactly one dominant vector.
std::vector<Weight> weyl_orbit(const SemisimpleAlgebra& alg, const Weight& w);

// Invariant inner product on the weight space of alg (block diagonal over
// the factors).
Rat inner_product(const SemisimpleAlgebra& alg, const Weight& v, const Weight& w);

bool is_dominant(const Weight& w);

// The unique dominant representative of the Weyl orbit of w.
Weight to_dominant(const SemisimpleAlgebra& alg, const Weight& w);

// Known positive-root counts, used as an independent cross-check in tests.
int positive_root_count(SimpleType t);

}  // namespace lieforge
