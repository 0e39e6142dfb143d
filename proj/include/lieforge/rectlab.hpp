// rectlab.hpp -- detection of multiplicity-free weight multisets carried onto
// products of centred ladders Z_{d_1} x ... x Z_{d_r} by a real-linear
// isomorphism, and verification of the classification of such multisets.
#pragma once

#include "lieforge/report.hpp"
#include "lieforge/weights.hpp"

#include <optional>

namespace lieforge {

struct NotRectangular : std::runtime_error {
  explicit NotRectangular(const std::string& what) : std::runtime_error(what) {}
};

struct GridShape {
  std::vector<int> lengths;  // each d_i + 1 >= 2, descending

  bool hypercubic() const {
    for (int l : lengths)
      if (l != lengths.front()) return false;
    return true;
  }
  long long volume() const {
    long long v = 1;
    for (int l : lengths) v *= l;
    return v;
  }
  auto operator<=>(const GridShape&) const = default;
};

// Witness of rectangularity: grid point g in Z_{d_1} x ... x Z_{d_r} maps to
// corner + sum g_i * steps_i.  Steps may be half-integral (adjacent entries
// differ by 2 in grid coordinates).
struct RectWitness {
  GridShape shape;
  std::vector<Rat> corner;
  std::vector<std::vector<Rat>> steps;
};

// Re-evaluates the witness map from scratch and checks it is a bijection
// onto the multiset (independent of the search that produced it).
bool verify_witness(const RectWitness& w, const WeightMultiset& x);

// Exhaustive witness search over factorizations of |x| and corner/step
// assignments drawn from entry differences.  Deterministic: the first witness
// in a fixed lexicographic search order is returned.
std::optional<RectWitness> is_rectangular(const WeightMultiset& x);

GridShape lengths(const WeightMultiset& x);  // throws NotRectangular
bool is_hypercubic(const WeightMultiset& x);  // throws NotRectangular

// Searches splits of the ambient coordinates for a bijective sum-set
// factorization into two rectangular multisets (the weight-level shadow of an
// external tensor decomposition).  Throws NotRectangular on non-rectangular
// input.
std::optional<std::pair<WeightMultiset, WeightMultiset>> is_decomposable_rect(
    const WeightMultiset& x);

// Confirms rectangularity, shapes, the hypercubic claims and
// (in)decomposability for every family in the classification, up to rank
// m_max <= 6.
CaseReport verify_rect_classification(int m_max);

// Groups the self-dual faithful irreducibles of dimension 8 by their length
// multisets {8} / {2,4} / {2,2,2} and checks the grouping, including the two
// reducible members of the {2,2,2} family.
CaseReport chromium_verify();

}  // namespace lieforge
