// htlemma.hpp -- exhaustive exact verification of the weight-arithmetic
// lemma: the admissibility condition on {a_i, n-a_i}, the pair-sum multiset A
// and triple-sum multiset B, completeness of the A=B solver, and the
// signed-permutation matrix analysis behind the r<=2 invertibility claim.
#pragma once

#include "lieforge/common.hpp"
#include "lieforge/report.hpp"

#include <array>
#include <optional>

namespace lieforge {

struct HtInstance {
  std::array<long long, 4> a{};
  long long n = 0;
  long long m = 0;
  auto operator<=>(const HtInstance&) const = default;

  // The eight weights {a_i, n - a_i}.
  std::array<long long, 8> weights() const;
};

// True iff no three pairwise-distinct values x,y,z in the multiset satisfy
// x + y = 2z.  Witnesses (sorted triples (x,z,y) with x<y, x+y=2z) are
// appended when a list is supplied.
bool no_3term_ap(const std::vector<long long>& values,
                 std::vector<std::array<long long, 3>>* witnesses = nullptr);

// Condition (P): the eight weights are pairwise distinct and contain no
// 3-term arithmetic progression.
bool condition_p(const HtInstance& inst);

// A = {a_i + a_j + m, 2n - (a_i + a_j) + m : 1 <= i <= j <= 4}, 20 values.
std::vector<long long> build_A(const HtInstance& inst);
// B = {x_i + x_j + x_k : 1 <= i < j < k <= 6}, 20 values.
std::vector<long long> build_B(const std::array<long long, 6>& x);

// All non-decreasing 6-tuples x with build_B(x) = A (as multisets).
// Complete: anchored at the provable identities B[0] = x1+x2+x3,
// B[1] = x1+x2+x4, B[18] = x3+x5+x6, B[19] = x4+x5+x6 and the third
// extreme positions; cross-checked against a brute-force oracle in tests.
std::vector<std::array<long long, 6>> solve_X(std::vector<long long> A);

struct LemmaReport {
  CaseReport report{"ht-lemma"};
  long long instances_scanned = 0;
  long long admissible_instances = 0;  // condition (P) holds
  long long solved_instances = 0;      // A = B had at least one solution
  long long solutions = 0;
  std::vector<std::pair<HtInstance, std::array<long long, 6>>> counterexamples;
  std::vector<std::string> witness_lines;
};

// Scans all instances with 0 = a1 < a2 < a3, a4 in [-bound, 2*bound],
// 0 <= n <= bound, m = 0; for every condition-(P) instance solves A = B and
// asserts every solution is distinct-valued.  With with_shifts, additionally
// re-verifies deterministic pseudo-random instances with m, n != 0 (scaled by
// 6 to stay integral).
LemmaReport lemma_search(int bound, bool with_shifts = false,
                         bool emit_witnesses = false);

// First condition-(P) instance in scan order (n, a2, a3, a4 ascending).
std::optional<HtInstance> first_admissible_instance(int bound);

struct SignedPermCase {
  std::array<int, 4> signs{};   // diagonal of U
  std::array<int, 4> perm{};    // g: column j of P carries e_j to e_{g(j)}
  int r = 0;                    // number of +1 signs
  long long det_K = 0;
  long long det_M = 0;
  int order = 0;                // least N with (UP)^N = eps * I
  int eps = 0;
  Rat h;                        // w^T K^{-1} 1
  Rat h_closed;                 // geometric-series closed form
  std::vector<long long> a_seq;  // a_m = w^T (UP)^m 1, m = 0..N-1
};

struct SignedPermReport {
  CaseReport report{"sign-perm"};
  std::vector<SignedPermCase> cases;  // all 384
};

// Iterates all 2^4 * 4! sign/permutation cases; checks the closed form for h,
// det(M) = (1-h) det(K), and h != 1 with det(M) != 0 whenever r <= 2.
SignedPermReport signed_perm_report();

}  // namespace lieforge
