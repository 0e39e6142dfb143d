// test_support.hpp -- independent oracles used by the test suite.  Nothing
// here calls the Freudenthal recursion or the anchored A=B solver; these are
// the reference routes the implementation is checked against.
#pragma once

#include "lieforge/charlab.hpp"
#include "lieforge/htlemma.hpp"
#include "lieforge/weights.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>

namespace lieforge::testing {

// -- tensor-construction character oracle -----------------------------------
//
// Characters are built inside iterated tensor products of fundamental
// characters and decomposed with the Brauer-Klimyk rule (signed reflection of
// nu + w + rho into the dominant chamber), which needs only the fundamental
// weight multisets and the Weyl group.  Supported: A1, A2, B2.

// (sign, strictly dominant conjugate) of v under the Weyl group, or sign 0
// if v has a reflection-hyperplane stabiliser.
inline std::pair<int, Weight> dominant_conjugate(const SemisimpleAlgebra& alg,
                                                 Weight v) {
  int sign = 1;
  const SimpleType t = alg.factors.at(0);
  const RootDatum& rd = root_datum(t);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < t.rank; ++i) {
      if (v[i] == 0) return {0, v};
      if (v[i] < 0) {
        v = reflect_simple(rd, i, v);
        sign = -sign;
        moved = true;
      }
    }
  }
  return {sign, v};
}

// Fundamental characters from first principles: minuscule orbits, plus the
// classical identity wedge^2(spin) = std + trivial for B2.
inline WeightMultiset oracle_fundamental(SimpleType t, int node) {
  SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
  Weight f(t.rank, 0);
  f[node] = 1;
  auto orbit_char = [&](const Weight& w) {
    WeightMultiset m(t.rank);
    for (const Weight& o : weyl_orbit(alg, w)) m.add(o);
    return m;
  };
  if (t.family == Family::A && (t.rank == 1 || t.rank == 2)) return orbit_char(f);
  if (t.family == Family::B && t.rank == 2) {
    if (node == 1) return orbit_char(f);  // spin, minuscule
    WeightMultiset spin = orbit_char({0, 1});
    WeightMultiset w2 = wedge2(spin);
    if (!w2.remove(Weight{0, 0}, 1)) throw std::logic_error("missing invariant");
    return w2;  // std = wedge^2(spin) minus the symplectic form line
  }
  throw std::logic_error("oracle supports A1, A2, B2 only");
}

inline WeightMultiset oracle_character(SimpleType t, const Weight& lambda);

namespace detail {
inline std::map<std::pair<SimpleType, Weight>, WeightMultiset>& oracle_memo() {
  static std::map<std::pair<SimpleType, Weight>, WeightMultiset> memo;
  return memo;
}
}  // namespace detail

inline WeightMultiset oracle_character(SimpleType t, const Weight& lambda) {
  auto key = std::make_pair(t, lambda);
  auto& memo = detail::oracle_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
  WeightMultiset result(t.rank);
  if (is_zero(lambda)) {
    result.add(Weight(t.rank, 0));
    memo.emplace(key, result);
    return result;
  }
  int node = 0;
  while (lambda[node] == 0) ++node;
  Weight nu = lambda;
  nu[node] -= 1;

  WeightMultiset fund = oracle_fundamental(t, node);
  WeightMultiset x = tensor(oracle_character(t, nu), fund);

  // Brauer-Klimyk: constituents of V(nu) (x) fundamental.
  const Weight rho(t.rank, 1);
  std::map<Weight, long long> constituents;
  for (const auto& [w, mw] : fund.entries()) {
    Weight v = add(add(nu, w), rho);
    auto [sign, dom] = dominant_conjugate(alg, v);
    if (sign == 0) continue;
    constituents[sub(dom, rho)] += sign * mw;
  }
  if (constituents[lambda] != 1) throw std::logic_error("tensor oracle top constituent");
  for (const auto& [mu, c] : constituents) {
    if (mu == lambda) continue;
    if (c < 0) throw std::logic_error("tensor oracle negative constituent");
    if (c == 0) continue;
    WeightMultiset part = oracle_character(t, mu);
    for (const auto& [w, m] : part.entries())
      if (!x.remove(w, m * c)) throw std::logic_error("tensor oracle underflow");
  }
  result = x;
  memo.emplace(key, result);
  return result;
}

// -- random unimodular matrices ---------------------------------------------

inline LatticeIso random_unimodular(std::mt19937_64& rng, int rank, int steps = 12) {
  std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, rank - 1), coef(-2, 2), op(0, 2);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    switch (op(rng)) {
      case 0: {  // row_i += c * row_j
        if (i == j) break;
        int c = coef(rng);
        for (int k = 0; k < rank; ++k) m[i][k] += c * m[j][k];
        break;
      }
      case 1:
        std::swap(m[i], m[j]);
        break;
      default:
        for (int k = 0; k < rank; ++k) m[i][k] = -m[i][k];
    }
  }
  return LatticeIso(m);
}

// -- brute-force A=B solvers -------------------------------------------------

// Every non-decreasing 6-tuple over [lo, hi] with build_B == A.  Pure
// enumeration; used on small boxes.
inline std::vector<std::array<long long, 6>> solve_x_bruteforce_box(
    const std::vector<long long>& A, long long lo, long long hi) {
  std::vector<long long> sorted(A);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::array<long long, 6>> out;
  std::array<long long, 6> x{};
  std::function<void(int, long long)> rec = [&](int pos, long long from) {
    if (pos == 6) {
      if (build_B(x) == sorted) out.push_back(x);
      return;
    }
    for (long long v = from; v <= hi; ++v) {
      x[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, lo);
  return out;
}

// Exhaustive enumeration over provable candidate ranges: the three smallest
// values sum to min(A), the three largest to max(A), x3 <= x4, and the
// second-smallest triple sum is x1+x2+x4.  These are elementary facts about
// any sorted solution; the enumeration does not share the anchored solver's
// branch logic.
inline std::vector<std::array<long long, 6>> solve_x_oracle(std::vector<long long> A) {
  std::sort(A.begin(), A.end());
  long long lo_sum = A.front(), hi_sum = A.back();
  std::vector<std::array<long long, 6>> out;
  long long vlo = lo_sum - 2 * ((hi_sum + 2) / 3) - 2;
  long long vhi = hi_sum - 2 * (lo_sum / 3) + 2;
  std::vector<std::array<long long, 3>> lows;
  std::map<long long, std::vector<std::array<long long, 3>>> highs_by_min;
  for (long long a = vlo; a <= vhi; ++a)
    for (long long b = a; b <= vhi; ++b) {
      long long c = lo_sum - a - b;
      if (c >= b && c <= vhi) lows.push_back({a, b, c});
      long long d = hi_sum - a - b;
      if (d >= b && d <= vhi) highs_by_min[a].push_back({a, b, d});
    }
  for (const auto& l : lows) {
    auto it = highs_by_min.find(A[1] - l[0] - l[1]);  // x4 = A[1] - x1 - x2
    if (it == highs_by_min.end()) continue;
    for (const auto& h : it->second) {
      if (l[2] > h[0]) continue;
      std::array<long long, 6> x{l[0], l[1], l[2], h[0], h[1], h[2]};
      if (build_B(x) == A) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lieforge::testing
