// rectlab.cpp -- grid-witness search and the rectangular classification runs.

#include "lieforge/rectlab.hpp"

#include "lieforge/charlab.hpp"
#include "lieforge/reps.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace lieforge {

namespace {

// Rank of the lattice generated by pairwise entry differences.
int diff_rank(const WeightMultiset& x) {
  std::vector<std::vector<Rat>> rows;
  const Weight* base = nullptr;
  int rank = 0;
  for (const auto& [w, m] : x.entries()) {
    if (!base) {
      base = &w;
      continue;
    }
    std::vector<Rat> v;
    for (size_t i = 0; i < w.size(); ++i) v.push_back(Rat(w[i] - (*base)[i]));
    for (const auto& r : rows) {
      int p = -1;
      for (size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) { p = int(j); break; }
      if (p >= 0 && v[p] != 0) {
        Rat f = v[p] / r[p];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * r[j];
      }
    }
    bool nonzero = false;
    for (const auto& c : v) nonzero |= c != 0;
    if (nonzero) {
      rows.push_back(v);
      ++rank;
    }
  }
  return rank;
}

// Non-increasing factorizations of n into exactly r factors >= 2.
void factorizations(long long n, int r, int maxf, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (r == 0) {
    if (n == 1) out.push_back(cur);
    return;
  }
  for (int f = std::min<long long>(maxf, n); f >= 2; --f) {
    if (n % f != 0) continue;
    cur.push_back(f);
    factorizations(n / f, r - 1, f, cur, out);
    cur.pop_back();
  }
}

struct IntWitness {
  std::vector<int> lengths;
  Weight corner;                // an entry of x: image of the grid minimum
  std::vector<Weight> steps;    // integer steps between grid neighbours
};

RectWitness to_rect_witness(const IntWitness& iw) {
  RectWitness w;
  w.shape.lengths = iw.lengths;
  w.steps.resize(iw.steps.size());
  for (size_t i = 0; i < iw.steps.size(); ++i)
    for (int c : iw.steps[i]) w.steps[i].push_back(Rat(c, 2));
  // grid minimum (-d_1,...,-d_r) maps to the corner entry
  w.corner.assign(iw.corner.begin(), iw.corner.end());
  for (size_t i = 0; i < iw.steps.size(); ++i) {
    int d = iw.lengths[i] - 1;
    for (size_t j = 0; j < w.corner.size(); ++j)
      w.corner[j] += Rat(d) * w.steps[i][j];
  }
  return w;
}

// The lexicographically least entry is a corner vertex of any grid witness
// (a lex-minimum of an affine image of a box sits at a box vertex), and axis
// flips move any corner vertex onto the grid minimum.  Fixing the search
// corner there loses no witnesses.
std::optional<IntWitness> search_witness(const WeightMultiset& x) {
  if (!x.multiplicity_free()) return std::nullopt;
  long long n = x.size();
  if (n == 0) return std::nullopt;
  int r = diff_rank(x);
  if (n == 1) return IntWitness{{}, x.entries().begin()->first, {}};

  std::set<Weight> points;
  for (const auto& [w, m] : x.entries()) points.insert(w);
  const Weight corner = *points.begin();

  std::vector<Weight> deltas;
  for (const Weight& e : points)
    if (e != corner) deltas.push_back(sub(e, corner));
  std::sort(deltas.begin(), deltas.end());

  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  factorizations(n, r, int(n), cur, shapes);

  for (const auto& lengths : shapes) {
    std::vector<Weight> steps;
    std::set<Weight> grid{corner};

    std::function<bool(int)> dfs = [&](int axis) -> bool {
      if (axis == r) return true;
      int d = lengths[axis] - 1;
      for (const Weight& s : deltas) {
        // axes of equal length are interchangeable; keep steps increasing
        if (axis > 0 && lengths[axis] == lengths[axis - 1] && !(steps.back() < s))
          continue;
        std::vector<Weight> added;
        bool ok = true;
        for (const Weight& p : grid) {
          Weight q = p;
          for (int j = 1; j <= d && ok; ++j) {
            q = add(q, s);
            if (!points.count(q) || grid.count(q)) {
              ok = false;
              break;
            }
            added.push_back(q);
          }
          if (!ok) break;
        }
        // collisions among the added points themselves
        if (ok) {
          std::set<Weight> uniq(added.begin(), added.end());
          ok = uniq.size() == added.size();
        }
        if (!ok) continue;
        for (const Weight& q : added) grid.insert(q);
        steps.push_back(s);
        if (dfs(axis + 1)) return true;
        steps.pop_back();
        for (const Weight& q : added) grid.erase(q);
      }
      return false;
    };

    if (dfs(0)) {
      assert((long long)grid.size() == n);
      return IntWitness{lengths, corner, steps};
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const RectWitness& w, const WeightMultiset& x) {
  int r = int(w.shape.lengths.size());
  size_t dim = w.corner.size();
  if (dim != size_t(x.rank())) return false;
  WeightMultiset seen(x.rank());
  std::vector<int> g(r);
  std::function<bool(int)> walk = [&](int axis) -> bool {
    if (axis == r) {
      std::vector<Rat> p = w.corner;
      for (int i = 0; i < r; ++i)
        for (size_t j = 0; j < dim; ++j) p[j] += Rat(g[i]) * w.steps[i][j];
      Weight q(dim);
      for (size_t j = 0; j < dim; ++j) {
        if (p[j].denominator() != 1) return false;
        q[j] = int(p[j].numerator());
      }
      seen.add(q);
      return true;
    }
    int d = w.shape.lengths[axis] - 1;
    for (int v = -d; v <= d; v += 2) {
      g[axis] = v;
      if (!walk(axis + 1)) return false;
    }
    return true;
  };
  if (!walk(0)) return false;
  return seen == x;
}

std::optional<RectWitness> is_rectangular(const WeightMultiset& x) {
  auto iw = search_witness(x);
  if (!iw) return std::nullopt;
  RectWitness w = to_rect_witness(*iw);
  assert(verify_witness(w, x));
  return w;
}

GridShape lengths(const WeightMultiset& x) {
  auto w = is_rectangular(x);
  if (!w) throw NotRectangular("multiset is not rectangular");
  return w->shape;
}

bool is_hypercubic(const WeightMultiset& x) { return lengths(x).hypercubic(); }

std::optional<std::pair<WeightMultiset, WeightMultiset>> is_decomposable_rect(
    const WeightMultiset& x) {
  if (!is_rectangular(x)) throw NotRectangular("multiset is not rectangular");
  int rank = x.rank();
  long long n = x.size();
  for (int mask = 1; mask < (1 << rank) - 1; ++mask) {
    if (!(mask & 1)) continue;  // fix coordinate 0 on the left side
    std::vector<int> left, right;
    for (int i = 0; i < rank; ++i) (mask >> i & 1 ? left : right).push_back(i);

    std::set<Weight> a, b;
    std::set<std::pair<Weight, Weight>> pairs;
    for (const auto& [w, m] : x.entries()) {
      Weight pa, pb;
      for (int i : left) pa.push_back(w[i]);
      for (int i : right) pb.push_back(w[i]);
      a.insert(pa);
      b.insert(pb);
      pairs.insert({pa, pb});
    }
    if (a.size() < 2 || b.size() < 2) continue;
    if ((long long)a.size() * b.size() != n) continue;
    // n distinct pairs inside a set of size |a|*|b| = n: full product
    WeightMultiset ma(int(left.size())), mb(int(right.size()));
    for (const Weight& w : a) ma.add(w);
    for (const Weight& w : b) mb.add(w);
    if (is_rectangular(ma) && is_rectangular(mb)) return std::make_pair(ma, mb);
  }
  return std::nullopt;
}

namespace {

WeightMultiset merge(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r = a;
  for (const auto& [w, m] : b.entries()) r.add(w, m);
  return r;
}

WeightMultiset simple_char(Family f, int rank, const Weight& w) {
  return character(IrreducibleRep(SemisimpleAlgebra::simple(SimpleType(f, rank)), w));
}

std::string shape_str(const GridShape& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.lengths.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.lengths[i]);
  }
  return out + "}";
}

}  // namespace

CaseReport verify_rect_classification(int m_max) {
  if (m_max > 6) throw std::invalid_argument("classification verified up to rank 6");
  CaseReport report("rect-classification");

  auto check_family = [&](const std::string& name, const WeightMultiset& x,
                          std::vector<int> expect_lengths, bool expect_hypercubic,
                          bool expect_indecomposable) {
    auto w = is_rectangular(x);
    if (!w) {
      report.add(name, false, "not rectangular");
      return;
    }
    bool ok = verify_witness(*w, x);
    ok = ok && w->shape.lengths == expect_lengths;
    if (expect_hypercubic) ok = ok && w->shape.hypercubic();
    bool decomposable = is_decomposable_rect(x).has_value();
    ok = ok && (decomposable != expect_indecomposable);
    report.add(name, ok,
               shape_str(w->shape) + (w->shape.hypercubic() ? " hypercubic" : "") +
                   (decomposable ? " decomposable" : " indecomposable"));
  };

  for (int r = 1; r <= m_max; ++r)
    check_family("A1 Sym^" + std::to_string(r),
                 simple_char(Family::A, 1, {r}), {r + 1}, false, true);

  for (int r1 = 0; r1 + 1 <= m_max; ++r1) {
    int r2 = r1 + 1;
    check_family("A1 Sym^" + std::to_string(r1) + "+Sym^" + std::to_string(r2),
                 merge(simple_char(Family::A, 1, {r1}), simple_char(Family::A, 1, {r2})),
                 {2 * r1 + 3}, false, true);
  }

  check_family("D2 spin (A1xA1 model)", d2_model_spin(), {2, 2}, true, true);

  check_family("B2 std+spin",
               merge(simple_char(Family::B, 2, {1, 0}), simple_char(Family::B, 2, {0, 1})),
               {3, 3}, true, true);

  for (int m = 2; m <= m_max; ++m) {
    Weight spin(m, 0);
    spin[m - 1] = 1;
    check_family("B" + std::to_string(m) + " spin",
                 simple_char(Family::B, m, spin), std::vector<int>(m, 2), true, true);
  }

  check_family("A3 std+dual",
               merge(simple_char(Family::A, 3, {1, 0, 0}), simple_char(Family::A, 3, {0, 0, 1})),
               {2, 2, 2}, true, true);

  for (int m = 4; m <= m_max; ++m) {
    Weight hplus(m, 0), hminus(m, 0);
    hplus[m - 2] = 1;
    hminus[m - 1] = 1;
    check_family("D" + std::to_string(m) + " spin",
                 merge(simple_char(Family::D, m, hplus), simple_char(Family::D, m, hminus)),
                 std::vector<int>(m, 2), true, true);
  }

  return report;
}

CaseReport chromium_verify() {
  CaseReport report("chromium");
  auto classes = enumerate_composite(8);

  std::map<std::vector<int>, std::set<std::string>> groups;
  std::set<std::string> not_rect;
  for (const auto& cls : classes) {
    WeightMultiset ch = character(cls.rep);
    if (!essentially_self_dual(FormalCharacter(ch))) continue;
    std::string key = repspec(cls.rep);
    auto w = is_rectangular(ch);
    std::string line;
    if (w) {
      groups[w->shape.lengths].insert(key);
      bool dec = is_decomposable_rect(ch).has_value();
      line = "rectangular " + shape_str(w->shape) +
             (w->shape.hypercubic() ? " hypercubic" : "") +
             (dec ? " decomposable" : " indecomposable");
    } else {
      not_rect.insert(key);
      line = "not rectangular";
    }
    report.add(key, true, line);
  }

  report.add("lengths {8}", groups[{8}] == std::set<std::string>{"A1[7]"}, "A1[7]");
  report.add("lengths {2,4}", groups[{4, 2}] == std::set<std::string>{"A1[1]*A1[3]"},
             "A1[1]*A1[3]");
  report.add("lengths {2,2,2} (irreducible members)",
             groups[{2, 2, 2}] == std::set<std::string>{"A1[1]*A1[1]*A1[1]",
                                                        "A1[1]*C2[1,0]", "B3[0,0,1]"},
             "A1[1]*A1[1]*A1[1], A1[1]*C2[1,0], B3[0,0,1]");
  report.add("no other shapes", groups.size() == 3, std::to_string(groups.size()));
  report.add("not rectangular",
             not_rect == std::set<std::string>{"A2[1,1]", "C4[1,0,0,0]", "D4[1,0,0,0]",
                                               "D4[0,0,1,0]"},
             "A2-adjoint, C4-std, D4-std, D4-half-spin");

  // The two reducible members of the {2,2,2} family.
  WeightMultiset std_d2 =
      tensor_external(simple_char(Family::A, 1, {1}), d2_model_spin());
  auto w1 = is_rectangular(std_d2);
  report.add("A1-std (x) D2-spin", w1 && w1->shape.lengths == std::vector<int>{2, 2, 2} &&
                                       is_decomposable_rect(std_d2).has_value(),
             w1 ? shape_str(w1->shape) + " decomposable" : "not rectangular");

  WeightMultiset a3_pair =
      merge(simple_char(Family::A, 3, {1, 0, 0}), simple_char(Family::A, 3, {0, 0, 1}));
  auto w2 = is_rectangular(a3_pair);
  report.add("A3 std+dual", w2 && w2->shape.lengths == std::vector<int>{2, 2, 2} &&
                                !is_decomposable_rect(a3_pair).has_value(),
             w2 ? shape_str(w2->shape) + " indecomposable" : "not rectangular");

  return report;
}

}  // namespace lieforge
