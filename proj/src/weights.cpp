// weights.cpp -- Freudenthal characters and multiset plethysm.

#include "lieforge/weights.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <queue>

namespace lieforge {

long long WeightMultiset::size() const {
  long long n = 0;
  for (const auto& [w, m] : entries_) n += m;
  return n;
}

long long WeightMultiset::mult(const Weight& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

void WeightMultiset::add(const Weight& w, long long m) {
  if (int(w.size()) != rank_) throw std::invalid_argument("entry length != rank");
  if (m <= 0) throw std::invalid_argument("multiplicity must be positive");
  entries_[w] += m;
}

bool WeightMultiset::remove(const Weight& w, long long m) {
  auto it = entries_.find(w);
  if (it == entries_.end() || it->second < m) return false;
  it->second -= m;
  if (it->second == 0) entries_.erase(it);
  return true;
}

std::vector<Weight> WeightMultiset::expanded() const {
  std::vector<Weight> flat;
  flat.reserve(size_t(size()));
  for (const auto& [w, m] : entries_)
    for (long long i = 0; i < m; ++i) flat.push_back(w);
  return flat;
}

WeightMultiset WeightMultiset::negated() const {
  WeightMultiset r(rank_);
  for (const auto& [w, m] : entries_) r.add(neg(w), m);
  return r;
}

Weight WeightMultiset::entry_sum() const {
  Weight s(rank_, 0);
  for (const auto& [w, m] : entries_)
    for (int i = 0; i < rank_; ++i) s[i] += w[i] * int(m);
  return s;
}

long long WeightMultiset::zero_mult() const { return mult(Weight(rank_, 0)); }

bool WeightMultiset::multiplicity_free() const {
  for (const auto& [w, m] : entries_)
    if (m != 1) return false;
  return true;
}

IrreducibleRep::IrreducibleRep(SemisimpleAlgebra alg, Weight h)
    : algebra(std::move(alg)), highest(std::move(h)) {
  if (int(highest.size()) != algebra.total_rank())
    throw std::invalid_argument("highest weight length != algebra rank");
  if (!is_dominant(highest))
    throw std::invalid_argument("highest weight not dominant");
}

bool IrreducibleRep::faithful() const {
  int offset = 0;
  for (const auto& f : algebra.factors) {
    bool nontrivial = false;
    for (int i = 0; i < f.rank; ++i) nontrivial |= highest[offset + i] != 0;
    if (!nontrivial) return false;
    offset += f.rank;
  }
  return true;
}

namespace {

long long weyl_dim_simple(SimpleType t, const Weight& lambda) {
  const RootDatum& rd = root_datum(t);
  SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
  Weight lr = add(lambda, rd.weyl_vector);
  Rat result(1);
  for (const Weight& alpha : rd.positive_roots)
    result *= inner_product(alg, lr, alpha) / inner_product(alg, rd.weyl_vector, alpha);
  assert(result.denominator() == 1);
  return result.numerator();
}

long long lcm(long long a, long long b) { return a / std::gcd(a, b) * b; }

// Integer-scaled invariant form and inverse-Cartan data for one simple type;
// keeps the Freudenthal recursion in exact 64-bit arithmetic.
struct ScaledDatum {
  std::vector<std::vector<long long>> gram;  // scale * (w_i, w_j)
  long long scale;
  std::vector<std::vector<long long>> ainv;  // det * A^{-1}
  long long det;
};

const ScaledDatum& scaled_datum(SimpleType t) {
  static std::map<SimpleType, ScaledDatum> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;

  const RootDatum& rd = root_datum(t);
  int n = t.rank;
  ScaledDatum sd;
  sd.scale = 1;
  for (const auto& row : rd.gram)
    for (const Rat& g : row) sd.scale = lcm(sd.scale, g.denominator());
  sd.gram.assign(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sd.gram[i][j] = rd.gram[i][j].numerator() * (sd.scale / rd.gram[i][j].denominator());

  // det * A^{-1}: (w_i, w_j) = (A^{-1})_{ij} d_j gives A^{-1} from the gram.
  long long dd = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat a = rd.gram[i][j] / rd.symmetrizer[j];
      dd = lcm(dd, a.denominator());
    }
  sd.det = dd;
  sd.ainv.assign(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat a = rd.gram[i][j] / rd.symmetrizer[j] * Rat(dd);
      assert(a.denominator() == 1);
      sd.ainv[i][j] = a.numerator();
    }
  return cache.emplace(t, std::move(sd)).first->second;
}

long long dot_scaled(const ScaledDatum& sd, const Weight& v, const Weight& w) {
  long long s = 0;
  int n = int(v.size());
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < n; ++j) row += sd.gram[i][j] * w[j];
    s += v[i] * row;
  }
  return s;
}

// Freudenthal recursion for one simple factor.  The candidate set is the
// exact weight diagram: a vector belongs iff its dominant conjugate mu
// satisfies lambda - mu in the non-negative root cone.
WeightMultiset character_simple_uncached(SimpleType t, const Weight& lambda) {
  const RootDatum& rd = root_datum(t);
  const ScaledDatum& sd = scaled_datum(t);
  SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
  int n = t.rank;
  const Weight& rho = rd.weyl_vector;

  auto dominant_of = [&](Weight v) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i)
        if (v[i] < 0) {
          v = reflect_simple(rd, i, v);
          moved = true;
        }
    }
    return v;
  };

  // height in the root basis, times det(A); also the membership test.
  auto root_coords_scaled = [&](const Weight& d, std::vector<long long>& c) {
    for (int k = 0; k < n; ++k) {
      long long s = 0;
      for (int j = 0; j < n; ++j) s += d[j] * sd.ainv[j][k];
      c[k] = s;
    }
  };
  std::vector<long long> coords(n);
  auto in_diagram = [&](const Weight& v) {
    Weight delta = dominant_of(v);
    root_coords_scaled(sub(lambda, delta), coords);
    for (long long c : coords)
      if (c < 0) return false;
    return true;
  };

  std::set<Weight> seen{lambda};
  std::queue<Weight> q;
  q.push(lambda);
  std::vector<Weight> simple_roots;
  for (int i = 0; i < n; ++i)
    simple_roots.emplace_back(rd.cartan[i].begin(), rd.cartan[i].end());
  while (!q.empty()) {
    Weight v = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      Weight w = sub(v, simple_roots[i]);
      if (seen.count(w)) continue;
      if (!in_diagram(w)) continue;
      seen.insert(w);
      q.push(w);
    }
  }

  auto height = [&](const Weight& mu) {
    root_coords_scaled(sub(lambda, mu), coords);
    long long h = 0;
    for (long long c : coords) h += c;
    return h;
  };

  std::vector<Weight> dominants;
  for (const Weight& w : seen)
    if (is_dominant(w)) dominants.push_back(w);
  std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::map<Weight, long long> mult;  // on dominant weights
  auto mult_of = [&](const Weight& w) -> long long {
    auto it = mult.find(dominant_of(w));
    return it == mult.end() ? 0 : it->second;
  };

  Weight lr = add(lambda, rho);
  long long top_norm = dot_scaled(sd, lr, lr);
  for (const Weight& mu : dominants) {
    if (mu == lambda) {
      mult[lambda] = 1;
      continue;
    }
    long long rhs = 0;
    for (const Weight& alpha : rd.positive_roots) {
      // the diagram meets the line mu + k*alpha in a contiguous segment
      for (int k = 1;; ++k) {
        Weight w = mu;
        for (int j = 0; j < n; ++j) w[j] += k * alpha[j];
        if (!seen.count(w)) break;
        long long m = mult_of(w);
        if (m != 0) rhs += m * dot_scaled(sd, w, alpha);
      }
    }
    Weight mr = add(mu, rho);
    long long denom = top_norm - dot_scaled(sd, mr, mr);
    assert(denom > 0);
    assert((2 * rhs) % denom == 0);
    long long value = 2 * rhs / denom;
    assert(value > 0);
    mult[mu] = value;
  }

  WeightMultiset result(n);
  for (const auto& [mu, m] : mult)
    for (const Weight& w : weyl_orbit(alg, mu)) result.add(w, m);
  return result;
}

std::map<std::pair<SimpleType, Weight>, WeightMultiset>& char_cache() {
  static std::map<std::pair<SimpleType, Weight>, WeightMultiset> cache;
  return cache;
}
std::mutex char_mutex;

WeightMultiset character_simple(SimpleType t, const Weight& lambda) {
  {
    std::lock_guard<std::mutex> lock(char_mutex);
    auto it = char_cache().find({t, lambda});
    if (it != char_cache().end()) return it->second;
  }
  WeightMultiset ch = character_simple_uncached(t, lambda);
  std::lock_guard<std::mutex> lock(char_mutex);
  char_cache().emplace(std::make_pair(t, lambda), ch);
  return ch;
}

}  // namespace

long long weyl_dim(const IrreducibleRep& rep) {
  long long d = 1;
  int offset = 0;
  for (const auto& f : rep.algebra.factors) {
    Weight block(rep.highest.begin() + offset, rep.highest.begin() + offset + f.rank);
    d *= weyl_dim_simple(f, block);
    offset += f.rank;
  }
  return d;
}

WeightMultiset character(const IrreducibleRep& rep) {
  WeightMultiset acc;
  bool first = true;
  int offset = 0;
  for (const auto& f : rep.algebra.factors) {
    Weight block(rep.highest.begin() + offset, rep.highest.begin() + offset + f.rank);
    WeightMultiset ch = character_simple(f, block);
    acc = first ? ch : tensor_external(acc, ch);
    first = false;
    offset += f.rank;
  }
  assert(acc.size() == weyl_dim(rep));
  return acc;
}

WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("tensor: rank mismatch");
  WeightMultiset r(a.rank());
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) r.add(add(wa, wb), ma * mb);
  return r;
}

WeightMultiset tensor_external(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r(a.rank() + b.rank());
  for (const auto& [wa, ma] : a.entries())
    for (const auto& [wb, mb] : b.entries()) r.add(concat(wa, wb), ma * mb);
  return r;
}

WeightMultiset sym2(const WeightMultiset& x) {
  auto flat = x.expanded();
  WeightMultiset r(x.rank());
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i; j < flat.size(); ++j) r.add(add(flat[i], flat[j]));
  return r;
}

WeightMultiset wedge2(const WeightMultiset& x) {
  auto flat = x.expanded();
  WeightMultiset r(x.rank());
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i + 1; j < flat.size(); ++j) r.add(add(flat[i], flat[j]));
  return r;
}

WeightMultiset wedge3(const WeightMultiset& x) {
  auto flat = x.expanded();
  if (flat.size() < 3) throw std::invalid_argument("wedge3 needs at least 3 entries");
  WeightMultiset r(x.rank());
  for (size_t i = 0; i < flat.size(); ++i)
    for (size_t j = i + 1; j < flat.size(); ++j)
      for (size_t k = j + 1; k < flat.size(); ++k)
        r.add(add(add(flat[i], flat[j]), flat[k]));
  return r;
}

WeightMultiset dual(const WeightMultiset& x) { return x.negated(); }

bool is_self_dual(const WeightMultiset& x) { return x == x.negated(); }

std::vector<std::pair<Weight, long long>> decompose(const WeightMultiset& x,
                                                    const SemisimpleAlgebra& alg) {
  if (x.rank() != alg.total_rank())
    throw std::invalid_argument("decompose: rank mismatch");
  WeightMultiset rest = x;
  std::vector<std::pair<Weight, long long>> parts;
  const Weight rho(x.rank(), 1);
  while (!rest.empty()) {
    // A maximal-height entry of a Weyl-stable multiset is dominant; among
    // maximal entries pick the lexicographically greatest for determinism.
    const Weight* best = nullptr;
    Rat best_h(0);
    for (const auto& [w, m] : rest.entries()) {
      Rat h = inner_product(alg, w, rho);
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    Weight top = *best;
    if (!is_dominant(top))
      throw NotACharacter("maximal entry " + to_string(top) + " is not dominant");
    long long m = rest.mult(top);
    WeightMultiset ch = character(IrreducibleRep(alg, top));
    for (const auto& [w, cm] : ch.entries())
      if (!rest.remove(w, cm * m))
        throw NotACharacter("multiplicity of " + to_string(w) + " went negative");
    parts.emplace_back(top, m);
  }
  return parts;
}

std::string to_string(SelfDuality s) {
  switch (s) {
    case SelfDuality::Orthogonal: return "orthogonal";
    case SelfDuality::Symplectic: return "symplectic";
    case SelfDuality::NotSelfDual: return "not-self-dual";
  }
  return "?";
}

SelfDuality fs_type(const IrreducibleRep& rep) {
  WeightMultiset ch = character(rep);
  if (!is_self_dual(ch)) return SelfDuality::NotSelfDual;
  const Weight zero(ch.rank(), 0);
  // Trivial constituent = multiplicity of the zero dominant weight in the
  // full decomposition (the zero weight space can exceed it).
  for (const auto& [w, m] : decompose(sym2(ch), rep.algebra))
    if (w == zero) return SelfDuality::Orthogonal;
  for (const auto& [w, m] : decompose(wedge2(ch), rep.algebra))
    if (w == zero) return SelfDuality::Symplectic;
  throw std::logic_error("self-dual irreducible with no invariant form");
}

}  // namespace lieforge
