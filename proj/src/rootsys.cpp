// rootsys.cpp -- Cartan matrices, positive roots, Weyl orbits.

#include "lieforge/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <queue>

namespace lieforge {

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    // D2 and D3 are rejected; use the A1xA1 and A3 models instead.
    case Family::D: ok = r >= 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(r) +
                                " for family " + std::string(1, char(f)));
}

std::string SimpleType::name() const {
  return std::string(1, char(family)) + std::to_string(rank);
}

SemisimpleAlgebra::SemisimpleAlgebra(std::vector<SimpleType> fs) : factors(std::move(fs)) {
  if (factors.empty()) throw std::invalid_argument("algebra needs at least one factor");
}

int SemisimpleAlgebra::total_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

std::string SemisimpleAlgebra::name() const {
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].name();
  }
  return s;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(SimpleType t) {
  int n = t.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      a[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
      break;
    case Family::C:
      chain(n);
      a[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case Family::D:
      chain(n - 1);
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      break;
    case Family::G:
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

std::vector<Rat> symmetrizer_diag(SimpleType t) {
  int n = t.rank;
  std::vector<Rat> d(n, Rat(1));
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;  // last root short
      break;
    case Family::C:
      d[n - 1] = 2;  // last root long
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

// Inverse of the Cartan matrix, exact.
std::vector<std::vector<Rat>> invert(const std::vector<std::vector<int>>& m) {
  int n = int(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    assert(piv >= 0);
    std::swap(a[col], a[piv]);
    Rat p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

RootDatum build_datum(SimpleType t) {
  RootDatum rd{t, cartan_matrix(t), symmetrizer_diag(t), {}, {}, {}};
  int n = t.rank;
  rd.weyl_vector.assign(n, 1);

  // Gram matrix of the fundamental weights: (w_i, w_j) = (A^{-1})_{ij} d_j.
  auto ainv = invert(rd.cartan);
  rd.gram.assign(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rd.gram[i][j] = ainv[i][j] * rd.symmetrizer[j];

  // All roots: reflection closure of the simple roots.
  std::set<Weight> roots;
  std::queue<Weight> q;
  for (int i = 0; i < n; ++i) {
    Weight alpha(rd.cartan[i].begin(), rd.cartan[i].end());
    if (roots.insert(alpha).second) q.push(alpha);
  }
  while (!q.empty()) {
    Weight w = q.front();
    q.pop();
    for (int i = 0; i < n; ++i) {
      Weight r = reflect_simple(rd, i, w);
      if (roots.insert(r).second) q.push(r);
    }
  }

  // A root is positive iff its expansion over the simple roots is
  // non-negative.  With the row convention root = c * Cartan, the
  // coefficient vector is c = root * A^{-1}.
  for (const Weight& root : roots) {
    bool positive = true;
    std::vector<Rat> coeff(n, Rat(0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) coeff[k] += Rat(root[j]) * ainv[j][k];
    for (int k = 0; k < n; ++k)
      if (coeff[k] < 0) { positive = false; break; }
    if (positive) rd.positive_roots.push_back(root);
  }
  std::sort(rd.positive_roots.begin(), rd.positive_roots.end());
  assert(int(rd.positive_roots.size()) * 2 == int(roots.size()));
  return rd;
}

std::map<SimpleType, RootDatum>& datum_cache() {
  static std::map<SimpleType, RootDatum> cache;
  return cache;
}
std::mutex datum_mutex;

}  // namespace

const RootDatum& root_datum(SimpleType t) {
  std::lock_guard<std::mutex> lock(datum_mutex);
  auto& cache = datum_cache();
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_datum(t)).first;
  return it->second;
}

Weight reflect_simple(const RootDatum& rd, int i, const Weight& w) {
  Weight r = w;
  int c = w[i];
  if (c == 0) return r;
  for (int j = 0; j < rd.type.rank; ++j) r[j] -= c * rd.cartan[i][j];
  return r;
}

namespace {

// Apply the simple reflection `i` of factor `f` inside a concatenated weight.
Weight reflect_block(const SemisimpleAlgebra& alg, const Weight& w, int offset,
                     const RootDatum& rd, int i) {
  Weight r = w;
  int c = w[offset + i];
  if (c == 0) return r;
  for (int j = 0; j < rd.type.rank; ++j) r[offset + j] -= c * rd.cartan[i][j];
  return r;
}

}  // namespace

std::vector<Weight> weyl_orbit(const SemisimpleAlgebra& alg, const Weight& w) {
  if (int(w.size()) != alg.total_rank())
    throw std::invalid_argument("weight length does not match algebra rank");
  std::set<Weight> orbit{w};
  std::queue<Weight> q;
  q.push(w);
  while (!q.empty()) {
    Weight v = q.front();
    q.pop();
    int offset = 0;
    for (const auto& f : alg.factors) {
      const RootDatum& rd = root_datum(f);
      for (int i = 0; i < f.rank; ++i) {
        Weight r = reflect_block(alg, v, offset, rd, i);
        if (orbit.insert(r).second) q.push(r);
      }
      offset += f.rank;
    }
  }
  return {orbit.begin(), orbit.end()};
}

Rat inner_product(const SemisimpleAlgebra& alg, const Weight& v, const Weight& w) {
  if (int(v.size()) != alg.total_rank() || int(w.size()) != alg.total_rank())
    throw std::invalid_argument("weight length does not match algebra rank");
  Rat total(0);
  int offset = 0;
  for (const auto& f : alg.factors) {
    const RootDatum& rd = root_datum(f);
    for (int i = 0; i < f.rank; ++i)
      for (int j = 0; j < f.rank; ++j)
        total += Rat(v[offset + i]) * rd.gram[i][j] * Rat(w[offset + j]);
    offset += f.rank;
  }
  return total;
}

bool is_dominant(const Weight& w) {
  for (int c : w)
    if (c < 0) return false;
  return true;
}

Weight to_dominant(const SemisimpleAlgebra& alg, const Weight& w) {
  Weight v = w;
  bool changed = true;
  while (changed) {
    changed = false;
    int offset = 0;
    for (const auto& f : alg.factors) {
      const RootDatum& rd = root_datum(f);
      for (int i = 0; i < f.rank; ++i) {
        if (v[offset + i] < 0) {
          v = reflect_block(alg, v, offset, rd, i);
          changed = true;
        }
      }
      offset += f.rank;
    }
  }
  return v;
}

int positive_root_count(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank * (t.rank + 1) / 2;
    case Family::B:
    case Family::C: return t.rank * t.rank;
    case Family::D: return t.rank * (t.rank - 1);
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace lieforge
