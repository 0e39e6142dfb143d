// reps.cpp -- dimension-bounded enumeration of faithful irreducibles and the
// n=7/8 fixture verification.

#include "lieforge/reps.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace lieforge {

namespace {

long long dim_of(SimpleType t, const Weight& w) {
  static std::map<std::pair<SimpleType, Weight>, long long> memo;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(t, w);
  auto it = memo.find(key);
  if (it == memo.end())
    it = memo.emplace(key, weyl_dim(IrreducibleRep(SemisimpleAlgebra::simple(t), w))).first;
  return it->second;
}

long long min_fundamental_dim(SimpleType t) {
  long long best = -1;
  for (int i = 0; i < t.rank; ++i) {
    Weight w(t.rank, 0);
    w[i] = 1;
    long long d = dim_of(t, w);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// Families scanned for faithful irreducibles.  B2 is omitted: it is
// isomorphic to C2 (weights swap the two nodes), and C is the preferred
// label at rank 2; B enters at rank 3.
std::vector<SimpleType> scan_types(int dim_max) {
  std::vector<SimpleType> types;
  auto extend = [&](Family f, int from) {
    for (int k = from;; ++k) {
      SimpleType t(f, k);
      if (min_fundamental_dim(t) > dim_max) break;
      types.push_back(t);
    }
  };
  extend(Family::A, 1);
  if (dim_max >= 7) extend(Family::B, 3);
  extend(Family::C, 2);
  if (dim_max >= 8) extend(Family::D, 4);
  if (dim_max >= 7) types.push_back(SimpleType(Family::G, 2));
  return types;
}

// Diagram-automorphism orbit used for deduplication.  For D4 only the
// node-3/4 swap is used, keeping the standard and half-spin classes apart.
std::vector<Weight> outer_orbit_of(SimpleType t, const Weight& w) {
  std::set<Weight> orbit{w};
  if (t.family == Family::A && t.rank >= 2) {
    Weight r(w.rbegin(), w.rend());
    orbit.insert(r);
  } else if (t.family == Family::D) {
    Weight r = w;
    std::swap(r[t.rank - 2], r[t.rank - 1]);
    orbit.insert(r);
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<Weight> triality_orbit_of(SimpleType t, const Weight& w) {
  if (t.family != Family::D || t.rank != 4) return {};
  // Triality permutes the three outer nodes 1, 3, 4 (coordinates 0, 2, 3).
  std::set<Weight> orbit;
  int idx[3] = {0, 2, 3};
  int perm[3] = {0, 1, 2};
  std::sort(perm, perm + 3);
  do {
    Weight r = w;
    for (int i = 0; i < 3; ++i) r[idx[i]] = w[idx[perm[i]]];
    orbit.insert(r);
  } while (std::next_permutation(perm, perm + 3));
  return {orbit.begin(), orbit.end()};
}

Weight canonical_highest(SimpleType t, const Weight& w) {
  auto orbit = outer_orbit_of(t, w);
  return orbit.back();  // lexicographically greatest
}

// Dominant weights with weyl_dim <= dim_max form a staircase (the dimension
// is strictly monotone in every coordinate), explored by lattice BFS.
std::vector<Weight> dominant_weights_up_to(SimpleType t, int dim_max) {
  std::set<Weight> accepted;
  std::queue<Weight> q;
  Weight zero(t.rank, 0);
  accepted.insert(zero);
  q.push(zero);
  while (!q.empty()) {
    Weight w = q.front();
    q.pop();
    for (int i = 0; i < t.rank; ++i) {
      Weight v = w;
      v[i] += 1;
      if (accepted.count(v)) continue;
      if (dim_of(t, v) > dim_max) continue;
      accepted.insert(v);
      q.push(v);
    }
  }
  accepted.erase(zero);
  return {accepted.begin(), accepted.end()};
}

std::string factor_label(SimpleType t, long long dim) {
  return std::to_string(dim) + std::string(1, char(t.family)) + "_" +
         std::to_string(t.rank);
}

IrreducibleClass make_class(std::vector<std::pair<SimpleType, Weight>> factors) {
  // canonical order: by (dim, family, rank, weight)
  std::vector<std::tuple<long long, SimpleType, Weight>> keyed;
  for (auto& [t, w] : factors) keyed.emplace_back(dim_of(t, w), t, w);
  std::sort(keyed.begin(), keyed.end());

  std::vector<SimpleType> types;
  Weight highest;
  std::string label;
  std::vector<Weight> triality;
  for (size_t i = 0; i < keyed.size(); ++i) {
    auto& [d, t, w] = keyed[i];
    types.push_back(t);
    highest.insert(highest.end(), w.begin(), w.end());
    if (i) label += "x";
    label += factor_label(t, d);
    if (auto tri = triality_orbit_of(t, w); !tri.empty()) triality = tri;
  }
  IrreducibleRep rep(SemisimpleAlgebra(types), highest);
  IrreducibleClass cls{rep,
                       weyl_dim(rep),
                       rep.algebra.total_rank(),
                       fs_type(rep),
                       {},
                       triality,
                       label};
  if (keyed.size() == 1)
    cls.outer_orbit = outer_orbit_of(std::get<1>(keyed[0]), std::get<2>(keyed[0]));
  return cls;
}

}  // namespace

std::vector<IrreducibleClass> enumerate_simple(int dim_max) {
  if (dim_max > 64) throw std::invalid_argument("enumeration is bounded at 64");
  std::vector<IrreducibleClass> out;
  for (SimpleType t : scan_types(dim_max)) {
    for (const Weight& w : dominant_weights_up_to(t, dim_max)) {
      if (w != canonical_highest(t, w)) continue;
      out.push_back(make_class({{t, w}}));
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleClass& a, const IrreducibleClass& b) {
    return std::tuple(a.dim, a.rank, a.label, a.rep.highest) <
           std::tuple(b.dim, b.rank, b.label, b.rep.highest);
  });
  return out;
}

std::vector<IrreducibleClass> enumerate_composite(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("n must be in [2,8]");
  auto simples = enumerate_simple(n);
  std::vector<IrreducibleClass> out;

  std::vector<std::pair<SimpleType, Weight>> current;
  std::function<void(size_t, long long)> rec = [&](size_t start, long long remaining) {
    if (remaining == 1) {
      if (!current.empty()) out.push_back(make_class(current));
      return;
    }
    for (size_t i = start; i < simples.size(); ++i) {
      if (remaining % simples[i].dim != 0) continue;
      current.emplace_back(simples[i].rep.algebra.factors[0], simples[i].rep.highest);
      rec(i, remaining / simples[i].dim);
      current.pop_back();
    }
  };
  rec(0, n);

  std::sort(out.begin(), out.end(), [](const IrreducibleClass& a, const IrreducibleClass& b) {
    return std::tuple(a.rep.algebra.factors.size(), a.rank, a.label, a.rep.highest) <
           std::tuple(b.rep.algebra.factors.size(), b.rank, b.label, b.rep.highest);
  });
  return out;
}

IrreducibleRep parse_repspec(const std::string& spec) {
  std::vector<SimpleType> types;
  Weight highest;
  size_t pos = 0;
  while (pos < spec.size()) {
    char fam = spec[pos++];
    if (std::string("ABCDG").find(fam) == std::string::npos)
      throw std::invalid_argument("bad family in repspec: " + spec);
    size_t bracket = spec.find('[', pos);
    if (bracket == std::string::npos) throw std::invalid_argument("missing '['");
    int rank = std::stoi(spec.substr(pos, bracket - pos));
    size_t close = spec.find(']', bracket);
    if (close == std::string::npos) throw std::invalid_argument("missing ']'");
    std::istringstream coords(spec.substr(bracket + 1, close - bracket - 1));
    Weight w;
    std::string tokpart;
    while (std::getline(coords, tokpart, ',')) w.push_back(std::stoi(tokpart));
    if (int(w.size()) != rank) throw std::invalid_argument("weight length != rank");
    types.push_back(SimpleType(Family(fam), rank));
    highest.insert(highest.end(), w.begin(), w.end());
    pos = close + 1;
    if (pos < spec.size()) {
      if (spec[pos] != '*') throw std::invalid_argument("expected '*'");
      ++pos;
    }
  }
  return IrreducibleRep(SemisimpleAlgebra(types), highest);
}

std::string repspec(const IrreducibleRep& rep) {
  std::string s;
  int offset = 0;
  for (size_t f = 0; f < rep.algebra.factors.size(); ++f) {
    const SimpleType& t = rep.algebra.factors[f];
    if (f) s += "*";
    s += t.name() + "[";
    for (int i = 0; i < t.rank; ++i) {
      if (i) s += ",";
      s += std::to_string(rep.highest[offset + i]);
    }
    s += "]";
    offset += t.rank;
  }
  return s;
}

namespace {

// Canonical key of a class: per-factor outer canonicalization, factors in
// canonical order.
std::string class_key(const IrreducibleRep& rep) {
  std::vector<std::pair<SimpleType, Weight>> factors;
  int offset = 0;
  for (const SimpleType& t : rep.algebra.factors) {
    Weight w(rep.highest.begin() + offset, rep.highest.begin() + offset + t.rank);
    factors.emplace_back(t, canonical_highest(t, w));
    offset += t.rank;
  }
  std::vector<std::tuple<long long, SimpleType, Weight>> keyed;
  for (auto& [t, w] : factors) keyed.emplace_back(dim_of(t, w), t, w);
  std::sort(keyed.begin(), keyed.end());
  std::vector<SimpleType> types;
  Weight highest;
  for (auto& [d, t, w] : keyed) {
    types.push_back(t);
    highest.insert(highest.end(), w.begin(), w.end());
  }
  return repspec(IrreducibleRep(SemisimpleAlgebra(types), highest));
}

std::string fixture_path() {
  if (const char* env = std::getenv("LIEFORGE_FIXTURE_DIR"))
    return std::string(env) + "/table1.txt";
#ifdef LIEFORGE_FIXTURE_DIR
  return std::string(LIEFORGE_FIXTURE_DIR) + "/table1.txt";
#else
  return "fixtures/table1.txt";
#endif
}

FormalCharacter parse_inline_character(const std::string& text) {
  std::map<Weight, long long> entries;
  int rank = -1;
  std::istringstream vecs(text);
  std::string vec;
  while (std::getline(vecs, vec, ';')) {
    Weight w;
    std::istringstream cs(vec);
    std::string c;
    while (std::getline(cs, c, ',')) w.push_back(std::stoi(c));
    if (rank < 0) rank = int(w.size());
    if (int(w.size()) != rank) throw std::invalid_argument("ragged character");
    entries[w] += 1;
  }
  return FormalCharacter(rank < 0 ? 0 : rank, std::move(entries));
}

std::string compact_character(const FormalCharacter& fc) {
  std::string s;
  bool first = true;
  for (const auto& [w, m] : fc.entries)
    for (long long i = 0; i < m; ++i) {
      if (!first) s += ";";
      first = false;
      for (size_t j = 0; j < w.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(w[j]);
      }
    }
  return s;
}

}  // namespace

std::vector<Table1Row> table1_fixture() {
  std::ifstream in(fixture_path());
  if (!in) throw std::runtime_error("cannot open fixture " + fixture_path());
  std::vector<Table1Row> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '|')) cells.push_back(cell);
    if (cells.size() != 6) throw std::runtime_error("bad fixture line: " + line);
    Table1Row row;
    row.id = std::stoi(cells[0]);
    row.label = cells[1];
    row.repspec = cells[2];
    row.dim = std::stoll(cells[3]);
    row.rank = std::stoi(cells[4]);
    if (cells[5] != "omitted") row.character = parse_inline_character(cells[5]);
    rows.push_back(row);
  }
  return rows;
}

CaseReport verify_table1() {
  CaseReport report("table1");
  auto e7 = enumerate_composite(7);
  auto e8 = enumerate_composite(8);
  report.add("count n=7", e7.size() == 4, "found " + std::to_string(e7.size()));
  report.add("count n=8", e8.size() == 11, "found " + std::to_string(e8.size()));

  std::map<std::string, const IrreducibleClass*> by_key;
  for (const auto& c : e7) by_key[class_key(c.rep)] = &c;
  for (const auto& c : e8) by_key[class_key(c.rep)] = &c;

  auto rows = table1_fixture();
  report.add("fixture rows", rows.size() == 15, std::to_string(rows.size()) + " rows");

  std::set<int> not_self_dual;
  for (const auto& row : rows) {
    std::string tag = "row (" + std::to_string(row.id) + ")";
    std::string key = class_key(parse_repspec(row.repspec));
    auto it = by_key.find(key);
    if (it == by_key.end()) {
      report.add(tag, false, "no enumerated class matches " + key);
      continue;
    }
    const IrreducibleClass& cls = *it->second;
    bool ok = cls.dim == row.dim && cls.rank == row.rank && cls.label == row.label;
    std::string detail = cls.label + " dim=" + std::to_string(cls.dim) +
                         " rank=" + std::to_string(cls.rank) +
                         " " + to_string(cls.self_duality);
    if (row.character) {
      FormalCharacter computed(character(cls.rep));
      bool eq = equivalent(computed, *row.character);
      ok = ok && eq;
      detail += eq ? " char-ok" : " char-MISMATCH";
    } else {
      detail += " char=" + compact_character(rebase_to_image(FormalCharacter(character(cls.rep))));
    }
    if (cls.self_duality == SelfDuality::NotSelfDual) not_self_dual.insert(row.id);
    report.add(tag, ok, detail);
  }

  report.add("not-self-dual rows", not_self_dual == std::set<int>{4, 11, 15},
             "rows (4), (11), (15)");

  // Rows (13) and (14) are distinct classes here but lie in one triality
  // orbit; record the identification.
  const IrreducibleClass* hs = nullptr;
  for (const auto& c : e8)
    if (!c.triality_orbit.empty() && c.rep.highest != Weight{1, 0, 0, 0}) hs = &c;
  bool triality_ok = false;
  if (hs)
    for (const Weight& w : hs->triality_orbit)
      if (w == Weight{1, 0, 0, 0}) triality_ok = true;
  report.add("rows (13)/(14) triality", triality_ok,
             "standard and half-spin highest weights lie in one triality orbit");
  return report;
}

}  // namespace lieforge
