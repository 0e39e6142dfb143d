// caseengine.cpp -- the verification entry points.

#include "lieforge/caseengine.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace lieforge {

std::pair<int, int> sym2_eig_counts(const ConjugationSignature& sig) {
  int negs = 0, pos = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) (sig[i] * sig[j] < 0 ? negs : pos)++;
  return {negs, pos};
}

CaseReport verify_table2() {
  CaseReport report("table2");
  const std::vector<std::pair<ConjugationSignature, std::pair<int, int>>> rows = {
      {{1, 1, 1, 1}, {0, 10}},
      {{1, 1, 1, -1}, {3, 7}},
      {{1, 1, -1, -1}, {4, 6}},
      {{1, -1, -1, -1}, {3, 7}},
      {{-1, -1, -1, -1}, {0, 10}},
  };
  for (const auto& [sig, expect] : rows) {
    auto got = sym2_eig_counts(sig);
    std::ostringstream os;
    os << "(" << sig[0] << "," << sig[1] << "," << sig[2] << "," << sig[3] << ") -> ("
       << got.first << "," << got.second << ")";
    report.add("signature " + os.str(), got == expect);
  }
  // No two rows (repetition allowed) can contribute ten -1 eigenvalues in
  // total on the 20-dimensional sum.
  int max_sum = 0, pairs = 0;
  bool never_ten = true;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i; j < rows.size(); ++j) {
      ++pairs;
      int s = sym2_eig_counts(rows[i].first).first + sym2_eig_counts(rows[j].first).first;
      max_sum = std::max(max_sum, s);
      never_ten = never_ten && s != 10;
    }
  report.add("neg+neg != 10 over all pairs", never_ten && pairs == 15,
             "max " + std::to_string(max_sum) + " over " + std::to_string(pairs) +
                 " pairs");
  return report;
}

namespace {

WeightMultiset simple_char(Family f, int rank, const Weight& w) {
  return character(IrreducibleRep(SemisimpleAlgebra::simple(SimpleType(f, rank)), w));
}

std::string types_str(const std::vector<std::vector<int>>& types) {
  std::string s;
  for (size_t i = 0; i < types.size(); ++i) {
    if (i) s += " ";
    s += "{";
    for (size_t j = 0; j < types[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(types[i][j]);
    }
    s += "}";
  }
  return s;
}

const std::vector<std::vector<int>> kEightDimTypes = {
    {8}, {6, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}};

CaseReport case_1() {
  CaseReport report("case-1");
  auto parts = rank1_partitions(FormalCharacter(simple_char(Family::A, 1, {6})));
  bool ok = parts.size() == 2;
  std::set<std::vector<int>> ds;
  for (const auto& p : parts) ds.insert(p.ds);
  ok = ok && ds == std::set<std::vector<int>>{{6}, {3, 2}};
  report.add("deg-6 ladder splits", ok, "Z6 and Z2+Z3 only");
  return report;
}

CaseReport case_2() {
  CaseReport report("case-2");
  // No combinatorial exclusion exists for the 7-dimensional G2 class; it is
  // excluded by hypothesis.  Report its character data only.
  IrreducibleRep g2(SemisimpleAlgebra::simple(SimpleType(Family::G, 2)), {1, 0});
  FormalCharacter fc(character(g2));
  report.add("G2 class excluded by hypothesis", true,
             "dim=" + std::to_string(weyl_dim(g2)) + " " + to_string(fs_type(g2)) +
                 " zero-weights=" + std::to_string(zero_weight_count(fc)));
  return report;
}

CaseReport case_3() {
  CaseReport report("case-3");
  FormalCharacter fc(simple_char(Family::B, 3, {1, 0, 0}));
  report.add("one zero weight", zero_weight_count(fc) == 1);
  report.add("no zero-sum triple of nonzero weights",
             subset_sum_zero(fc, 3, true).empty());
  auto types = feasible_dimension_types(fc);
  bool has61 = std::find(types.begin(), types.end(), std::vector<int>{6, 1}) != types.end();
  bool two_singletons = false;
  for (const auto& t : types)
    two_singletons |= std::count(t.begin(), t.end(), 1) >= 2;
  report.add("dimension types", has61 && !two_singletons,
             "include {6,1}, exclude double characters: " + types_str(types));
  return report;
}

CaseReport case_5() {
  CaseReport report("case-5");
  auto parts = rank1_partitions(FormalCharacter(simple_char(Family::A, 1, {7})));
  bool ok = parts.size() == 1 && parts[0].ds == std::vector<int>{7};
  report.add("deg-7 ladder splits", ok, "Z7 only (indecomposable)");
  return report;
}

CaseReport case_7() {
  CaseReport report("case-7");
  SemisimpleAlgebra a2 = SemisimpleAlgebra::simple(SimpleType(Family::A, 2));
  WeightMultiset adj = simple_char(Family::A, 2, {1, 1});
  report.add("adjoint zero-weight multiplicity",
             adj.zero_mult() == 2 && adj.size() == 8,
             "multiplicity " + std::to_string(adj.zero_mult()));
  auto parts =
      decompose(tensor(simple_char(Family::A, 2, {1, 0}), simple_char(Family::A, 2, {0, 1})), a2);
  bool ok = parts.size() == 2;
  long long triv = 0;
  for (const auto& [w, m] : parts) {
    if (is_zero(w)) triv += m;
    ok = ok && (is_zero(w) || w == Weight{1, 1});
  }
  report.add("std (x) std-dual = trivial + adjoint", ok && triv == 1,
             "repeated weights forced in any lift product");
  return report;
}

CaseReport case_spin_group() {
  CaseReport report("case-spin-group");
  const std::vector<std::pair<std::string, WeightMultiset>> chars = {
      {"row (10)", simple_char(Family::B, 3, {0, 0, 1})},
      {"row (12)", simple_char(Family::C, 4, {1, 0, 0, 0})},
      {"row (13)", simple_char(Family::D, 4, {1, 0, 0, 0})},
  };
  for (const auto& [name, ch] : chars) {
    FormalCharacter fc(ch);
    report.add(name + " no zero weight, no zero-sum triple",
               zero_weight_count(fc) == 0 && subset_sum_zero(fc, 3).empty() &&
                   multiplicity_free(fc));
  }
  auto types = feasible_dimension_types(FormalCharacter(simple_char(Family::B, 3, {0, 0, 1})));
  report.add("row (10) dimension types", types == kEightDimTypes, types_str(types));

  // Dictionary: the A3 standard character lands on the even half-spin
  // character of the D3 model.
  WeightMultiset std_a3 = simple_char(Family::A, 3, {1, 0, 0});
  WeightMultiset dual_a3 = simple_char(Family::A, 3, {0, 0, 1});
  auto mapped = [&](const WeightMultiset& x) {
    WeightMultiset out(3);
    for (const auto& [w, m] : x.entries()) out.add(apply_a3_d3(w), m);
    return out;
  };
  report.add("A3->D3 dictionary", mapped(std_a3) == d3_model_half_spin2(0) &&
                                      mapped(dual_a3) == d3_model_half_spin2(1));

  WeightMultiset lhs = mapped(sym2(std_a3));
  WeightMultiset lhs2 = mapped(sym2(dual_a3));
  for (const auto& [w, m] : lhs2.entries()) lhs.add(w, m);
  WeightMultiset rhs = wedge3(d3_model_std2());
  report.add("sym^2(std) + sym^2(dual) = wedge^3 of the 6-dim model", lhs == rhs,
             std::to_string(lhs.size()) + "-entry multisets agree exactly");

  SemisimpleAlgebra a3 = SemisimpleAlgebra::simple(SimpleType(Family::A, 3));
  auto parts = decompose(tensor(std_a3, dual_a3), a3);
  bool ok = parts.size() == 2;
  for (const auto& [w, m] : parts) {
    if (is_zero(w)) ok = ok && m == 1;
    else ok = ok && m == 1 && weyl_dim(IrreducibleRep(a3, w)) == 15;
  }
  report.add("std (x) dual = character + 15-dim irreducible", ok);
  return report;
}

CaseReport case_rect_group() {
  CaseReport report("case-rect-group");
  report.add("length grouping", chromium_verify().pass());

  const std::vector<std::pair<std::string, WeightMultiset>> chars = {
      {"row (6)", character(parse_repspec("A1[1]*A1[3]"))},
      {"row (8)", character(parse_repspec("A1[1]*A1[1]*A1[1]"))},
      {"row (9)", character(parse_repspec("A1[1]*C2[1,0]"))},
  };
  for (const auto& [name, ch] : chars) {
    auto types = feasible_dimension_types(FormalCharacter(ch));
    report.add(name + " dimension types", types == kEightDimTypes, types_str(types));
  }

  SemisimpleAlgebra a1 = SemisimpleAlgebra::simple(SimpleType(Family::A, 1));
  WeightMultiset f = simple_char(Family::A, 1, {1});
  auto parts = decompose(tensor(f, dual(f)), a1);
  bool ok = parts.size() == 2;
  for (const auto& [w, m] : parts)
    ok = ok && m == 1 && (is_zero(w) || w == Weight{2});
  report.add("f (x) f-dual = trivial + 3-dim trace-zero part", ok);
  return report;
}

// Direct exercise of every public operation; keeps the coverage claim of the
// full run honest and doubles as a smoke test.
CaseReport core_smoke() {
  CaseReport report("core");
  SemisimpleAlgebra a1 = SemisimpleAlgebra::simple(SimpleType(Family::A, 1));
  SemisimpleAlgebra a2 = SemisimpleAlgebra::simple(SimpleType(Family::A, 2));

  report.add("root data", root_datum(SimpleType(Family::A, 2)).positive_roots.size() == 3 &&
                              root_datum(SimpleType(Family::G, 2)).positive_roots.size() == 6);
  report.add("weyl_orbit", weyl_orbit(a2, {1, 0}).size() == 3);
  report.add("inner_product", inner_product(a1, {1}, {1}) == Rat(1, 2));
  report.add("to_dominant", to_dominant(a2, {-1, 1}) == Weight{1, 0} ||
                                to_dominant(a2, {-1, 1}) == Weight{0, 1});

  IrreducibleRep sym6(a1, {6});
  WeightMultiset ch6 = character(sym6);
  report.add("weyl_dim / character", weyl_dim(sym6) == 7 && ch6.size() == 7);
  WeightMultiset zero(1);
  zero.add({0});
  report.add("tensor identity", tensor(zero, ch6) == ch6);
  report.add("tensor_external", tensor_external(ch6, ch6).rank() == 2);
  report.add("sym2/wedge2/wedge3 sizes",
             sym2(ch6).size() == 28 && wedge2(ch6).size() == 21 && wedge3(ch6).size() == 35);
  report.add("decompose round-trip",
             decompose(ch6, a1) ==
                 std::vector<std::pair<Weight, long long>>{{{6}, 1}});
  report.add("dual / self-dual", dual(ch6) == ch6 && is_self_dual(ch6));
  report.add("fs_type", fs_type(IrreducibleRep(a1, {1})) == SelfDuality::Symplectic);

  report.add("enumerate_simple", enumerate_simple(2).size() == 1);
  auto comp4 = enumerate_composite(4);
  report.add("enumerate_composite", comp4.size() == 4);
  report.add("table1_fixture", table1_fixture().size() == 15);
  report.add("repspec round-trip",
             repspec(parse_repspec("A1[1]*C2[1,0]")) == "A1[1]*C2[1,0]");

  FormalCharacter fc6(ch6);
  report.add("canonicalize idempotent", canonicalize(fc6) == canonicalize(canonicalize(fc6)));
  report.add("equivalent", equivalent(fc6, parse_character("rank 1\n-3\n-2\n-1\n0\n1\n2\n3\n")));
  report.add("rebase_to_image", rebase_to_image(fc6).rank == 1);
  report.add("zero_weight_count", zero_weight_count(fc6) == 1);
  report.add("subset_sum_zero", subset_sum_zero(fc6, 2, true).size() == 3);
  report.add("multiplicity_free", multiplicity_free(fc6));
  report.add("essentially_self_dual", essentially_self_dual(fc6) == Weight{0});
  report.add("rank1_partitions", rank1_partitions(fc6).size() == 2);
  report.add("feasible_dimension_types",
             feasible_dimension_types(fc6).front() == std::vector<int>{7});
  LatticeIso flip(std::vector<std::vector<int>>{{-1}});
  report.add("lattice iso", apply(fc6, flip) == fc6);
  report.add("serialize/parse", parse_character(serialize(fc6)) == fc6);
  FormalBiCharacter bc(1, 2, {{{1}, {1, 1}}, {{-1}, {-1, 1}}});
  report.add("bi-character", equivalent(bc, bc));

  WeightMultiset spin3 = simple_char(Family::B, 3, {0, 0, 1});
  auto w = is_rectangular(spin3);
  report.add("is_rectangular + witness", w && verify_witness(*w, spin3));
  report.add("lengths / hypercubic",
             lengths(spin3).lengths == std::vector<int>{2, 2, 2} && is_hypercubic(spin3));
  report.add("is_decomposable_rect", !is_decomposable_rect(spin3).has_value());

  report.add("no_3term_ap", !no_3term_ap({0, 1, 2}) && no_3term_ap({0, 1, 3, 7}));
  HtInstance bad{{0, 1, 2, 5}, 9, 0};
  report.add("condition_p", !condition_p(bad));
  auto first = first_admissible_instance(8);
  std::string first_str;
  if (first) {
    std::ostringstream os;
    os << "a=(" << first->a[0] << "," << first->a[1] << "," << first->a[2] << ","
       << first->a[3] << ") n=" << first->n;
    first_str = os.str();
  }
  report.add("first admissible instance", first.has_value(), first_str);
  std::array<long long, 6> x{0, 1, 2, 3, 4, 5};
  auto sols = solve_X(build_B(x));
  report.add("build_A/build_B/solve_X",
             build_A(bad).size() == 20 && build_B(x).size() == 20 &&
                 std::find(sols.begin(), sols.end(), x) != sols.end());
  return report;
}

}  // namespace

CaseReport verify_case(const std::string& id) {
  auto t0 = std::chrono::steady_clock::now();
  CaseReport r("invalid");
  if (id == "1") r = case_1();
  else if (id == "2") r = case_2();
  else if (id == "3") r = case_3();
  else if (id == "5") r = case_5();
  else if (id == "7") r = case_7();
  else if (id == "spin_group") r = case_spin_group();
  else if (id == "rect_group") r = case_rect_group();
  else throw std::invalid_argument("unknown case id: " + id);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Summary verify_all(const VerifyOptions& opt) {
  Summary s;
  auto timed = [&](CaseReport r, std::chrono::steady_clock::time_point t0) {
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    s.reports.push_back(std::move(r));
  };
  auto run = [&](auto&& fn) { timed(fn(), std::chrono::steady_clock::now()); };

  run([] { return core_smoke(); });
  run([] { return verify_table1(); });
  run([] { return verify_table2(); });
  run([] { return verify_rect_classification(6); });
  run([] { return chromium_verify(); });
  for (const char* id : {"1", "2", "3", "5", "7", "spin_group", "rect_group"})
    run([&] { return verify_case(id); });
  run([&] {
    auto lr = lemma_search(opt.ht_bound, opt.with_shifts, opt.emit_witnesses);
    return lr.report;
  });
  run([] { return signed_perm_report().report; });
  return s;
}

std::string render_text(const CaseReport& r) {
  std::ostringstream os;
  os << "== " << r.id << " ==\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "  [pass] " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (r.pass() ? "PASS " : "FAIL ") << r.id << " (" << r.checks.size()
     << " checks)\n";
  return os.str();
}

std::string render_text(const Summary& s) {
  std::ostringstream os;
  for (const auto& r : s.reports) os << render_text(r);
  os << (s.pass() ? "ALL PASS" : "FAILURES PRESENT") << " (" << s.reports.size()
     << " reports)\n";
  return os.str();
}

std::string render_json(const CaseReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    nlohmann::json j{{"case", r.id}, {"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    os << j.dump() << "\n";
  }
  return os.str();
}

std::string render_json(const Summary& s) {
  std::ostringstream os;
  for (const auto& r : s.reports) os << render_json(r);
  nlohmann::json j{{"summary", s.pass() ? "pass" : "fail"},
                   {"reports", s.reports.size()}};
  os << j.dump() << "\n";
  return os.str();
}

}  // namespace lieforge
