#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieforge/caseengine.hpp"

#include <json.hpp>

#include <sstream>

using namespace lieforge;

TEST_CASE("conjugation signature counts") {
  CHECK(sym2_eig_counts({1, 1, 1, 1}) == std::pair<int, int>(0, 10));
  CHECK(sym2_eig_counts({1, 1, 1, -1}) == std::pair<int, int>(3, 7));
  CHECK(sym2_eig_counts({1, 1, -1, -1}) == std::pair<int, int>(4, 6));
  CHECK(sym2_eig_counts({1, -1, -1, -1}) == std::pair<int, int>(3, 7));
  CHECK(sym2_eig_counts({-1, -1, -1, -1}) == std::pair<int, int>(0, 10));
}

TEST_CASE("table 2") {
  CaseReport r = verify_table2();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  // the pairwise maximum is 8, strictly below 10
  CHECK(r.checks.back().detail.find("max 8 over 15 pairs") != std::string::npos);
}

TEST_CASE("per-case verifications") {
  for (const char* id : {"1", "2", "3", "5", "7", "spin_group", "rect_group"}) {
    CaseReport r = verify_case(id);
    CAPTURE(id);
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
  CHECK_THROWS_AS(verify_case("4"), std::invalid_argument);
  CHECK_THROWS_AS(verify_case("bogus"), std::invalid_argument);
}

TEST_CASE("wedge-cube identity has exactly twenty entries") {
  WeightMultiset std_a3 = character(parse_repspec("A3[1,0,0]"));
  WeightMultiset dual_a3 = character(parse_repspec("A3[0,0,1]"));
  auto mapped = [](const WeightMultiset& x) {
    WeightMultiset out(3);
    for (const auto& [w, m] : x.entries()) out.add(apply_a3_d3(w), m);
    return out;
  };
  WeightMultiset lhs = mapped(sym2(std_a3));
  WeightMultiset rhs_part = mapped(sym2(dual_a3));
  for (const auto& [w, m] : rhs_part.entries()) lhs.add(w, m);
  WeightMultiset rhs = wedge3(d3_model_std2());
  CHECK(lhs.size() == 20);
  CHECK(lhs == rhs);
}

TEST_CASE("full run: reports, determinism, coverage") {
  VerifyOptions opt;
  opt.ht_bound = 8;  // small scan keeps the unit test quick
  Summary a = verify_all(opt);
  CHECK(a.pass());

  std::vector<std::string> ids;
  for (const auto& r : a.reports) ids.push_back(r.id);
  CHECK(ids == std::vector<std::string>{
                   "core", "table1", "table2", "rect-classification", "chromium",
                   "case-1", "case-2", "case-3", "case-5", "case-7",
                   "case-spin-group", "case-rect-group", "ht-lemma", "sign-perm"});

  Summary b = verify_all(opt);
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));
}

TEST_CASE("json rendering is machine-readable") {
  CaseReport r = verify_table2();
  std::istringstream lines(render_json(r));
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("case"));
    CHECK(j.contains("check"));
    CHECK(j["pass"].is_boolean());
    ++parsed;
  }
  CHECK(parsed == int(r.checks.size()));
}
