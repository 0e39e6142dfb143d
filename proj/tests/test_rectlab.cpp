#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "lieforge/rectlab.hpp"
#include "lieforge/reps.hpp"

using namespace lieforge;
using namespace lieforge::testing;

namespace {

WeightMultiset char_of(const std::string& spec) {
  return character(parse_repspec(spec));
}

WeightMultiset merge(const WeightMultiset& a, const WeightMultiset& b) {
  WeightMultiset r = a;
  for (const auto& [w, m] : b.entries()) r.add(w, m);
  return r;
}

}  // namespace

TEST_CASE("grid witnesses") {
  auto w = is_rectangular(char_of("A1[7]"));
  REQUIRE(w);
  CHECK(w->shape.lengths == std::vector<int>{8});
  CHECK(verify_witness(*w, char_of("A1[7]")));

  auto spin = is_rectangular(char_of("B3[0,0,1]"));
  REQUIRE(spin);
  CHECK(spin->shape.lengths == std::vector<int>{2, 2, 2});
  CHECK(spin->shape.hypercubic());

  CHECK_FALSE(is_rectangular(char_of("A2[1,1]")));  // repeated zero weight
  CHECK_FALSE(is_rectangular(char_of("C4[1,0,0,0]")));
  CHECK_FALSE(is_rectangular(char_of("D4[1,0,0,0]")));
}

TEST_CASE("lengths and hypercubic") {
  CHECK(lengths(char_of("A1[1]*A1[3]")).lengths == std::vector<int>{4, 2});
  CHECK_FALSE(is_hypercubic(char_of("A1[1]*A1[3]")));

  WeightMultiset full_spin_d4 = merge(char_of("D4[0,0,1,0]"), char_of("D4[0,0,0,1]"));
  CHECK(lengths(full_spin_d4).lengths == std::vector<int>{2, 2, 2, 2});
  CHECK(is_hypercubic(full_spin_d4));

  CHECK(lengths(char_of("A1[2]*A1[2]")).lengths == std::vector<int>{3, 3});
  CHECK(is_hypercubic(char_of("A1[2]*A1[2]")));

  CHECK_THROWS_AS(lengths(char_of("A2[1,1]")), NotRectangular);
  CHECK_THROWS_AS(is_hypercubic(char_of("C4[1,0,0,0]")), NotRectangular);
}

TEST_CASE("decomposability") {
  auto cube = is_decomposable_rect(char_of("A1[1]*A1[1]*A1[1]"));
  REQUIRE(cube);
  CHECK(cube->first.size() * cube->second.size() == 8);

  WeightMultiset b2 = merge(char_of("B2[1,0]"), char_of("B2[0,1]"));
  CHECK(lengths(b2).lengths == std::vector<int>{3, 3});
  CHECK_FALSE(is_decomposable_rect(b2));

  CHECK_FALSE(is_decomposable_rect(d2_model_spin()));
  CHECK_THROWS_AS(is_decomposable_rect(char_of("A2[1,1]")), NotRectangular);
}

TEST_CASE("witness invariance under relabeling and negation") {
  std::mt19937_64 rng(9);
  for (const char* spec : {"A1[7]", "B3[0,0,1]", "A1[1]*A1[3]", "C4[1,0,0,0]"}) {
    WeightMultiset x = char_of(spec);
    auto base = is_rectangular(x);
    auto negated = is_rectangular(dual(x));
    CHECK(base.has_value() == negated.has_value());
    LatticeIso iso = random_unimodular(rng, x.rank());
    auto moved = is_rectangular(apply(x, iso));
    CHECK(base.has_value() == moved.has_value());
    if (base) {
      CHECK(base->shape == negated->shape);
      CHECK(base->shape == moved->shape);
      CHECK(base->shape.volume() == x.size());
      CHECK(verify_witness(*moved, apply(x, iso)));
    }
  }
}

TEST_CASE("classification families up to rank 6") {
  CaseReport r = verify_rect_classification(6);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  CHECK(r.checks.size() == 23);
  CHECK_THROWS_AS(verify_rect_classification(7), std::invalid_argument);
}

TEST_CASE("length grouping of the dimension-8 classes") {
  CaseReport r = chromium_verify();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}
