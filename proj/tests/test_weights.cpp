#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "lieforge/reps.hpp"

using namespace lieforge;
using namespace lieforge::testing;

namespace {

IrreducibleRep simple_rep(Family f, int rank, const Weight& w) {
  return IrreducibleRep(SemisimpleAlgebra::simple(SimpleType(f, rank)), w);
}

WeightMultiset from_list(int rank, std::vector<Weight> ws) {
  WeightMultiset m(rank);
  for (auto& w : ws) m.add(w);
  return m;
}

}  // namespace

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(simple_rep(Family::A, 1, {6})) == 7);
  CHECK(weyl_dim(simple_rep(Family::B, 3, {0, 0, 1})) == 8);
  CHECK(weyl_dim(simple_rep(Family::G, 2, {1, 0})) == 7);
  CHECK(weyl_dim(simple_rep(Family::A, 2, {0, 0})) == 1);
  CHECK(weyl_dim(simple_rep(Family::A, 2, {1, 1})) == 8);
  CHECK(weyl_dim(simple_rep(Family::C, 4, {1, 0, 0, 0})) == 8);
  CHECK(weyl_dim(simple_rep(Family::D, 4, {0, 0, 0, 1})) == 8);
  CHECK(weyl_dim(IrreducibleRep(
            SemisimpleAlgebra({SimpleType(Family::A, 1), SimpleType(Family::A, 1)}),
            {1, 3})) == 8);
}

TEST_CASE("characters: degree-6 symmetric power") {
  WeightMultiset ch = character(simple_rep(Family::A, 1, {6}));
  CHECK(ch == from_list(1, {{-6}, {-4}, {-2}, {0}, {2}, {4}, {6}}));
}

TEST_CASE("characters: adjoint of A2 via tensor oracle") {
  // std (x) dual minus one trivial summand
  WeightMultiset prod = tensor(character(simple_rep(Family::A, 2, {1, 0})),
                               character(simple_rep(Family::A, 2, {0, 1})));
  REQUIRE(prod.remove({0, 0}, 1));
  CHECK(character(simple_rep(Family::A, 2, {1, 1})) == prod);
  CHECK(character(simple_rep(Family::A, 2, {1, 1})).zero_mult() == 2);
}

TEST_CASE("characters: half-spin is a free orbit") {
  WeightMultiset hs = character(simple_rep(Family::D, 4, {0, 0, 0, 1}));
  CHECK(hs.size() == 8);
  CHECK(hs.multiplicity_free());
  SemisimpleAlgebra d4 = SemisimpleAlgebra::simple(SimpleType(Family::D, 4));
  CHECK(hs == from_list(4, weyl_orbit(d4, {0, 0, 0, 1})));
}

TEST_CASE("tensor-construction oracle equals Freudenthal (dim <= 20)") {
  for (SimpleType t : {SimpleType(Family::A, 1), SimpleType(Family::A, 2),
                       SimpleType(Family::B, 2)}) {
    CAPTURE(t.name());
    SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
    int count = 0;
    // all dominant weights with dimension <= 20 (rank <= 2, plain scan)
    for (int a = 0; a <= 20; ++a)
      for (int b = 0; b <= (t.rank == 1 ? 0 : 20); ++b) {
        Weight w = t.rank == 1 ? Weight{a} : Weight{a, b};
        IrreducibleRep rep(alg, w);
        if (weyl_dim(rep) > 20) continue;
        CHECK(character(rep) == oracle_character(t, w));
        ++count;
      }
    CHECK(count >= 7);
  }
}

TEST_CASE("tensor examples") {
  WeightMultiset zero(1);
  zero.add({0});
  WeightMultiset std2 = character(simple_rep(Family::A, 1, {1}));
  CHECK(tensor(zero, std2) == std2);
  WeightMultiset sq = tensor(std2, std2);
  CHECK(sq == from_list(1, {{2}, {0}, {0}, {-2}}));
  CHECK_THROWS_AS(tensor(std2, character(simple_rep(Family::A, 2, {1, 0}))),
                  std::invalid_argument);
  CHECK(tensor_external(std2, std2).size() == 4);
  CHECK(tensor_external(std2, std2).rank() == 2);
}

TEST_CASE("plethysm sizes and examples") {
  WeightMultiset four(1);
  for (int v : {3, 1, -1, -3}) four.add({v});
  CHECK(sym2(four).size() == 10);
  CHECK(wedge2(four).size() == 6);
  CHECK(wedge3(four).size() == 4);

  WeightMultiset pair(1);
  pair.add({5});
  pair.add({-5});
  CHECK(wedge2(pair) == from_list(1, {{0}}));
  CHECK_THROWS_AS(wedge3(pair), std::invalid_argument);
}

TEST_CASE("decompose") {
  SemisimpleAlgebra a1 = SemisimpleAlgebra::simple(SimpleType(Family::A, 1));
  SemisimpleAlgebra a3 = SemisimpleAlgebra::simple(SimpleType(Family::A, 3));

  // round trip
  for (int k : {0, 1, 5}) {
    WeightMultiset ch = character(simple_rep(Family::A, 1, {k}));
    auto parts = decompose(ch, a1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == std::pair<Weight, long long>({k}, 1));
  }

  auto parts = decompose(tensor(character(simple_rep(Family::A, 1, {1})),
                                character(simple_rep(Family::A, 1, {1}))),
                         a1);
  CHECK(parts == std::vector<std::pair<Weight, long long>>{{{2}, 1}, {{0}, 1}});

  // std (x) dual over A3: trivial + 15-dimensional adjoint
  auto a3parts = decompose(tensor(character(simple_rep(Family::A, 3, {1, 0, 0})),
                                  character(simple_rep(Family::A, 3, {0, 0, 1}))),
                           a3);
  REQUIRE(a3parts.size() == 2);
  CHECK(a3parts[0].first == Weight{1, 0, 1});
  CHECK(weyl_dim(IrreducibleRep(a3, a3parts[0].first)) == 15);
  CHECK(a3parts[1].first == Weight{0, 0, 0});

  CHECK(decompose(WeightMultiset(1), a1).empty());

  // non-characters are rejected
  WeightMultiset bad(1);
  bad.add({1});
  CHECK_THROWS_AS(decompose(bad, a1), NotACharacter);
  WeightMultiset bad2(1);
  bad2.add({2});
  bad2.add({-2});
  CHECK_THROWS_AS(decompose(bad2, a1), NotACharacter);
}

TEST_CASE("decompose conserves dimension on random pairs") {
  auto classes = enumerate_simple(8);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
  for (int iter = 0; iter < 100; ++iter) {
    const auto& a = classes[pick(rng)];
    const auto& b = classes[pick(rng)];
    WeightMultiset prod = tensor_external(character(a.rep), character(b.rep));
    std::vector<SimpleType> types = a.rep.algebra.factors;
    types.insert(types.end(), b.rep.algebra.factors.begin(), b.rep.algebra.factors.end());
    SemisimpleAlgebra alg(types);
    long long total = 0;
    for (const auto& [w, m] : decompose(prod, alg))
      total += m * weyl_dim(IrreducibleRep(alg, w));
    CHECK(total == a.dim * b.dim);
  }
}

TEST_CASE("duality and Frobenius-Schur type") {
  CHECK(fs_type(simple_rep(Family::A, 6, {1, 0, 0, 0, 0, 0})) == SelfDuality::NotSelfDual);
  CHECK(fs_type(simple_rep(Family::B, 3, {1, 0, 0})) == SelfDuality::Orthogonal);
  CHECK(fs_type(simple_rep(Family::C, 4, {1, 0, 0, 0})) == SelfDuality::Symplectic);
  CHECK(fs_type(simple_rep(Family::A, 1, {1})) == SelfDuality::Symplectic);
  CHECK(fs_type(simple_rep(Family::A, 1, {6})) == SelfDuality::Orthogonal);

  for (const auto& cls : enumerate_simple(8)) {
    WeightMultiset ch = character(cls.rep);
    CHECK(dual(dual(ch)) == ch);
    CHECK((cls.self_duality == SelfDuality::NotSelfDual) == !is_self_dual(ch));
  }
}

TEST_CASE("character size equals Weyl dimension across the enumeration") {
  for (const auto& cls : enumerate_composite(7))
    CHECK(character(cls.rep).size() == cls.dim);
  for (const auto& cls : enumerate_composite(8)) {
    CHECK(character(cls.rep).size() == cls.dim);
    CHECK(is_zero(character(cls.rep).entry_sum()));
  }
}
