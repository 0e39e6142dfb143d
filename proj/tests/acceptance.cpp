// acceptance.cpp -- end-to-end acceptance run.  Prints one pass/fail line per
// criterion; exit code 0 iff everything passes.

#include "test_support.hpp"

#include "lieforge/caseengine.hpp"

#include <chrono>
#include <iostream>

using namespace lieforge;
using namespace lieforge::testing;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool pass, double secs,
               const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", secs);
  std::cout << buf << "\n";
  if (!pass) ++failures;
}

template <typename F>
std::pair<bool, double> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = f();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {ok, secs};
}

WeightMultiset char_of(const std::string& spec) {
  return character(parse_repspec(spec));
}

}  // namespace

int main() {
  // 1. Table of irreducible classes at n = 7 and 8.
  {
    auto [ok, secs] = timed([] {
      CaseReport r = verify_table1();
      return r.pass();
    });
    criterion(1, "table 1 reproduction (4 + 11 classes, characters, self-duality)",
              ok && secs < 30.0, secs);
  }

  // 2. Conjugation signature table.
  {
    auto [ok, secs] = timed([] { return verify_table2().pass(); });
    criterion(2, "table 2 reproduction and pairwise -1-count bound", ok, secs);
  }

  // 3. Rectangular classification and the dimension-8 length grouping.
  {
    auto [ok, secs] = timed([] {
      return verify_rect_classification(6).pass() && chromium_verify().pass();
    });
    criterion(3, "rectangular classification up to rank 6 + length groups",
              ok && secs < 60.0, secs);
  }

  // 4. The 20-entry wedge-cube multiset identity.
  {
    auto [ok, secs] = timed([] {
      auto mapped = [](const WeightMultiset& x) {
        WeightMultiset out(3);
        for (const auto& [w, m] : x.entries()) out.add(apply_a3_d3(w), m);
        return out;
      };
      WeightMultiset lhs = mapped(sym2(char_of("A3[1,0,0]")));
      WeightMultiset other = mapped(sym2(char_of("A3[0,0,1]")));
      for (const auto& [w, m] : other.entries()) lhs.add(w, m);
      return lhs.size() == 20 && lhs == wedge3(d3_model_std2());
    });
    criterion(4, "sym^2(std) + sym^2(dual) = wedge^3 of the 6-dim model", ok, secs);
  }

  // 5. Weight-arithmetic lemma: exhaustive scan at bound 12 and solver
  //    completeness against the independent oracle at bound 8.
  {
    long long admissible = 0;
    auto [ok, secs] = timed([&] {
      LemmaReport rep = lemma_search(12);
      admissible = rep.admissible_instances;
      if (!(rep.admissible_instances >= 1 && rep.counterexamples.empty() &&
            rep.report.pass()))
        return false;
      // oracle agreement over every admissible instance of the bound-8 box
      for (long long n = 0; n <= 8; ++n)
        for (long long a2 = 1; a2 <= 16; ++a2)
          for (long long a3 = a2 + 1; a3 <= 16; ++a3)
            for (long long a4 = -8; a4 <= 16; ++a4) {
              HtInstance inst{{0, a2, a3, a4}, n, 0};
              if (!condition_p(inst)) continue;
              auto A = build_A(inst);
              if (solve_X(A) != solve_x_oracle(A)) return false;
            }
      return true;
    });
    criterion(5, "arithmetic lemma scan (bound 12) + solver oracle agreement",
              ok && secs < 600.0, secs,
              std::to_string(admissible) + " admissible instances");
  }

  // 6. Signed-permutation matrix analysis over all 384 cases.
  {
    auto [ok, secs] = timed([] { return signed_perm_report().report.pass(); });
    criterion(6, "signed-permutation closed form, det identity, r<=2 invertibility",
              ok, secs);
  }

  // 7. Character oracle equivalence and dimension conservation.
  {
    auto [ok, secs] = timed([] {
      for (SimpleType t : {SimpleType(Family::A, 1), SimpleType(Family::A, 2),
                           SimpleType(Family::B, 2)}) {
        SemisimpleAlgebra alg = SemisimpleAlgebra::simple(t);
        for (int a = 0; a <= 20; ++a)
          for (int b = 0; b <= (t.rank == 1 ? 0 : 20); ++b) {
            Weight w = t.rank == 1 ? Weight{a} : Weight{a, b};
            IrreducibleRep rep(alg, w);
            if (weyl_dim(rep) > 20) continue;
            if (character(rep) != oracle_character(t, w)) return false;
          }
      }
      auto classes = enumerate_simple(8);
      std::mt19937_64 rng(7);
      std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
      for (int iter = 0; iter < 100; ++iter) {
        const auto& a = classes[pick(rng)];
        const auto& b = classes[pick(rng)];
        WeightMultiset prod = tensor_external(character(a.rep), character(b.rep));
        std::vector<SimpleType> types = a.rep.algebra.factors;
        types.insert(types.end(), b.rep.algebra.factors.begin(),
                     b.rep.algebra.factors.end());
        SemisimpleAlgebra alg(types);
        long long total = 0;
        for (const auto& [w, m] : decompose(prod, alg))
          total += m * weyl_dim(IrreducibleRep(alg, w));
        if (total != a.dim * b.dim) return false;
      }
      return true;
    });
    criterion(7, "Freudenthal = tensor-construction oracle; decompose conserves dim",
              ok, secs);
  }

  // 8. The four case predicates.
  {
    auto [ok, secs] = timed([] {
      if (rank1_partitions(FormalCharacter(char_of("A1[6]"))).size() != 2) return false;
      if (rank1_partitions(FormalCharacter(char_of("A1[7]"))).size() != 1) return false;
      auto types = feasible_dimension_types(FormalCharacter(char_of("B3[0,0,1]")));
      if (types != std::vector<std::vector<int>>{
                       {8}, {6, 2}, {4, 4}, {4, 2, 2}, {2, 2, 2, 2}})
        return false;
      return char_of("A2[1,1]").zero_mult() == 2;
    });
    criterion(8, "ladder splits, cube dimension types, adjoint zero multiplicity",
              ok, secs);
  }

  // 9. Byte-identical reports across runs.
  {
    auto [ok, secs] = timed([] {
      Summary a = verify_all();
      Summary b = verify_all();
      return a.pass() && render_text(a) == render_text(b) &&
             render_json(a) == render_json(b);
    });
    criterion(9, "two consecutive full runs emit byte-identical reports", ok, secs);
  }

  std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (9 - failures) << "/9)\n";
  return failures == 0 ? 0 : 1;
}
