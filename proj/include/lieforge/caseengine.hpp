// caseengine.hpp -- scripted reproduction of the case analysis: conjugation
// signature counts, the per-case character checks, and the top-level
// verification driver.
#pragma once

#include "lieforge/htlemma.hpp"
#include "lieforge/rectlab.hpp"
#include "lieforge/reps.hpp"

#include <array>

namespace lieforge {

// Eigenvalues of a complex conjugation acting on a 4-dimensional space.
using ConjugationSignature = std::array<int, 4>;

// (number of -1 eigenvalues, number of +1 eigenvalues) on Sym^2: the ten
// products e_i e_j, i <= j.
std::pair<int, int> sym2_eig_counts(const ConjugationSignature& sig);

CaseReport verify_table2();

// id in {"1", "2", "3", "5", "7", "spin_group", "rect_group"}.
CaseReport verify_case(const std::string& id);

struct VerifyOptions {
  int ht_bound = 12;
  bool with_shifts = false;
  bool emit_witnesses = false;
};

struct Summary {
  std::vector<CaseReport> reports;
  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }
};

// Runs every verification: smoke coverage of all public operations, table1,
// table2, the rectangular classification, the length grouping, the per-case
// checks, the weight-arithmetic lemma scan and the signed-permutation
// analysis.  Reports come back in a fixed order.
Summary verify_all(const VerifyOptions& opt = {});

// Rendered output is timing-free, so identical runs are byte-identical.
std::string render_text(const CaseReport& r);
std::string render_text(const Summary& s);
std::string render_json(const CaseReport& r);
std::string render_json(const Summary& s);

}  // namespace lieforge
