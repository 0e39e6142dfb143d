// reps.hpp -- enumeration of all faithful irreducible representations of
// semisimple algebras of a given dimension, and the n=7/8 table fixture.
#pragma once

#include "lieforge/charlab.hpp"
#include "lieforge/report.hpp"
#include "lieforge/weights.hpp"

#include <optional>

namespace lieforge {

struct IrreducibleClass {
  IrreducibleRep rep;
  long long dim;
  int rank;
  SelfDuality self_duality;
  // Highest weights equivalent to this one under diagram automorphisms.  For
  // D4 only the node-3/4 swap is folded in; the full triality orbit is
  // recorded separately so the standard and half-spin classes stay distinct.
  std::vector<Weight> outer_orbit;
  std::vector<Weight> triality_orbit;  // nonempty only for D4 factors
  std::string label;                   // e.g. "7A_1", "2A_1x4C_2"
};

// All irreducibles of a single simple algebra with weyl_dim <= dim_max, one
// representative per diagram-automorphism orbit.  dim_max <= 64.
std::vector<IrreducibleClass> enumerate_simple(int dim_max);

// All faithful irreducibles of semisimple algebras of dimension exactly n
// (external tensor products of simple-factor irreducibles), deduplicated up
// to factor permutation and diagram automorphisms.  2 <= n <= 8.
std::vector<IrreducibleClass> enumerate_composite(int n);

// Rep-spec syntax: "A1[6]", "A1[1]*C2[1,0]", "D4[0,0,1,0]".
IrreducibleRep parse_repspec(const std::string& spec);
std::string repspec(const IrreducibleRep& rep);

struct Table1Row {
  int id = 0;
  std::string label;
  std::string repspec;
  long long dim = 0;
  int rank = 0;
  std::optional<FormalCharacter> character;  // as printed; empty if omitted
};

// Parses the versioned fixture file (fixtures/table1.txt by default;
// override with the LIEFORGE_FIXTURE_DIR environment variable).
std::vector<Table1Row> table1_fixture();

// Compares enumerate_composite(7) and (8) against the fixture: row labels,
// dims, ranks, character equivalence for the printed rows, and the
// self-duality column.
CaseReport verify_table1();

}  // namespace lieforge
