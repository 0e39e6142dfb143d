// charlab.hpp -- formal characters and bi-characters as lattice-coordinate-free
// objects, plus the character predicates driving the case exclusions.
//
// Equivalence semantics: characters are compared as characters of the *image*
// torus, i.e. entries are first re-expressed in a basis of the sublattice
// they generate, then compared up to GL_r(Z).  This is what reconciles, e.g.,
// a degree-6 symmetric power (naive exponents -6..6 step 2) with the printed
// exponent range -3..3.
#pragma once

#include "lieforge/weights.hpp"

#include <iosfwd>
#include <optional>

namespace lieforge {

struct FormalCharacter {
  int rank = 0;                          // ambient rank of the stored entries
  std::map<Weight, long long> entries;   // multiset of integer vectors

  FormalCharacter() = default;
  explicit FormalCharacter(const WeightMultiset& m)
      : rank(m.rank()), entries(m.entries()) {}
  FormalCharacter(int r, std::map<Weight, long long> e)
      : rank(r), entries(std::move(e)) {}

  long long size() const;
  std::vector<Weight> expanded() const;
  WeightMultiset multiset() const;
  bool operator==(const FormalCharacter&) const = default;
};

// A basis change of a full-rank lattice; |det| = 1 enforced.
struct LatticeIso {
  std::vector<std::vector<int>> matrix;
  explicit LatticeIso(std::vector<std::vector<int>> m);
};

long long det(const std::vector<std::vector<int>>& m);

// Entries transform as row vectors: e -> e * iso.matrix.
FormalCharacter apply(const FormalCharacter& fc, const LatticeIso& iso);
WeightMultiset apply(const WeightMultiset& x, const LatticeIso& iso);

// Re-express the entries in the Hermite basis of the sublattice they
// generate (the image-torus character lattice).  Cheap and deterministic; the
// result still depends on a basis choice, unlike canonicalize().
FormalCharacter rebase_to_image(const FormalCharacter& fc);

// Canonical form: rebase onto the generated sublattice, then minimise over
// GL_r(Z) by bounded exhaustive search.  Idempotent; equality of canonical
// forms is equivalence of formal characters.
FormalCharacter canonicalize(const FormalCharacter& fc);

bool equivalent(const FormalCharacter& a, const FormalCharacter& b);

long long zero_weight_count(const FormalCharacter& fc);

// All k-element sub-multisets whose entry sum is the zero vector; witnesses
// are sorted canonically.  With nonzero_only, entries equal to zero are
// excluded from the search.
std::vector<std::vector<Weight>> subset_sum_zero(const FormalCharacter& fc, int k,
                                                 bool nonzero_only = false);

bool multiplicity_free(const FormalCharacter& fc);

// If the multiset satisfies Xi = nu - Xi for some vector nu, returns nu.
std::optional<Weight> essentially_self_dual(const FormalCharacter& fc);

// A centred ladder Z_d = {-d, -d+2, ..., d-2, d} (d+1 values, step 2).
// rank1_partitions lists every way of writing a rank-1 character as a
// disjoint union of such ladders in one common coordinate; the coordinate may
// differ from the canonical one by an index-2 rescaling, which is recorded.
struct LadderPartition {
  int scale;            // 1 or 2: canonical entries were multiplied by this
  std::vector<int> ds;  // ladder indices, descending
  auto operator<=>(const LadderPartition&) const = default;
};

std::vector<LadderPartition> rank1_partitions(const FormalCharacter& fc);

// All integer partitions of |fc| realisable by splitting the multiset into
// parts with entry-sum zero (each part the character of a determinant-one
// block).  For rank-1 characters, parts must additionally be unions of
// centred ladders in a common coordinate.
std::vector<std::vector<int>> feasible_dimension_types(const FormalCharacter& fc);

// -- serialization ----------------------------------------------------------
// Plain structured text: "rank R" on the first line, then one sorted entry
// per line as space-separated coordinates, with " * m" appended when m > 1.
std::string serialize(const FormalCharacter& fc);
FormalCharacter parse_character(std::istream& in);
FormalCharacter parse_character(const std::string& text);

// -- formal bi-characters ---------------------------------------------------
// The chain T' <= T: each ambient line carries a pair (weight on the derived
// torus, weight on the full torus); the derived components must be the images
// of the full components under one linear projection.
struct FormalBiCharacter {
  int der_rank = 0;
  int full_rank = 0;
  std::vector<std::pair<Weight, Weight>> entries;  // sorted

  FormalBiCharacter(int dr, int fr, std::vector<std::pair<Weight, Weight>> e);
  bool operator==(const FormalBiCharacter&) const = default;
};

// Simultaneous equivalence: one unimodular pair (derived lattice, full
// lattice) commuting with the projections.
bool equivalent(const FormalBiCharacter& a, const FormalBiCharacter& b);

// -- low-rank identification dictionary -------------------------------------
// All D3-model data lives in orthogonal coordinates scaled by 2 so that
// half-spin weights are integral.
//
// a3_d3_matrix2: integer matrix M2 with w -> w*M2 carrying A3 fundamental
// coordinates into doubled D3 orthogonal coordinates; it maps the A3 standard
// character onto one half-spin character.  (M2/2 has determinant 1/2, the
// covolume ratio of the two weight lattices.)
const std::vector<std::vector<int>>& a3_d3_matrix2();
Weight apply_a3_d3(const Weight& w);              // doubled D3 coordinates
WeightMultiset d3_model_std2();                   // {+-2e_i}, 6 entries
WeightMultiset d3_model_half_spin2(int parity);   // (+-1)^3 with sign-product parity
WeightMultiset d2_model_spin();                   // {(+-1,0),(0,+-1)} over A1xA1

}  // namespace lieforge
