// weights.hpp -- weight-multiset calculus: dimensions, full characters via
// the Freudenthal recursion, tensor/plethysm at multiset level, decomposition
// into irreducibles, duality and orthogonal/symplectic type.
#pragma once

#include "lieforge/rootsys.hpp"

#include <map>
#include <optional>
#include <utility>

namespace lieforge {

// A finite multiset of integer weight vectors of a fixed rank.
class WeightMultiset {
 public:
  WeightMultiset() : rank_(0) {}
  explicit WeightMultiset(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
  }

  int rank() const { return rank_; }
  long long size() const;  // with multiplicity
  long long mult(const Weight& w) const;
  void add(const Weight& w, long long m = 1);
  // Subtracts m copies of w; returns false (leaving the multiset unspecified)
  // if fewer than m copies are present.
  bool remove(const Weight& w, long long m = 1);

  const std::map<Weight, long long>& entries() const { return entries_; }
  std::vector<Weight> expanded() const;
  bool empty() const { return entries_.empty(); }

  WeightMultiset negated() const;
  Weight entry_sum() const;          // sum of all entries with multiplicity
  long long zero_mult() const;       // multiplicity of the zero vector
  bool multiplicity_free() const;

  bool operator==(const WeightMultiset&) const = default;

 private:
  int rank_;
  std::map<Weight, long long> entries_;
};

struct IrreducibleRep {
  SemisimpleAlgebra algebra;
  Weight highest;  // dominant, concatenated per factor

  IrreducibleRep(SemisimpleAlgebra alg, Weight h);
  // Faithful at the algebra level: every simple factor acts nontrivially.
  bool faithful() const;
};

// Signalled by decompose() when the input is not the character of any
// finite-dimensional representation of the given algebra.
struct NotACharacter : std::runtime_error {
  explicit NotACharacter(const std::string& what) : std::runtime_error(what) {}
};

// Weyl dimension formula, exact.
long long weyl_dim(const IrreducibleRep& rep);

// Full character (all weights with multiplicity) via Freudenthal's recursion,
// memoised per (simple type, highest weight).
WeightMultiset character(const IrreducibleRep& rep);

// Pointwise-sum tensor product of two multisets of the same rank.
WeightMultiset tensor(const WeightMultiset& a, const WeightMultiset& b);
// External tensor product: ranks concatenate.
WeightMultiset tensor_external(const WeightMultiset& a, const WeightMultiset& b);

WeightMultiset sym2(const WeightMultiset& x);
WeightMultiset wedge2(const WeightMultiset& x);
WeightMultiset wedge3(const WeightMultiset& x);  // requires size >= 3

WeightMultiset dual(const WeightMultiset& x);
bool is_self_dual(const WeightMultiset& x);

// Iterated highest-weight subtraction.  Returns (dominant weight, mult)
// pairs, highest first; throws NotACharacter if a multiplicity goes negative
// or a maximal entry is not dominant.
std::vector<std::pair<Weight, long long>> decompose(const WeightMultiset& x,
                                                    const SemisimpleAlgebra& alg);

enum class SelfDuality { Orthogonal, Symplectic, NotSelfDual };

std::string to_string(SelfDuality s);

// Frobenius-Schur type of an irreducible: Orthogonal iff the trivial rep
// occurs in Sym^2 of the character, Symplectic iff in Wedge^2.
SelfDuality fs_type(const IrreducibleRep& rep);

}  // namespace lieforge
