#pragma once

#include <map>
#include <span>
#include <vector>

#include "liebranch/root_system.hpp"

namespace liebranch {

/// Weight -> multiplicity, keyed by semisimple coordinates.
using Character = std::map<IntVec, long long>;

/// Multiset of irreducibles over a fixed type. Keys carry central
/// coordinates when the type has a torus.
struct Decomposition {
  LieType type;
  std::map<Weight, long long> terms;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Rows are restrictions of g's fundamental weights. Columns listed in
/// central_cols are torus coordinates and are read as entry / central_den.
struct RestrictionMatrix {
  IntMatrix entries;
  std::vector<int> central_cols;
  long long central_den = 1;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const;
  int semisimple_cols() const { return cols() - static_cast<int>(central_cols.size()); }
  bool is_central(int col) const;

  /// Image of a g-weight.
  Weight apply(std::span<const int> w) const;
};

/// Weyl dimension formula.
BigInt dim(const RootSystem& rs, std::span<const int> w);
BigInt dim(const LieType& t, const Weight& w);

/// Multiplicities of the dominant weights of V(w) by Freudenthal's formula.
Character dominant_mults(const RootSystem& rs, const IntVec& w);
Character dominant_mults(const LieType& t, const Weight& w);

/// All weights of V(w) with multiplicity.
Character weight_multiset(const RootSystem& rs, const IntVec& w);
Character weight_multiset(const LieType& t, const Weight& w);

/// Splits the dominant part of a character into irreducibles by repeatedly
/// stripping the term of greatest height. Throws InvariantViolation if a
/// coefficient goes negative.
Character decompose_character(const RootSystem& rs, Character c);

/// Klimyk's formula.
Character tensor(const RootSystem& rs, const IntVec& a, const IntVec& b);
Decomposition tensor(const LieType& t, const Weight& a, const Weight& b);

/// Tensor product of all rows.
Decomposition branch_diag(const SimpleLieType& t, std::span<const Weight> rows);

/// Image of the full weight multiset of V(w) under R.
std::map<Weight, long long> restrict_multiset(const RootSystem& g, const IntVec& w, const RestrictionMatrix& r);

/// For each restricted weight, the g-weight it came from. Only defined when
/// R is injective on the weights of V(w); throws InvariantViolation otherwise.
using SourceMap = std::map<Weight, IntVec>;

/// Restriction of V(w) to k through R, grouped by central coordinates.
/// Checks that dimensions add up. The result type is k's type if known, times
/// a torus of rank |central_cols|.
Decomposition branch(const RootSystem& g, const IntVec& w, const RestrictionMatrix& r, const RootSystem& k,
                     SourceMap* sources = nullptr);

/// Σ mult · dim over the components.
BigInt total_dim(const RootSystem& k, const Decomposition& d);

}  // namespace liebranch
