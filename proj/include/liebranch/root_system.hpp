#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liebranch/lie_type.hpp"

namespace liebranch {

/// Cartan matrix of a simple type in Bourbaki order.
///
/// Orientation: cartan[i][j] = <psi_i, psi_j^vee>, so row i holds the
/// fundamental-weight coordinates of the simple root psi_i and a root with
/// simple-root coordinates c has weight coordinates c * cartan.
IntMatrix cartan_matrix(const SimpleLieType& t);

/// Cartan matrix for a family/rank pair read literally from the family
/// formula, including aliases (B1, C2, D2, D3, ...). Used by constructions
/// that are written for a whole family before canonicalization.
IntMatrix family_cartan_matrix(Family family, int rank);

/// Block-diagonal Cartan matrix of the semisimple part of a product type.
IntMatrix cartan_matrix(const LieType& t);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

/// Root datum of a (possibly reducible, possibly non-Bourbaki-ordered)
/// Cartan matrix. Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(const SimpleLieType& t);
  /// Semisimple part of t; torus coordinates are carried separately.
  explicit RootSystem(const LieType& t);
  /// Any generalized Cartan matrix of finite type.
  static RootSystem from_cartan(IntMatrix cartan);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::optional<LieType>& type() const { return type_; }

  const IntMatrix& cartan() const { return cartan_; }
  /// det_cartan * cartan^{-1}, exactly.
  const IntMatrix& i_cartan_num() const { return i_cartan_num_; }
  long long det_cartan() const { return det_cartan_; }

  /// Positive roots by increasing height; lexicographic within a height.
  const std::vector<RootVec>& pos_roots() const { return pos_roots_; }
  /// Weight coordinates of pos_roots(), same order.
  const std::vector<IntVec>& pos_root_weights() const { return pos_root_weights_; }
  /// Highest root of an irreducible system.
  const RootVec& highest_root() const;
  IntVec rho() const { return IntVec(cartan_.size(), 1); }

  /// (psi_i, psi_j) * sym_den, with long roots of each component of squared length 2.
  const IntMatrix& sym_form_num() const { return sym_form_num_; }
  long long sym_den() const { return sym_den_; }
  /// (psi_i, psi_i) / 2 * sym_den.
  const std::vector<long long>& half_length_num() const { return half_length_num_; }

  IntVec root_to_weight(const RootVec& r) const;
  Rational inner(const RootVec& a, const RootVec& b) const;
  /// sym_den * (w, r) for a weight w and a root r.
  long long pair_weight_root_num(std::span<const int> w, std::span<const int> r) const;
  /// <r, psi_i^vee> for a root r in simple-root coordinates.
  int coroot_pairing(std::span<const int> r, int i) const;
  /// Root coordinates of a weight, scaled by det_cartan.
  IntVec weight_to_root_num(std::span<const int> w) const;
  bool is_root(const RootVec& r) const;

  /// Connected components of the Dynkin diagram, each sorted ascending.
  const std::vector<std::vector<int>>& components() const { return components_; }

 private:
  explicit RootSystem(IntMatrix cartan, std::optional<LieType> type);

  IntMatrix cartan_;
  std::optional<LieType> type_;
  IntMatrix i_cartan_num_;
  long long det_cartan_ = 1;
  std::vector<RootVec> pos_roots_;
  std::vector<IntVec> pos_root_weights_;
  IntMatrix sym_form_num_;
  long long sym_den_ = 1;
  std::vector<long long> half_length_num_;
  std::vector<std::vector<int>> components_;
};

/// Determinant and adjugate of an integer matrix.
long long determinant(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& m);

}  // namespace liebranch
