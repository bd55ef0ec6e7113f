#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liebranch/root_system.hpp"

namespace liebranch {

/// Strictly increasing 1-based node indices into the simple roots.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  SimpleSubset(std::vector<int> indices, int rank);

  /// All nodes except `removed`.
  static SimpleSubset complement_of(std::span<const int> removed, int rank);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int node) const;
  bool empty() const { return indices_.empty(); }

 private:
  std::vector<int> indices_;
};

/// Dominant chamber representative with the sign of the Weyl element used;
/// sign 0 when the representative lies on a wall.
struct SignedDominant {
  IntVec weight;
  int sign = 1;
};

/// s_i(w) for a 1-based node index.
IntVec reflect(const RootSystem& rs, int node, std::span<const int> w);
/// Reflection in place, 0-based index, no range check.
void reflect_in_place(const RootSystem& rs, int index, IntVec& w);

SignedDominant straighten(const RootSystem& rs, IntVec w);
IntVec dominant_representative(const RootSystem& rs, IntVec w);

/// Full Weyl orbit of a dominant weight, sorted.
std::vector<IntVec> orbit(const RootSystem& rs, const IntVec& dominant);

struct ParabolicImage {
  RootVec root;
  int word_length = 0;
};

/// Image of an S-dominant root under the longest element of W_S, i.e. the
/// S-antidominant point of its W_S-orbit, found by greedy descent at the
/// smallest index with positive pairing.
ParabolicImage parabolic_antidominant(const RootSystem& rs, const SimpleSubset& s, const RootVec& r);

/// Cartan type of a simple system together with the map to Bourbaki order:
/// perm[a] is the 0-based Bourbaki position of input a.
struct BourbakiOrder {
  LieType target;
  std::vector<int> perm;
};

/// Matrix of <c_a, c_b^vee> for candidate roots.
IntMatrix pairing_matrix(const RootSystem& rs, std::span<const RootVec> candidates);

/// Classifies a Cartan matrix in arbitrary node order. Among all valid
/// relabelings the one moving the fewest nodes wins, ties broken by the
/// lexicographically smallest perm. If `expected` is given, the factor
/// sequence of the target must equal it.
BourbakiOrder identify_cartan(const IntMatrix& pairing, const std::optional<LieType>& expected = std::nullopt);

BourbakiOrder bourbaki_reorder(const RootSystem& rs, std::span<const RootVec> candidates,
                               const std::optional<LieType>& expected = std::nullopt);

}  // namespace liebranch
