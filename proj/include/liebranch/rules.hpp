#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liebranch/reps.hpp"
#include "liebranch/weyl.hpp"

namespace liebranch {

/// A restriction from g to k with the data used to build it.
struct RestrictionSpec {
  LieType g;
  /// Semisimple factors of k plus one torus rank per central column.
  LieType k;
  RestrictionMatrix matrix;
  /// Cartan matrix of k's semisimple part in the column order of `matrix`.
  /// Bourbaki order except for Levi cases, which keep g's node order.
  IntMatrix k_cartan;
  /// perm[a] = Bourbaki position of construction node a (0-based).
  std::vector<int> perm;
  /// Equal-rank cases: k's simple roots in g's root coordinates, column order.
  std::vector<RootVec> k_simple_roots;
  /// Equal-rank cases: the removed node and the image of the highest root.
  int gamma = 0;
  std::optional<RootVec> ws_beta;
  /// Levi cases: crossed nodes, ascending.
  std::vector<int> crossed;
  /// Case name, or "levi" / "bds" / "folding" / "composed" / "data".
  std::string provenance;

  RootSystem g_system() const { return RootSystem(g); }
  RootSystem k_system() const { return RootSystem::from_cartan(k_cartan); }
};

/// Named catalog entry with its integer parameters.
struct CaseId {
  std::string name;
  std::vector<int> params;

  /// Validates the name and parameter count and bounds.
  static CaseId make(std::string name, std::vector<int> params = {});
  std::string label() const;
};

/// All case names, in catalog order.
const std::vector<std::string>& case_names();
/// Number of integer parameters taken by a case; throws on unknown names.
int case_param_count(const std::string& name);

/// res_wt = i_Cartan(g) * res_rt * Cartan(k) / det_Cartan(g), exactly.
/// `k_cartan` is the Cartan matrix the root restrictions are written against.
IntMatrix res_wt_from_res_rt(const IntMatrix& g_cartan, const IntMatrix& res_rt, const IntMatrix& k_cartan);
RestrictionMatrix res_wt_from_res_rt(const SimpleLieType& g, const LieType& k, const IntMatrix& res_rt);

/// Folding and other outer cases: A_D, A_B, A_C, D_BB, D4_G2, D4_A2, E6_F4, E6_C4.
RestrictionSpec folding_spec(const CaseId& c);

/// Equal-rank subalgebra obtained by removing node gamma from the extended
/// diagram. `rows`, if given, lists for each k position the 1-based source
/// node, where gamma stands for w_s(beta_g); otherwise the rows are ordered by
/// bourbaki_reorder, optionally constrained to `expected`.
RestrictionSpec borel_de_siebenthal(const SimpleLieType& g, int gamma,
                                    const std::optional<std::vector<int>>& rows = std::nullopt,
                                    const std::optional<LieType>& expected = std::nullopt);

/// Restriction to the full-rank subsystem generated by `simple_roots`, given
/// in g's root coordinates and reordered to Bourbaki order.
RestrictionSpec subsystem_spec(const SimpleLieType& g, const std::vector<RootVec>& simple_roots,
                               const std::optional<LieType>& expected = std::nullopt);

RestrictionSpec catalog_spec(const CaseId& c);

/// Levi subalgebra for the crossed nodes: the uncrossed nodes in g's order,
/// then one central column per crossed node, taken from i_Cartan over
/// det_Cartan.
RestrictionSpec levi_spec(const SimpleLieType& g, const SimpleSubset& crossed);

enum class LeviOutput { native, baston_eastwood };

/// Native mode reports k-weights with grading values; Baston-Eastwood mode
/// reports each component by the g-weight of its highest weight vector.
Decomposition levi_branch(const SimpleLieType& g, const SimpleSubset& crossed, const Weight& w,
                          LeviOutput mode = LeviOutput::native);

/// Branches a g-weight through a spec; the result type is spec.k.
Decomposition branch(const RestrictionSpec& spec, const Weight& w);

/// Composition g -> k -> l.
RestrictionSpec compose(const RestrictionSpec& first, const RestrictionSpec& second);

/// Reads and writes the shipped data format
/// {g, k, rows, central_cols, central_den, provenance}.
RestrictionSpec spec_from_json(const std::string& text);
std::string spec_to_json(const RestrictionSpec& spec);

}  // namespace liebranch
