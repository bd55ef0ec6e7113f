#pragma once

#include <string>

#include "liebranch/io.hpp"
#include "liebranch/reps.hpp"
#include "liebranch/rules.hpp"

namespace test_support {

using namespace liebranch;

inline Decomposition lie(const std::string& text, const LieType& type) { return parse_lie_text(text, type); }

inline Weight wt(const std::string& text) { return Weight(parse_weight(text)); }

/// Union of the weight multisets of all components, central values attached.
inline std::map<Weight, long long> component_weights(const RootSystem& k, const Decomposition& d) {
  std::map<Weight, long long> out;
  for (const auto& [w, m] : d.terms) {
    for (const auto& [v, mv] : weight_multiset(k, w.coords)) out[Weight(v, w.central)] += m * mv;
  }
  return out;
}

/// Restricted weight multiset of V(w) against the components of its branching.
inline bool character_conserved(const RestrictionSpec& spec, const IntVec& w) {
  const RootSystem g = spec.g_system();
  const Decomposition d = branch(spec, Weight(w));
  return restrict_multiset(g, w, spec.matrix) == component_weights(spec.k_system(), d);
}

inline IntVec unit(int n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

/// Catalog cases, with the classical families sampled at small parameters.
inline std::vector<CaseId> sampled_cases() {
  std::vector<CaseId> out;
  for (const auto& name : case_names()) {
    if (name == "A_D" || name == "A_B" || name == "A_C") {
      for (int m = 1; m <= 5; ++m) out.push_back(CaseId::make(name, {m}));
    } else if (name == "D_BB") {
      for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {2, 0}, {1, 1}, {0, 2}, {1, 2}, {2, 1}, {3, 0}}) {
        out.push_back(CaseId::make(name, {p, q}));
      }
    } else if (name == "B_DB") {
      for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {2, 0}, {2, 1}, {3, 0}, {4, 1}}) out.push_back(CaseId::make(name, {p, q}));
    } else if (name == "D_DD") {
      for (auto [p, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) out.push_back(CaseId::make(name, {p, q}));
    } else if (name == "C_CC") {
      for (auto [p, q] : {std::pair{2, 2}, {3, 1}, {1, 1}, {1, 2}, {2, 1}}) out.push_back(CaseId::make(name, {p, q}));
    } else {
      out.push_back(CaseId::make(name));
    }
  }
  return out;
}

/// Equal-rank lemma: w_s(beta_g) is a positive root with coefficient n_gamma
/// at gamma, and the constructed simple system pairs to cartan(k).
inline bool lemma_holds(const RestrictionSpec& spec) {
  if (!spec.ws_beta || spec.gamma == 0) return false;
  const RootSystem g = spec.g_system();
  const RootVec& v = *spec.ws_beta;
  if (!g.is_root(v)) return false;
  for (int c : v.coords) {
    if (c < 0) return false;
  }
  if (v.coords[spec.gamma - 1] != g.highest_root().coords[spec.gamma - 1]) return false;
  for (const auto& r : spec.k_simple_roots) {
    if (!g.is_root(r)) return false;
  }
  return pairing_matrix(g, spec.k_simple_roots) == cartan_matrix(spec.k) && spec.k_cartan == cartan_matrix(spec.k);
}

}  // namespace test_support
