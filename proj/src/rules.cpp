#include "liebranch/rules.hpp"

#include <algorithm>

namespace liebranch {

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Fills k_cartan, k_simple_roots and the matrix from simple roots of k given
// in Bourbaki order: res_wt[i][j] = <xi_i, phi_j^vee> = c_i(phi_j) |psi_i|^2 / |phi_j|^2.
void finish_equal_rank(const RootSystem& rs, const std::vector<RootVec>& ordered, RestrictionSpec& spec) {
  const int n = rs.rank();
  const int m = static_cast<int>(ordered.size());
  spec.k_cartan = cartan_matrix(spec.k);
  if (pairing_matrix(rs, ordered) != spec.k_cartan) {
    throw InvariantViolation("constructed simple system does not pair to the Cartan matrix of " + spec.k.name());
  }
  spec.k_simple_roots = ordered;
  spec.matrix.entries.assign(n, IntVec(m, 0));
  for (int j = 0; j < m; ++j) {
    const Rational len = rs.inner(ordered[j], ordered[j]) * rs.sym_den();
    for (int i = 0; i < n; ++i) {
      Rational v = Rational(2 * ordered[j].coords[i] * rs.half_length_num()[i]) / len;
      if (v.denominator() != 1) throw InvariantViolation("equal-rank restriction is not integral");
      spec.matrix.entries[i][j] = static_cast<int>(v.numerator());
    }
  }
}

}  // namespace

IntMatrix res_wt_from_res_rt(const IntMatrix& g_cartan, const IntMatrix& res_rt, const IntMatrix& k_cartan) {
  RootSystem g = RootSystem::from_cartan(g_cartan);
  const int n = g.rank();
  const int m = static_cast<int>(k_cartan.size());
  if (static_cast<int>(res_rt.size()) != n) throw UsageError("res_rt needs one row per simple root of g");
  for (const auto& row : res_rt) {
    if (static_cast<int>(row.size()) != m) throw UsageError("res_rt needs one column per simple root of k");
  }
  IntMatrix out(n, IntVec(m, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      long long s = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < m; ++b) {
          s += static_cast<long long>(g.i_cartan_num()[i][a]) * res_rt[a][b] * k_cartan[b][j];
        }
      }
      if (s % g.det_cartan() != 0) throw UsageError("res_rt does not give an integral weight restriction");
      out[i][j] = static_cast<int>(s / g.det_cartan());
    }
  }
  return out;
}

RestrictionMatrix res_wt_from_res_rt(const SimpleLieType& g, const LieType& k, const IntMatrix& res_rt) {
  if (k.torus_rank() != 0) throw UsageError("res_rt construction needs a semisimple k");
  return RestrictionMatrix{res_wt_from_res_rt(cartan_matrix(g), res_rt, cartan_matrix(k)), {}, 1};
}

RestrictionSpec borel_de_siebenthal(const SimpleLieType& g, int gamma, const std::optional<std::vector<int>>& rows,
                                    const std::optional<LieType>& expected) {
  RootSystem rs(g);
  const int n = rs.rank();
  if (gamma < 1 || gamma > n) throw UsageError("node " + std::to_string(gamma) + " is out of range for " + g.name());
  const RootVec& beta = rs.highest_root();
  if (beta.coords[gamma - 1] < 2) {
    throw UsageError("node " + std::to_string(gamma) + " of " + g.name() +
                     " has highest-root coefficient 1; use a Levi subalgebra");
  }
  const SimpleSubset s = SimpleSubset::complement_of(std::vector<int>{gamma}, n);
  const ParabolicImage img = parabolic_antidominant(rs, s, beta);

  std::vector<RootVec> cand;
  for (int i = 0; i < n; ++i) {
    RootVec e{IntVec(n, 0)};
    e.coords[i] = 1;
    cand.push_back(i == gamma - 1 ? img.root : e);
  }

  RestrictionSpec spec;
  spec.g = LieType{g};
  spec.gamma = gamma;
  spec.ws_beta = img.root;
  spec.provenance = "bds";
  spec.perm.assign(n, -1);
  std::vector<RootVec> ordered(n);
  if (rows) {
    if (static_cast<int>(rows->size()) != n) throw UsageError("row assignment has the wrong length");
    for (int k = 0; k < n; ++k) {
      int src = (*rows)[k];
      if (src < 1 || src > n || spec.perm[src - 1] != -1) throw UsageError("row assignment is not a permutation");
      spec.perm[src - 1] = k;
      ordered[k] = cand[src - 1];
    }
    BourbakiOrder bo = identify_cartan(pairing_matrix(rs, ordered), expected);
    if (bo.perm != iota_vec(n)) throw InvariantViolation("listed rows are not in Bourbaki order");
    spec.k = bo.target;
  } else {
    BourbakiOrder bo = bourbaki_reorder(rs, cand, expected);
    for (int a = 0; a < n; ++a) ordered[bo.perm[a]] = cand[a];
    spec.perm = bo.perm;
    spec.k = bo.target;
  }
  finish_equal_rank(rs, ordered, spec);
  return spec;
}

RestrictionSpec subsystem_spec(const SimpleLieType& g, const std::vector<RootVec>& simple_roots,
                               const std::optional<LieType>& expected) {
  RootSystem rs(g);
  for (const auto& r : simple_roots) {
    if (!rs.is_root(r)) throw UsageError("subsystem generator is not a root of " + g.name());
  }
  BourbakiOrder bo = bourbaki_reorder(rs, simple_roots, expected);
  std::vector<RootVec> ordered(simple_roots.size());
  for (std::size_t a = 0; a < simple_roots.size(); ++a) ordered[bo.perm[a]] = simple_roots[a];
  RestrictionSpec spec;
  spec.g = LieType{g};
  spec.k = bo.target;
  spec.perm = bo.perm;
  spec.provenance = "subsystem";
  finish_equal_rank(rs, ordered, spec);
  return spec;
}

RestrictionSpec levi_spec(const SimpleLieType& g, const SimpleSubset& crossed) {
  RootSystem rs(g);
  const int n = rs.rank();
  if (crossed.empty()) throw UsageError("a Levi subalgebra needs at least one crossed node");
  for (int c : crossed.indices()) {
    if (c > n) throw UsageError("crossed node " + std::to_string(c) + " is out of range for " + g.name());
  }
  const SimpleSubset kept = SimpleSubset::complement_of(crossed.indices(), n);
  const int nk = static_cast<int>(kept.indices().size());
  const int nc = static_cast<int>(crossed.indices().size());

  RestrictionSpec spec;
  spec.g = LieType{g};
  spec.crossed = crossed.indices();
  spec.provenance = "levi";
  spec.k_cartan.assign(nk, IntVec(nk));
  for (int a = 0; a < nk; ++a) {
    for (int b = 0; b < nk; ++b) spec.k_cartan[a][b] = rs.cartan()[kept.indices()[a] - 1][kept.indices()[b] - 1];
  }
  BourbakiOrder bo = identify_cartan(spec.k_cartan);
  spec.k = bo.target * LieType({}, nc);
  spec.perm = bo.perm;

  spec.matrix.entries.assign(n, IntVec(nk + nc, 0));
  for (int a = 0; a < nk; ++a) spec.matrix.entries[kept.indices()[a] - 1][a] = 1;
  for (int t = 0; t < nc; ++t) {
    const int j = crossed.indices()[t] - 1;
    for (int i = 0; i < n; ++i) spec.matrix.entries[i][nk + t] = rs.i_cartan_num()[i][j];
    spec.matrix.central_cols.push_back(nk + t);
  }
  spec.matrix.central_den = rs.det_cartan();
  return spec;
}

Decomposition branch(const RestrictionSpec& spec, const Weight& w) {
  if (!w.central.empty()) throw UsageError("input weight must not carry central coordinates");
  Decomposition d = branch(spec.g_system(), w.coords, spec.matrix, spec.k_system());
  d.type = spec.k;
  return d;
}

Decomposition levi_branch(const SimpleLieType& g, const SimpleSubset& crossed, const Weight& w, LeviOutput mode) {
  RestrictionSpec spec = levi_spec(g, crossed);
  if (mode == LeviOutput::native) return branch(spec, w);
  if (!w.central.empty()) throw UsageError("input weight must not carry central coordinates");
  SourceMap sources;
  Decomposition d = branch(spec.g_system(), w.coords, spec.matrix, spec.k_system(), &sources);
  Decomposition out{spec.g, {}};
  for (const auto& [comp, m] : d.terms) out.terms[Weight(sources.at(comp))] += m;
  return out;
}

RestrictionSpec compose(const RestrictionSpec& first, const RestrictionSpec& second) {
  if (!first.matrix.central_cols.empty()) throw UsageError("cannot compose through a torus");
  if (first.k != second.g) {
    throw UsageError("cannot compose: " + first.k.name() + " is not " + second.g.name());
  }
  const IntMatrix& a = first.matrix.entries;
  const IntMatrix& b = second.matrix.entries;
  RestrictionSpec spec = second;
  spec.g = first.g;
  spec.k_simple_roots.clear();
  spec.ws_beta.reset();
  spec.gamma = 0;
  spec.provenance = "composed";
  spec.matrix.entries.assign(a.size(), IntVec(second.matrix.cols(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (int c = 0; c < second.matrix.cols(); ++c) spec.matrix.entries[i][c] += a[i][j] * b[j][c];
    }
  }
  return spec;
}

}  // namespace liebranch
