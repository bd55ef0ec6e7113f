#include <algorithm>
#include <map>

#include "liebranch/rules.hpp"
#include "shipped_data.hpp"

namespace liebranch {

namespace {

enum class Kind { folding, equal_rank, classical };

struct CaseInfo {
  CaseInfo(Kind k, int n) : kind(k), params(n) {}
  CaseInfo(Kind k, int n, const char* type, int node, std::vector<int> order)
      : kind(k), params(n), g(type), gamma(node), rows(std::move(order)) {}

  Kind kind;
  int params;
  // Equal-rank exceptional cases.
  const char* g = "";
  int gamma = 0;
  std::vector<int> rows;
};

// Row lists give, for each position of k in Bourbaki order, the source node
// of g; the entry equal to gamma stands for w_s(beta_g).
const std::map<std::string, CaseInfo>& table() {
  static const std::map<std::string, CaseInfo> t = {
      {"A_D", {Kind::folding, 1}},
      {"A_B", {Kind::folding, 1}},
      {"A_C", {Kind::folding, 1}},
      {"D_BB", {Kind::folding, 2}},
      {"D4_G2", {Kind::folding, 0}},
      {"D4_A2", {Kind::folding, 0}},
      {"E6_F4", {Kind::folding, 0}},
      {"E6_C4", {Kind::folding, 0}},
      {"B_DB", {Kind::classical, 2}},
      {"D_DD", {Kind::classical, 2}},
      {"C_CC", {Kind::classical, 2}},
      {"G2_A1A1", {Kind::equal_rank, 0, "G2", 2, {1, 2}}},
      {"F4_A1C3", {Kind::equal_rank, 0, "F4", 1, {1, 4, 3, 2}}},
      {"F4_B4", {Kind::equal_rank, 0, "F4", 4, {4, 1, 2, 3}}},
      {"E6_A1A5", {Kind::equal_rank, 0, "E6", 3, {1, 2, 4, 5, 6, 3}}},
      {"E6_A5A1", {Kind::equal_rank, 0, "E6", 5, {5, 1, 3, 4, 2, 6}}},
      {"E6_A5A1a", {Kind::equal_rank, 0, "E6", 2, {1, 3, 4, 5, 6, 2}}},
      {"E7_A1D6", {Kind::equal_rank, 0, "E7", 1, {1, 7, 6, 5, 4, 3, 2}}},
      {"E7_D6A1", {Kind::equal_rank, 0, "E7", 6, {6, 1, 3, 4, 5, 2, 7}}},
      {"E7_A7", {Kind::equal_rank, 0, "E7", 2, {1, 3, 4, 5, 6, 7, 2}}},
      {"E8_D8", {Kind::equal_rank, 0, "E8", 1, {1, 8, 7, 6, 5, 4, 3, 2}}},
      {"E8_E7A1", {Kind::equal_rank, 0, "E8", 8, {1, 2, 3, 4, 5, 6, 7, 8}}},
      {"G2_A2", {Kind::equal_rank, 0, "G2", 1, {1, 2}}},
      {"F4_A2A2", {Kind::equal_rank, 0, "F4", 2, {1, 2, 3, 4}}},
      {"E6_A2A2A2", {Kind::equal_rank, 0, "E6", 4, {1, 3, 2, 4, 5, 6}}},
      {"E7_A2A5", {Kind::equal_rank, 0, "E7", 3, {1, 3, 2, 4, 5, 6, 7}}},
      {"E7_A5A2", {Kind::equal_rank, 0, "E7", 5, {1, 3, 4, 2, 5, 6, 7}}},
      {"E8_A8", {Kind::equal_rank, 0, "E8", 2, {2, 1, 3, 4, 5, 6, 7, 8}}},
      {"E8_E6A2", {Kind::equal_rank, 0, "E8", 7, {1, 2, 3, 4, 5, 6, 7, 8}}},
      {"E8_A4A4", {Kind::equal_rank, 0, "E8", 5, {1, 3, 4, 2, 5, 6, 7, 8}}},
  };
  return t;
}

const CaseInfo& info(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw UsageError("unknown case '" + name + "'");
  return it->second;
}

IntMatrix permute_columns(const IntMatrix& m, const std::vector<int>& perm) {
  IntMatrix out(m.size(), IntVec(perm.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t a = 0; a < perm.size(); ++a) out[i][perm[a]] = m[i][a];
  }
  return out;
}

IntMatrix permute_rows(const IntMatrix& m, const std::vector<int>& perm) {
  IntMatrix out(m.size());
  for (std::size_t a = 0; a < perm.size(); ++a) out[perm[a]] = m[a];
  return out;
}

IntMatrix permute_square(const IntMatrix& m, const std::vector<int>& perm) {
  return permute_columns(permute_rows(m, perm), perm);
}

// Builds a spec from root restrictions written against the family Cartan
// matrices of g and k, then moves both to canonical Bourbaki order.
RestrictionSpec folded(const IntMatrix& g_nominal, const IntMatrix& k_nominal, const IntMatrix& res_rt,
                       const std::string& name) {
  IntMatrix wt = res_wt_from_res_rt(g_nominal, res_rt, k_nominal);
  BourbakiOrder go = identify_cartan(g_nominal);
  BourbakiOrder ko = identify_cartan(k_nominal);
  RestrictionSpec spec;
  spec.g = go.target;
  spec.k = ko.target;
  spec.k_cartan = cartan_matrix(ko.target);
  if (permute_square(k_nominal, ko.perm) != spec.k_cartan || permute_square(g_nominal, go.perm) != cartan_matrix(go.target)) {
    throw InvariantViolation("canonical reordering failed for " + name);
  }
  spec.matrix.entries = permute_columns(permute_rows(wt, go.perm), ko.perm);
  spec.perm = ko.perm;
  spec.provenance = name;
  return spec;
}

RestrictionSpec a_d(int m) {
  const int n = 2 * m - 1;
  if (m == 1) {
    // SO(2) is a circle: the weight of SU(2) restricts to its charge.
    RestrictionSpec spec;
    spec.g = LieType::parse("A1");
    spec.k = LieType({}, 1);
    spec.matrix = RestrictionMatrix{{{1}}, {0}, 1};
    spec.provenance = "A_D";
    return spec;
  }
  IntMatrix rt(n, IntVec(m, 0));
  for (int i = 1; i <= m; ++i) rt[i - 1][i - 1] = 1;
  rt[m - 1][m - 2] = -1;
  rt[m - 1][m - 1] = 1;
  for (int i = 1; i <= m - 1; ++i) rt[m + i - 1][m - i - 1] = 1;
  return folded(family_cartan_matrix(Family::A, n), family_cartan_matrix(Family::D, m), rt, "A_D");
}

RestrictionSpec a_b(int m) {
  const int n = 2 * m;
  IntMatrix rt(n, IntVec(m, 0));
  for (int i = 1; i <= m; ++i) rt[i - 1][i - 1] = 1;
  for (int i = 1; i <= m; ++i) rt[m + i - 1][m - i] = 1;
  return folded(family_cartan_matrix(Family::A, n), family_cartan_matrix(Family::B, m), rt, "A_B");
}

RestrictionSpec a_c(int m) {
  const int n = 2 * m - 1;
  IntMatrix rt(n, IntVec(m, 0));
  for (int i = 1; i <= m - 1; ++i) rt[i - 1][i - 1] = 1;
  rt[m - 1][m - 1] = 1;
  for (int i = 1; i <= m - 1; ++i) rt[m + i - 1][m - i - 1] = 1;
  return folded(family_cartan_matrix(Family::A, n), family_cartan_matrix(Family::C, m), rt, "A_C");
}

RestrictionSpec d_bb(int p, int q) {
  const int n = p + q + 1;
  IntMatrix rt(n, IntVec(p + q, 0));
  for (int i = 1; i <= p - 1; ++i) rt[i - 1][i - 1] = 1;
  if (p > 0) {
    rt[p - 1][p - 1] = 1;
    for (int j = p + 1; j <= p + q; ++j) rt[p - 1][j - 1] = -1;
  }
  for (int i = p + 1; i <= p + q - 1; ++i) rt[i - 1][i - 1] = 1;
  rt[p + q - 1][p + q - 1] = 1;
  rt[p + q][p + q - 1] = 1;
  IntMatrix k = block_diagonal(family_cartan_matrix(Family::B, p), family_cartan_matrix(Family::B, q));
  return folded(family_cartan_matrix(Family::D, n), k, rt, "D_BB");
}

RestrictionSpec d4_g2() {
  IntMatrix rt = {{1, 0}, {0, 1}, {1, 0}, {1, 0}};
  return folded(family_cartan_matrix(Family::D, 4), family_cartan_matrix(Family::G, 2), rt, "D4_G2");
}

RestrictionSpec e6_f4() {
  IntMatrix rt(6, IntVec(4, 0));
  rt[0][3] = rt[5][3] = 1;
  rt[2][2] = rt[4][2] = 1;
  rt[3][1] = 1;
  rt[1][0] = 1;
  return folded(family_cartan_matrix(Family::E, 6), family_cartan_matrix(Family::F, 4), rt, "E6_F4");
}

RestrictionSpec classical(const std::string& name, int p, int q) {
  if (name == "B_DB") {
    return borel_de_siebenthal(SimpleLieType(Family::B, p + q), p, std::nullopt,
                               LieType::from_family(Family::D, p) * LieType::from_family(Family::B, q));
  }
  if (name == "D_DD") {
    return borel_de_siebenthal(SimpleLieType(Family::D, p + q), p, std::nullopt,
                               LieType::from_family(Family::D, p) * LieType::from_family(Family::D, q));
  }
  // C_CC. Sp(2) is handled as Spin(5), whose short simple root is node 2.
  LieType expected = LieType::from_family(Family::C, p) * LieType::from_family(Family::C, q);
  if (p + q == 2) return borel_de_siebenthal(SimpleLieType(Family::B, 2), 2, std::nullopt, expected);
  return borel_de_siebenthal(SimpleLieType(Family::C, p + q), p, std::nullopt, expected);
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {
      "A_D",     "A_B",     "A_C",     "D_BB",     "D4_G2",     "D4_A2",   "E6_F4",   "E6_C4",
      "B_DB",    "D_DD",    "C_CC",    "G2_A1A1",  "F4_A1C3",   "F4_B4",   "E6_A1A5", "E6_A5A1",
      "E6_A5A1a", "E7_A1D6", "E7_D6A1", "E7_A7",   "E8_D8",     "E8_E7A1", "G2_A2",   "F4_A2A2",
      "E6_A2A2A2", "E7_A2A5", "E7_A5A2", "E8_A8",  "E8_E6A2",   "E8_A4A4"};
  return names;
}

int case_param_count(const std::string& name) { return info(name).params; }

CaseId CaseId::make(std::string name, std::vector<int> params) {
  const CaseInfo& ci = info(name);
  if (static_cast<int>(params.size()) != ci.params) {
    throw UsageError("case " + name + " takes " + std::to_string(ci.params) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw UsageError("case " + name + " needs " + what);
  };
  if (name == "A_D" || name == "A_B" || name == "A_C") need(params[0] >= 1, "m >= 1");
  if (name == "D_BB") need(params[0] >= 0 && params[1] >= 0 && params[0] + params[1] > 0, "p, q >= 0, not both 0");
  if (name == "B_DB") need(params[0] >= 2 && params[1] >= 0, "p >= 2 and q >= 0");
  if (name == "D_DD") need(params[0] >= 2 && params[1] >= 2, "p, q >= 2");
  if (name == "C_CC") need(params[0] >= 1 && params[1] >= 1, "p, q >= 1");
  return CaseId{std::move(name), std::move(params)};
}

std::string CaseId::label() const {
  std::string s = name;
  if (!params.empty()) {
    s += "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    s += ")";
  }
  return s;
}

RestrictionSpec folding_spec(const CaseId& c) {
  const CaseId v = CaseId::make(c.name, c.params);
  if (info(v.name).kind != Kind::folding) throw UsageError(v.name + " is not a folding case");
  const auto& p = v.params;
  if (v.name == "A_D") return a_d(p[0]);
  if (v.name == "A_B") return a_b(p[0]);
  if (v.name == "A_C") return a_c(p[0]);
  if (v.name == "D_BB") return d_bb(p[0], p[1]);
  if (v.name == "D4_G2") return d4_g2();
  if (v.name == "E6_F4") return e6_f4();
  if (v.name == "D4_A2") {
    // The triality-fixed SU(3) shares its torus with G2 and its roots are the
    // short roots of G2, so 8_v restricts to the adjoint.
    RestrictionSpec short_a2 =
        subsystem_spec(SimpleLieType(Family::G, 2), {RootVec{{1, 0}}, RootVec{{1, 1}}}, LieType::parse("A2"));
    RestrictionSpec s = compose(d4_g2(), short_a2);
    s.provenance = "D4_A2";
    return s;
  }
  RestrictionSpec s = spec_from_json(shipped::kE6C4Json);
  s.provenance = "E6_C4";
  return s;
}

RestrictionSpec catalog_spec(const CaseId& c) {
  const CaseId v = CaseId::make(c.name, c.params);
  const CaseInfo& ci = info(v.name);
  RestrictionSpec s;
  switch (ci.kind) {
    case Kind::folding:
      return folding_spec(v);
    case Kind::classical:
      s = classical(v.name, v.params[0], v.params[1]);
      break;
    case Kind::equal_rank: {
      std::string k = v.name.substr(v.name.find('_') + 1);
      if (k.back() == 'a') k.pop_back();
      s = borel_de_siebenthal(LieType::parse(ci.g).simple(), ci.gamma, ci.rows, LieType::parse(k));
      break;
    }
  }
  s.provenance = v.name;
  return s;
}

}  // namespace liebranch
