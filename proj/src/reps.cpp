#include "liebranch/reps.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "liebranch/weyl.hpp"

namespace liebranch {

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const { return boost::hash_range(v.begin(), v.end()); }
};

void check_dominant(const RootSystem& rs, std::span<const int> w) {
  if (static_cast<int>(w.size()) != rs.rank()) {
    throw UsageError("weight has " + std::to_string(w.size()) + " coordinates, expected " +
                     std::to_string(rs.rank()));
  }
  if (std::any_of(w.begin(), w.end(), [](int c) { return c < 0; })) throw UsageError("weight is not dominant");
}

void check_type_weight(const LieType& t, const Weight& w) {
  if (static_cast<int>(w.central.size()) > t.torus_rank()) {
    throw UsageError("weight has more central coordinates than " + t.name() + " has torus rank");
  }
}

// det_cartan times the height of a weight, i.e. the sum of its root coordinates.
long long scaled_height(const RootSystem& rs, std::span<const int> w) {
  long long h = 0;
  for (int j = 0; j < rs.rank(); ++j) {
    if (w[j] == 0) continue;
    for (int i = 0; i < rs.rank(); ++i) h += static_cast<long long>(w[j]) * rs.i_cartan_num()[j][i];
  }
  return h;
}

// Dominant weights below w, found by subtracting positive roots while staying
// dominant; every dominant weight of V(w) is reachable this way. The index maps
// each weight to its position in the list.
struct DominantSet {
  std::vector<IntVec> weights;
  std::unordered_map<IntVec, std::size_t, VecHash> index;
};

DominantSet dominant_weights_below(const RootSystem& rs, const IntVec& w) {
  DominantSet out;
  out.weights.push_back(w);
  out.index.emplace(w, 0);
  IntVec next(w.size());
  for (std::size_t k = 0; k < out.weights.size(); ++k) {
    for (const auto& a : rs.pos_root_weights()) {
      bool dominant = true;
      for (std::size_t i = 0; i < next.size() && dominant; ++i) {
        next[i] = out.weights[k][i] - a[i];
        dominant = next[i] >= 0;
      }
      if (dominant && out.index.emplace(next, out.weights.size()).second) out.weights.push_back(next);
    }
  }
  return out;
}

struct StripKey {
  long long height;
  IntVec weight;

  bool operator<(const StripKey& o) const {
    if (height != o.height) return height > o.height;
    return weight > o.weight;
  }
};

}  // namespace

int RestrictionMatrix::cols() const {
  return entries.empty() ? static_cast<int>(central_cols.size()) : static_cast<int>(entries.front().size());
}

bool RestrictionMatrix::is_central(int col) const {
  return std::find(central_cols.begin(), central_cols.end(), col) != central_cols.end();
}

Weight RestrictionMatrix::apply(std::span<const int> w) const {
  if (static_cast<int>(w.size()) != rows()) throw UsageError("weight length does not match restriction matrix");
  Weight out;
  out.coords.reserve(semisimple_cols());
  out.central.reserve(central_cols.size());
  for (int j = 0; j < cols(); ++j) {
    long long s = 0;
    for (int i = 0; i < rows(); ++i) s += static_cast<long long>(w[i]) * entries[i][j];
    if (is_central(j)) {
      out.central.emplace_back(s, central_den);
    } else {
      out.coords.push_back(static_cast<int>(s));
    }
  }
  return out;
}

BigInt dim(const RootSystem& rs, std::span<const int> w) {
  check_dominant(rs, w);
  IntVec shifted(w.begin(), w.end());
  for (auto& c : shifted) ++c;
  const IntVec rho = rs.rho();
  BigInt num = 1;
  BigInt den = 1;
  for (const auto& a : rs.pos_roots()) {
    num *= rs.pair_weight_root_num(shifted, a.coords);
    den *= rs.pair_weight_root_num(rho, a.coords);
  }
  if (num % den != 0) throw InvariantViolation("Weyl dimension formula gave a non-integer");
  return num / den;
}

BigInt dim(const LieType& t, const Weight& w) {
  check_type_weight(t, w);
  return dim(RootSystem(t), w.coords);
}

Character dominant_mults(const RootSystem& rs, const IntVec& w) {
  check_dominant(rs, w);
  if (rs.rank() == 0) return Character{{w, 1}};
  DominantSet dominant = dominant_weights_below(rs, w);
  const std::size_t count = dominant.weights.size();
  // Process weights by increasing depth below w; mult and tail are indexed by
  // position in dominant.weights.
  std::vector<std::pair<long long, std::size_t>> order;
  order.reserve(count);
  const long long top = scaled_height(rs, w);
  for (std::size_t k = 0; k < count; ++k) order.emplace_back(top - scaled_height(rs, dominant.weights[k]), k);
  std::sort(order.begin(), order.end());

  const int n = rs.rank();
  IntVec shift(n);
  for (int i = 0; i < n; ++i) shift[i] = w[i] + 2;
  const long long det = rs.det_cartan();

  const std::size_t np = rs.pos_roots().size();
  const auto& index = dominant.index;
  std::vector<long long> mult(count, 0);
  std::vector<char> done(count, 0);
  mult[0] = 1;
  done[0] = 1;
  // tail[k * np + a] = sum over j >= 1 of m(mu + j alpha_a) (mu + j alpha_a, alpha_a)
  // for mu = dominant.weights[k], so later strings can stop at the first dominant point.
  std::vector<long long> tail(count * np, 0);
  IntVec sum(n), diff_root(n), nu(n);
  for (std::size_t step = 1; step < count; ++step) {
    const std::size_t k = order[step].second;
    const IntVec& mu = dominant.weights[k];
    // (lambda - mu, lambda + mu + 2 rho), scaled by sym_den.
    std::fill(diff_root.begin(), diff_root.end(), 0);
    for (int j = 0; j < n; ++j) {
      sum[j] = shift[j] + mu[j];
      const int d = w[j] - mu[j];
      if (d == 0) continue;
      for (int i = 0; i < n; ++i) diff_root[i] += d * rs.i_cartan_num()[j][i];
    }
    for (auto& c : diff_root) c /= static_cast<int>(det);
    const long long den = rs.pair_weight_root_num(sum, diff_root);

    long long num = 0;
    for (std::size_t a = 0; a < np; ++a) {
      const IntVec& aw = rs.pos_root_weights()[a];
      const IntVec& ar = rs.pos_roots()[a].coords;
      std::copy(mu.begin(), mu.end(), nu.begin());
      long long s = 0;
      while (true) {
        for (int i = 0; i < n; ++i) nu[i] += aw[i];
        const bool dominant_nu = std::all_of(nu.begin(), nu.end(), [](int c) { return c >= 0; });
        auto it = index.find(dominant_nu ? nu : dominant_representative(rs, nu));
        if (it == index.end() || !done[it->second]) break;
        s += mult[it->second] * rs.pair_weight_root_num(nu, ar);
        if (dominant_nu) {
          s += tail[it->second * np + a];
          break;
        }
      }
      tail[k * np + a] = s;
      num += s;
    }
    num *= 2;
    if (den <= 0 || num % den != 0) throw InvariantViolation("Freudenthal recursion gave a non-integer");
    mult[k] = num / den;
    done[k] = 1;
  }
  Character out;
  for (std::size_t k = 0; k < count; ++k) {
    if (mult[k] != 0) out.emplace(std::move(dominant.weights[k]), mult[k]);
  }
  return out;
}

Character dominant_mults(const LieType& t, const Weight& w) {
  check_type_weight(t, w);
  return dominant_mults(RootSystem(t), w.coords);
}

Character weight_multiset(const RootSystem& rs, const IntVec& w) {
  if (rs.rank() == 0) return dominant_mults(rs, w);
  // Orbits are disjoint, so sorting once lets the map be built by appending.
  std::vector<std::pair<IntVec, long long>> all;
  for (const auto& [mu, m] : dominant_mults(rs, w)) {
    for (auto& nu : orbit(rs, mu)) all.emplace_back(std::move(nu), m);
  }
  std::sort(all.begin(), all.end());
  Character out;
  for (auto& [nu, m] : all) out.emplace_hint(out.end(), std::move(nu), m);
  return out;
}

Character weight_multiset(const LieType& t, const Weight& w) {
  check_type_weight(t, w);
  return weight_multiset(RootSystem(t), w.coords);
}

Character decompose_character(const RootSystem& rs, Character c) {
  std::map<StripKey, long long> pending;
  for (auto& [w, m] : c) {
    if (m == 0) continue;
    check_dominant(rs, w);
    if (m < 0) throw InvariantViolation("character has a negative coefficient");
    pending.emplace(StripKey{scaled_height(rs, w), w}, m);
  }
  Character out;
  while (!pending.empty()) {
    const StripKey top = pending.begin()->first;
    const long long m = pending.begin()->second;
    out.emplace(top.weight, m);
    for (const auto& [mu, k] : dominant_mults(rs, top.weight)) {
      auto it = pending.find(StripKey{scaled_height(rs, mu), mu});
      if (it == pending.end() || it->second < m * k) {
        throw InvariantViolation("character is not a nonnegative sum of irreducibles");
      }
      it->second -= m * k;
      if (it->second == 0) pending.erase(it);
    }
  }
  return out;
}

Character tensor(const RootSystem& rs, const IntVec& a, const IntVec& b) {
  check_dominant(rs, a);
  check_dominant(rs, b);
  // Expand the smaller factor.
  const bool swap = dim(rs, b) > dim(rs, a);
  const IntVec& big = swap ? b : a;
  const IntVec& small = swap ? a : b;
  std::map<IntVec, long long> acc;
  for (const auto& [nu, m] : weight_multiset(rs, small)) {
    IntVec x(big.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = big[i] + 1 + nu[i];
    SignedDominant s = straighten(rs, std::move(x));
    if (s.sign == 0) continue;
    for (auto& c : s.weight) --c;
    acc[s.weight] += s.sign * m;
  }
  Character out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw InvariantViolation("tensor product produced a negative multiplicity");
    if (m > 0) out.emplace(w, m);
  }
  return out;
}

Decomposition tensor(const LieType& t, const Weight& a, const Weight& b) {
  check_type_weight(t, a);
  check_type_weight(t, b);
  if (a.central.size() != b.central.size()) throw UsageError("central coordinate counts differ");
  std::vector<Rational> central(a.central.size());
  for (std::size_t i = 0; i < central.size(); ++i) central[i] = a.central[i] + b.central[i];
  Decomposition d{t, {}};
  for (auto& [w, m] : tensor(RootSystem(t), a.coords, b.coords)) d.terms.emplace(Weight(w, central), m);
  return d;
}

Decomposition branch_diag(const SimpleLieType& t, std::span<const Weight> rows) {
  if (rows.empty()) throw UsageError("diagonal branching needs at least one row");
  RootSystem rs(t);
  check_dominant(rs, rows.front().coords);
  Character acc{{rows.front().coords, 1}};
  for (std::size_t r = 1; r < rows.size(); ++r) {
    check_dominant(rs, rows[r].coords);
    Character next;
    for (const auto& [w, m] : acc) {
      for (const auto& [v, k] : tensor(rs, w, rows[r].coords)) next[v] += m * k;
    }
    acc = std::move(next);
  }
  Decomposition d{LieType{t}, {}};
  for (auto& [w, m] : acc) d.terms.emplace(Weight(w), m);
  return d;
}

std::map<Weight, long long> restrict_multiset(const RootSystem& g, const IntVec& w, const RestrictionMatrix& r) {
  if (r.rows() != g.rank()) throw UsageError("restriction matrix has the wrong number of rows");
  std::map<Weight, long long> out;
  for (const auto& [nu, m] : weight_multiset(g, w)) out[r.apply(nu)] += m;
  return out;
}

Decomposition branch(const RootSystem& g, const IntVec& w, const RestrictionMatrix& r, const RootSystem& k,
                     SourceMap* sources) {
  check_dominant(g, w);
  if (r.rows() != g.rank()) throw UsageError("restriction matrix has the wrong number of rows");
  if (r.semisimple_cols() != k.rank()) throw UsageError("restriction matrix does not match the rank of k");
  for (const auto& row : r.entries) {
    if (static_cast<int>(row.size()) != r.cols()) throw UsageError("restriction matrix is ragged");
  }
  if (r.central_den <= 0) throw UsageError("central denominator must be positive");

  std::map<std::vector<Rational>, Character> groups;
  SourceMap seen;
  for (const auto& [nu, m] : weight_multiset(g, w)) {
    Weight image = r.apply(nu);
    if (sources) {
      auto [it, fresh] = seen.emplace(image, nu);
      if (!fresh && it->second != nu) throw InvariantViolation("restriction is not injective on weights");
    }
    if (!image.is_dominant()) continue;
    groups[image.central][image.coords] += m;
  }

  LieType kt = k.type().value_or(LieType{}) * LieType({}, static_cast<int>(r.central_cols.size()));
  Decomposition d{kt, {}};
  for (auto& [central, ch] : groups) {
    for (auto& [v, m] : decompose_character(k, std::move(ch))) {
      Weight comp(v, central);
      if (sources) (*sources)[comp] = seen.at(comp);
      d.terms.emplace(std::move(comp), m);
    }
  }
  if (total_dim(k, d) != dim(g, w)) throw InvariantViolation("branching does not conserve dimension");
  return d;
}

BigInt total_dim(const RootSystem& k, const Decomposition& d) {
  BigInt s = 0;
  for (const auto& [w, m] : d.terms) s += m * dim(k, w.coords);
  return s;
}

}  // namespace liebranch
