#include "liebranch/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace liebranch {

namespace {

struct VecHash {
  std::size_t operator()(const IntVec& v) const { return boost::hash_range(v.begin(), v.end()); }
};

std::vector<SimpleLieType> canonical_candidates(int r) {
  std::vector<SimpleLieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    if (SimpleLieType::is_canonical(f, r)) out.emplace_back(f, r);
  }
  return out;
}

// All bijections comp[k] -> position such that the pairing restricted to comp
// equals the canonical Cartan matrix.
void labelings(const IntMatrix& p, const std::vector<int>& comp, const IntMatrix& canon, std::vector<int>& pos,
               std::vector<bool>& used, std::size_t k, std::vector<std::vector<int>>& out) {
  if (k == comp.size()) {
    out.push_back(pos);
    return;
  }
  const int r = static_cast<int>(comp.size());
  for (int cand = 0; cand < r; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (std::size_t l = 0; l < k && ok; ++l) {
      ok = p[comp[k]][comp[l]] == canon[cand][pos[l]] && p[comp[l]][comp[k]] == canon[pos[l]][cand];
    }
    if (!ok) continue;
    used[cand] = true;
    pos[k] = cand;
    labelings(p, comp, canon, pos, used, k + 1, out);
    used[cand] = false;
  }
}

struct ComponentMatch {
  std::vector<int> nodes;
  SimpleLieType type;
  std::vector<std::vector<int>> labelings;
};

}  // namespace

SimpleSubset::SimpleSubset(std::vector<int> indices, int rank) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1 || indices_[k] > rank) throw UsageError("node index out of range");
    if (k > 0 && indices_[k] <= indices_[k - 1]) throw UsageError("node indices must be strictly increasing");
  }
}

SimpleSubset SimpleSubset::complement_of(std::span<const int> removed, int rank) {
  std::vector<int> keep;
  for (int i = 1; i <= rank; ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  }
  return SimpleSubset(std::move(keep), rank);
}

bool SimpleSubset::contains(int node) const {
  return std::binary_search(indices_.begin(), indices_.end(), node);
}

void reflect_in_place(const RootSystem& rs, int index, IntVec& w) {
  const int c = w[index];
  if (c == 0) return;
  const IntVec& row = rs.cartan()[index];
  for (std::size_t j = 0; j < w.size(); ++j) w[j] -= c * row[j];
}

IntVec reflect(const RootSystem& rs, int node, std::span<const int> w) {
  if (node < 1 || node > rs.rank()) throw UsageError("reflection index out of range");
  if (static_cast<int>(w.size()) != rs.rank()) throw UsageError("weight length does not match rank");
  IntVec out(w.begin(), w.end());
  reflect_in_place(rs, node - 1, out);
  return out;
}

SignedDominant straighten(const RootSystem& rs, IntVec w) {
  int steps = 0;
  while (true) {
    auto it = std::find_if(w.begin(), w.end(), [](int c) { return c < 0; });
    if (it == w.end()) break;
    reflect_in_place(rs, static_cast<int>(it - w.begin()), w);
    ++steps;
  }
  bool wall = std::find(w.begin(), w.end(), 0) != w.end();
  int sign = wall ? 0 : (steps % 2 == 0 ? 1 : -1);
  return SignedDominant{std::move(w), sign};
}

IntVec dominant_representative(const RootSystem& rs, IntVec w) {
  while (true) {
    auto it = std::find_if(w.begin(), w.end(), [](int c) { return c < 0; });
    if (it == w.end()) return w;
    reflect_in_place(rs, static_cast<int>(it - w.begin()), w);
  }
}

std::vector<IntVec> orbit(const RootSystem& rs, const IntVec& dominant) {
  if (static_cast<int>(dominant.size()) != rs.rank()) throw UsageError("weight length does not match rank");
  if (std::any_of(dominant.begin(), dominant.end(), [](int c) { return c < 0; })) {
    throw UsageError("orbit needs a dominant weight");
  }
  std::unordered_set<IntVec, VecHash> seen{dominant};
  std::vector<IntVec> out{dominant};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (out[k][i] <= 0) continue;
      IntVec next = out[k];
      reflect_in_place(rs, i, next);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParabolicImage parabolic_antidominant(const RootSystem& rs, const SimpleSubset& s, const RootVec& r) {
  if (static_cast<int>(r.coords.size()) != rs.rank()) throw UsageError("root length does not match rank");
  for (int node : s.indices()) {
    if (node > rs.rank()) throw UsageError("node index out of range");
    if (rs.coroot_pairing(r.coords, node - 1) < 0) throw UsageError("root is not dominant for the subset");
  }
  ParabolicImage img{r, 0};
  while (true) {
    bool moved = false;
    for (int node : s.indices()) {
      int c = rs.coroot_pairing(img.root.coords, node - 1);
      if (c > 0) {
        img.root.coords[node - 1] -= c;
        ++img.word_length;
        moved = true;
        break;
      }
    }
    if (!moved) return img;
  }
}

IntMatrix pairing_matrix(const RootSystem& rs, std::span<const RootVec> candidates) {
  const std::size_t n = candidates.size();
  IntMatrix p(n, IntVec(n));
  for (std::size_t b = 0; b < n; ++b) {
    Rational bb = rs.inner(candidates[b], candidates[b]);
    if (bb.numerator() == 0) throw UsageError("candidate simple root has zero length");
    for (std::size_t a = 0; a < n; ++a) {
      Rational v = 2 * rs.inner(candidates[a], candidates[b]) / bb;
      if (v.denominator() != 1) throw UsageError("candidate pairing is not integral");
      p[a][b] = static_cast<int>(v.numerator());
    }
  }
  return p;
}

BourbakiOrder identify_cartan(const IntMatrix& pairing, const std::optional<LieType>& expected) {
  const int n = static_cast<int>(pairing.size());
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(pairing[a].size()) != n) throw UsageError("pairing matrix is not square");
    if (pairing[a][a] != 2) throw UsageError("candidate system is not a simple system: diagonal != 2");
    for (int b = 0; b < n; ++b) {
      if (a != b && pairing[a][b] > 0) throw UsageError("candidate system has a positive pairing");
    }
  }
  // Connected components in ascending order of their smallest node.
  std::vector<std::vector<int>> comps;
  {
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{s};
      seen[s] = true;
      for (std::size_t k = 0; k < comp.size(); ++k) {
        for (int j = 0; j < n; ++j) {
          if (!seen[j] && (pairing[comp[k]][j] != 0 || pairing[j][comp[k]] != 0)) {
            seen[j] = true;
            comp.push_back(j);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
  std::vector<ComponentMatch> matches;
  for (const auto& comp : comps) {
    const int r = static_cast<int>(comp.size());
    bool found = false;
    for (const auto& t : canonical_candidates(r)) {
      std::vector<std::vector<int>> labs;
      std::vector<int> pos(r);
      std::vector<bool> used(r, false);
      labelings(pairing, comp, cartan_matrix(t), pos, used, 0, labs);
      if (!labs.empty()) {
        matches.push_back(ComponentMatch{comp, t, std::move(labs)});
        found = true;
        break;
      }
    }
    if (!found) throw UsageError("candidate system is not a Cartan matrix of finite type");
  }

  std::vector<int> order(matches.size());
  std::iota(order.begin(), order.end(), 0);
  std::optional<BourbakiOrder> best;
  int best_moves = n + 1;
  do {
    std::vector<SimpleLieType> factors;
    for (int c : order) factors.push_back(matches[c].type);
    if (expected && expected->factors() != factors) continue;
    // Odometer over the labelings of each component in this factor order.
    std::vector<std::size_t> pick(order.size(), 0);
    while (true) {
      std::vector<int> perm(n);
      int offset = 0;
      for (std::size_t f = 0; f < order.size(); ++f) {
        const auto& m = matches[order[f]];
        const auto& lab = m.labelings[pick[f]];
        for (std::size_t k = 0; k < m.nodes.size(); ++k) perm[m.nodes[k]] = offset + lab[k];
        offset += static_cast<int>(m.nodes.size());
      }
      int moves = 0;
      for (int a = 0; a < n; ++a) moves += perm[a] != a;
      if (!best || moves < best_moves || (moves == best_moves && perm < best->perm)) {
        best = BourbakiOrder{LieType(factors), perm};
        best_moves = moves;
      }
      std::size_t f = 0;
      while (f < pick.size() && ++pick[f] == matches[order[f]].labelings.size()) pick[f++] = 0;
      if (f == pick.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best) {
    throw UsageError("candidate system does not have the expected type " + expected->name());
  }
  return *best;
}

BourbakiOrder bourbaki_reorder(const RootSystem& rs, std::span<const RootVec> candidates,
                               const std::optional<LieType>& expected) {
  IntMatrix coords;
  for (const auto& c : candidates) {
    if (static_cast<int>(c.coords.size()) != rs.rank()) throw UsageError("root length does not match rank");
    coords.push_back(c.coords);
  }
  if (!coords.empty() && coords.size() == coords.front().size() && determinant(coords) == 0) {
    throw UsageError("candidate simple roots are linearly dependent");
  }
  return identify_cartan(pairing_matrix(rs, candidates), expected);
}

}  // namespace liebranch
