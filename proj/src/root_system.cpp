#include "liebranch/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace liebranch {

namespace {

void link(IntMatrix& a, int i, int j, int aij, int aji) {
  a[i][j] = aij;
  a[j][i] = aji;
}

IntMatrix identity2(int n) {
  IntMatrix m(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

// Gauss-Jordan over the rationals; returns the determinant and fills inv.
Rational invert(const IntMatrix& m, std::vector<std::vector<Rational>>& inv) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  inv.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    inv[i][i] = 1;
  }
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    Rational p = a[col][col];
    det *= p;
    for (int j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col].numerator() == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return det;
}

std::vector<std::vector<int>> diagram_components(const IntMatrix& cartan_) {
  const int n = static_cast<int>(cartan_.size());
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{s};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (int j = 0; j < n; ++j) {
        if (label[j] < 0 && cartan_[comp[k]][j] != 0) {
          label[j] = label[s];
          comp.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}


}  // namespace

IntMatrix family_cartan_matrix(Family family, int n) {
  IntMatrix a = identity2(n);
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      if (n >= 2) link(a, n - 2, n - 1, -2, -1);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      if (n >= 2) link(a, n - 2, n - 1, -1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 3 < n; ++i) link(a, i, i + 1, -1, -1);
      if (n >= 3) {
        link(a, n - 3, n - 2, -1, -1);
        link(a, n - 3, n - 1, -1, -1);
      }
      break;
    case Family::E:
      if (n < 6 || n > 8) throw UsageError("E" + std::to_string(n) + " is not a Lie type");
      link(a, 0, 2, -1, -1);
      link(a, 1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      break;
    case Family::F:
      if (n != 4) throw UsageError("F" + std::to_string(n) + " is not a Lie type");
      link(a, 0, 1, -1, -1);
      link(a, 1, 2, -2, -1);
      link(a, 2, 3, -1, -1);
      break;
    case Family::G:
      if (n != 2) throw UsageError("G" + std::to_string(n) + " is not a Lie type");
      link(a, 0, 1, -1, -3);
      break;
  }
  return a;
}

IntMatrix cartan_matrix(const SimpleLieType& t) { return family_cartan_matrix(t.family(), t.rank()); }

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size() + b.size();
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i) std::copy(a[i].begin(), a[i].end(), m[i].begin());
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::copy(b[i].begin(), b[i].end(), m[a.size() + i].begin() + a.size());
  }
  return m;
}

IntMatrix cartan_matrix(const LieType& t) {
  IntMatrix m;
  for (const auto& f : t.factors()) m = block_diagonal(m, cartan_matrix(f));
  return m;
}

long long determinant(const IntMatrix& m) {
  std::vector<std::vector<Rational>> inv;
  Rational d = invert(m, inv);
  return d.numerator();
}

IntMatrix adjugate(const IntMatrix& m) {
  std::vector<std::vector<Rational>> inv;
  Rational d = invert(m, inv);
  if (d.numerator() == 0) throw UsageError("singular matrix has no integer adjugate here");
  IntMatrix out(m.size(), IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      Rational v = inv[i][j] * d;
      out[i][j] = static_cast<int>(v.numerator());
    }
  }
  return out;
}

RootSystem::RootSystem(const SimpleLieType& t) : RootSystem(cartan_matrix(t), LieType{t}) {}

RootSystem::RootSystem(const LieType& t) : RootSystem(cartan_matrix(t), t) {}

RootSystem RootSystem::from_cartan(IntMatrix cartan) { return RootSystem(std::move(cartan), std::nullopt); }

RootSystem::RootSystem(IntMatrix cartan, std::optional<LieType> type)
    : cartan_(std::move(cartan)), type_(std::move(type)) {
  const int n = rank();
  for (const auto& row : cartan_) {
    if (static_cast<int>(row.size()) != n) throw UsageError("Cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw UsageError("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && (cartan_[i][j] > 0 || (cartan_[i][j] == 0) != (cartan_[j][i] == 0))) {
        throw UsageError("not a generalized Cartan matrix");
      }
    }
  }

  components_ = diagram_components(cartan_);

  // Inverse.
  std::vector<std::vector<Rational>> inv;
  Rational det = n == 0 ? Rational(1) : invert(cartan_, inv);
  if (det.numerator() <= 0 || det.denominator() != 1) throw UsageError("Cartan matrix is not of finite type");
  det_cartan_ = det.numerator();
  i_cartan_num_.assign(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rational v = inv[i][j] * det;
      if (v.denominator() != 1) throw InvariantViolation("adjugate of Cartan matrix is not integral");
      i_cartan_num_[i][j] = static_cast<int>(v.numerator());
    }
  }

  // Symmetrizer, normalized per component so that long roots have d = 1.
  std::vector<Rational> d(n, Rational(0));
  for (const auto& comp : components()) {
    d[comp.front()] = 1;
    std::vector<int> stack{comp.front()};
    std::vector<bool> seen(n, false);
    seen[comp.front()] = true;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0 || seen[j]) continue;
        // (psi_i, psi_j) = A[i][j] d_j = A[j][i] d_i
        d[j] = d[i] * Rational(cartan_[j][i], cartan_[i][j]);
        seen[j] = true;
        stack.push_back(j);
      }
    }
    Rational longest = 0;
    for (int i : comp) longest = std::max(longest, d[i]);
    for (int i : comp) d[i] /= longest;
  }
  sym_den_ = 1;
  for (const auto& v : d) sym_den_ = std::lcm(sym_den_, v.denominator());
  half_length_num_.resize(n);
  for (int i = 0; i < n; ++i) half_length_num_[i] = (d[i] * sym_den_).numerator();
  sym_form_num_.assign(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) sym_form_num_[i][j] = static_cast<int>(cartan_[i][j] * half_length_num_[j]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sym_form_num_[i][j] != sym_form_num_[j][i]) throw UsageError("Cartan matrix is not symmetrizable");
    }
  }

  // Positive roots by height-by-height closure.
  std::set<IntVec> known;
  std::vector<IntVec> layer;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  constexpr std::size_t kMaxRoots = 20000;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    for (const auto& r : layer) pos_roots_.push_back(RootVec{r});
    std::set<IntVec> next;
    for (const auto& r : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        IntVec down = r;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - coroot_pairing(r, i) > 0) {
          IntVec up = r;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
    if (known.size() > kMaxRoots) throw UsageError("Cartan matrix is not of finite type");
  }
  pos_root_weights_.reserve(pos_roots_.size());
  for (const auto& r : pos_roots_) pos_root_weights_.push_back(root_to_weight(r));
}

const RootVec& RootSystem::highest_root() const {
  if (components().size() != 1) throw UsageError("highest root needs an irreducible root system");
  return pos_roots_.back();
}

IntVec RootSystem::root_to_weight(const RootVec& r) const {
  const int n = rank();
  if (static_cast<int>(r.coords.size()) != n) throw UsageError("root length does not match rank");
  IntVec w(n, 0);
  for (int j = 0; j < n; ++j) {
    if (r.coords[j] == 0) continue;
    for (int i = 0; i < n; ++i) w[i] += r.coords[j] * cartan_[j][i];
  }
  return w;
}

Rational RootSystem::inner(const RootVec& a, const RootVec& b) const {
  const int n = rank();
  if (static_cast<int>(a.coords.size()) != n || static_cast<int>(b.coords.size()) != n) {
    throw UsageError("root length does not match rank");
  }
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s += static_cast<long long>(a.coords[i]) * sym_form_num_[i][j] * b.coords[j];
  }
  return Rational(s, sym_den_);
}

long long RootSystem::pair_weight_root_num(std::span<const int> w, std::span<const int> r) const {
  long long s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) s += static_cast<long long>(r[i]) * w[i] * half_length_num_[i];
  return s;
}

int RootSystem::coroot_pairing(std::span<const int> r, int i) const {
  int s = 0;
  for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * cartan_[j][i];
  return s;
}

IntVec RootSystem::weight_to_root_num(std::span<const int> w) const {
  const int n = rank();
  IntVec c(n, 0);
  for (int j = 0; j < n; ++j) {
    if (w[j] == 0) continue;
    for (int i = 0; i < n; ++i) c[i] += w[j] * i_cartan_num_[j][i];
  }
  return c;
}

bool RootSystem::is_root(const RootVec& r) const {
  RootVec pos = r;
  bool negative = std::any_of(r.coords.begin(), r.coords.end(), [](int c) { return c < 0; });
  if (negative) {
    for (auto& c : pos.coords) c = -c;
  }
  return std::binary_search(pos_roots_.begin(), pos_roots_.end(), pos, [](const RootVec& a, const RootVec& b) {
    int ha = std::accumulate(a.coords.begin(), a.coords.end(), 0);
    int hb = std::accumulate(b.coords.begin(), b.coords.end(), 0);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
}


}  // namespace liebranch
