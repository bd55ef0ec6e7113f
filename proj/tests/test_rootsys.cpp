#include <doctest.h>

#include <algorithm>
#include <set>

#include "liebranch/reps.hpp"
#include "liebranch/root_system.hpp"
#include "oracle/oracle.hpp"

using namespace liebranch;

namespace {

std::vector<std::string> all_simple_types() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) out.emplace_back(t);
  return out;
}

RootVec rv(IntVec c) { return RootVec{std::move(c)}; }

IntVec unit(int n, int i) {
  IntVec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("type parsing canonicalizes aliases") {
  CHECK(LieType::parse("E6").name() == "E6");
  CHECK(LieType::parse("C2") == LieType::parse("B2"));
  CHECK(LieType::parse("B1") == LieType::parse("A1"));
  CHECK(LieType::parse("D3") == LieType::parse("A3"));
  CHECK(LieType::parse("D2") == LieType::parse("A1A1"));
  CHECK(LieType::parse("A2T1").torus_rank() == 1);
  CHECK(LieType::parse("A2A1").rank() == 3);
  CHECK_THROWS_AS(LieType::parse("E9"), UsageError);
  CHECK_THROWS_AS(LieType::parse("F5"), UsageError);
  CHECK_THROWS_AS(LieType::parse("X3"), UsageError);
  CHECK_THROWS_AS(LieType::parse(""), UsageError);
}

TEST_CASE("Cartan matrices agree with Dynkin data") {
  for (const auto& name : all_simple_types()) {
    CAPTURE(name);
    const auto o = oracle::make_system(name);
    CHECK(cartan_matrix(LieType::parse(name).simple()) == o.cartan);
  }
}

TEST_CASE("inverse Cartan, positive roots and Cartan integrality") {
  for (const auto& name : all_simple_types()) {
    CAPTURE(name);
    RootSystem rs(LieType::parse(name));
    const int n = rs.rank();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int k = 0; k < n; ++k) s += static_cast<long long>(rs.cartan()[i][k]) * rs.i_cartan_num()[k][j];
        CHECK(s == (i == j ? rs.det_cartan() : 0));
      }
    }
    const auto o = oracle::make_system(name);
    CHECK(rs.pos_roots().size() == o.pos_roots.size());
    std::set<IntVec> mine;
    for (const auto& r : rs.pos_roots()) mine.insert(r.coords);
    CHECK(mine == std::set<IntVec>(o.pos_roots.begin(), o.pos_roots.end()));
    for (const auto& r : rs.pos_roots()) {
      for (int i = 0; i < n; ++i) {
        const Rational c = 2 * rs.inner(r, rv(unit(n, i))) / rs.inner(rv(unit(n, i)), rv(unit(n, i)));
        CHECK(c.denominator() == 1);
      }
    }
    for (int x : rs.root_to_weight(rs.highest_root())) CHECK(x >= 0);
  }
}

TEST_CASE("positive root counts") {
  auto count = [](const char* t) { return RootSystem(LieType::parse(t)).pos_roots().size(); };
  CHECK(count("A5") == 15);
  CHECK(count("B4") == 16);
  CHECK(count("C5") == 25);
  CHECK(count("D6") == 30);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
}

TEST_CASE("highest roots") {
  RootSystem f4(LieType::parse("F4"));
  CHECK(f4.highest_root() == rv({2, 3, 4, 2}));
  CHECK(f4.root_to_weight(f4.highest_root()) == IntVec{1, 0, 0, 0});
  RootSystem g2(LieType::parse("G2"));
  CHECK(g2.highest_root() == rv({3, 2}));
  RootSystem a1(LieType::parse("A1"));
  CHECK(a1.pos_roots().size() == 1);
  CHECK(a1.det_cartan() == 2);
  // The adjoint is fundamental in the simply-laced exceptional types.
  CHECK(RootSystem(LieType::parse("E6")).root_to_weight(RootSystem(LieType::parse("E6")).highest_root()) ==
        IntVec{0, 1, 0, 0, 0, 0});
  RootSystem e8(LieType::parse("E8"));
  CHECK(e8.root_to_weight(e8.highest_root()) == IntVec{0, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("root to weight") {
  RootSystem g2(LieType::parse("G2"));
  CHECK(g2.root_to_weight(rv({1, 0})) == g2.cartan()[0]);
  // 3 psi1 + psi2 = 3 (2,-1) + (-3,2).
  CHECK(g2.root_to_weight(rv({3, 1})) == IntVec{3, -1});
}

TEST_CASE("F4 inverse Cartan matrix and inner products") {
  RootSystem f4(LieType::parse("F4"));
  CHECK(f4.det_cartan() == 1);
  CHECK(f4.i_cartan_num() == IntMatrix{{2, 3, 4, 2}, {3, 6, 8, 4}, {2, 4, 6, 3}, {1, 2, 3, 2}});
  CHECK(f4.inner(rv({0, 0, 1, 0}), rv({0, 0, 1, 0})) == Rational(1));
  CHECK(f4.inner(rv({1, 0, 0, 0}), rv({1, 0, 0, 0})) == Rational(2));
  CHECK(f4.inner(f4.highest_root(), f4.highest_root()) == Rational(2));
  CHECK(f4.inner(rv({1, 0, 0, 0}), rv({0, 0, 1, 0})) == Rational(0));
  CHECK(f4.inner(rv({1, 0, 0, 0}), rv({0, 1, 0, 0})) == Rational(-1));
}

TEST_CASE("long roots have squared length 2") {
  for (const char* t : {"B3", "C4", "G2", "E7"}) {
    RootSystem rs(LieType::parse(t));
    Rational longest(0);
    for (const auto& r : rs.pos_roots()) longest = std::max(longest, rs.inner(r, r));
    CHECK(longest == Rational(2));
  }
}

TEST_CASE("determinant and adjugate") {
  const IntMatrix m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  CHECK(determinant(m) == 4);
  CHECK(adjugate(m) == IntMatrix{{3, 2, 1}, {2, 4, 2}, {1, 2, 3}});
  CHECK(block_diagonal({{2}}, {{2, -1}, {-1, 2}}) == IntMatrix{{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
}

TEST_CASE("Weyl dimension formula matches the oracle on fundamental weights") {
  for (const auto& name : all_simple_types()) {
    CAPTURE(name);
    const auto o = oracle::make_system(name);
    RootSystem rs(LieType::parse(name));
    const int n = rs.rank();
    CHECK(dim(rs, IntVec(n, 0)) == 1);
    for (int i = 0; i < n; ++i) {
      IntVec w(n, 0);
      w[i] = 1;
      CAPTURE(i);
      CHECK(dim(rs, w) == oracle::weyl_dim(o, w));
    }
  }
  RootSystem f4(LieType::parse("F4"));
  CHECK(dim(f4, IntVec{1, 0, 0, 0}) == 52);
  CHECK(dim(RootSystem(LieType::parse("E6")), IntVec{1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim(RootSystem(LieType::parse("A1")), IntVec{1}) == 2);
}

TEST_CASE("product types and from_cartan") {
  RootSystem rs(LieType::parse("A2A1"));
  CHECK(rs.rank() == 3);
  CHECK(rs.components().size() == 2);
  CHECK(rs.pos_roots().size() == 4);
  RootSystem g = RootSystem::from_cartan(cartan_matrix(LieType::parse("G2")));
  CHECK(g.pos_roots().size() == 6);
  CHECK_THROWS(RootSystem::from_cartan({{2, -2}, {-2, 2}}));
}
