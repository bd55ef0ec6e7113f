#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace liebranch {

using Rational = boost::rational<long long>;
using BigInt = boost::multiprecision::cpp_int;
using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

/// Bad input from a caller: malformed types, weights, parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result broke a mathematical invariant (e.g. an invalid
/// restriction matrix produced a negative multiplicity).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type in canonical form: A≥1, B≥2, C≥3, D≥4, E6-8, F4, G2.
/// Construction from a non-canonical pair throws; use LieType::from_family
/// to fold aliases such as D3 or C2.
class SimpleLieType {
 public:
  SimpleLieType(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  friend bool operator==(const SimpleLieType&, const SimpleLieType&) = default;
  friend auto operator<=>(const SimpleLieType&, const SimpleLieType&) = default;

  static bool is_canonical(Family family, int rank);

 private:
  Family family_;
  int rank_;
};

/// Product of simple factors plus a central torus.
class LieType {
 public:
  LieType() = default;
  LieType(std::vector<SimpleLieType> factors, int torus_rank = 0);
  LieType(const SimpleLieType& simple) : factors_{simple} {}

  /// Canonical type for a family/rank pair, accepting the low-rank aliases
  /// B1, C1 -> A1, C2 -> B2, D2 -> A1A1, D3 -> A3 and the empty B0/C0/D0.
  static LieType from_family(Family family, int rank);

  /// Parses "E8", "A2A2", "A1D6", "E6T1", "D3" (-> A3), "T2".
  static LieType parse(std::string_view text);

  const std::vector<SimpleLieType>& factors() const { return factors_; }
  int torus_rank() const { return torus_rank_; }
  int semisimple_rank() const;
  int rank() const { return semisimple_rank() + torus_rank_; }
  bool is_simple() const { return factors_.size() == 1 && torus_rank_ == 0; }
  const SimpleLieType& simple() const;

  LieType operator*(const LieType& other) const;

  /// "A1A5", "E6T1"; the empty type renders as "T0".
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  std::vector<SimpleLieType> factors_;
  int torus_rank_ = 0;
};

/// Integer weight in fundamental-weight coordinates, with optional exact
/// torus coordinates appended for reductive targets.
struct Weight {
  IntVec coords;
  std::vector<Rational> central;

  Weight() = default;
  Weight(IntVec c) : coords(std::move(c)) {}
  Weight(IntVec c, std::vector<Rational> z) : coords(std::move(c)), central(std::move(z)) {}

  bool is_dominant() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b);
};

/// Coordinates of a root in the simple-root basis.
struct RootVec {
  IntVec coords;

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;
};

std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace liebranch
