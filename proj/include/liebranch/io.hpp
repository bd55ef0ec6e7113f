#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "liebranch/reps.hpp"
#include "liebranch/rules.hpp"

namespace liebranch {

/// "1,0,-2" -> {1,0,-2}. Whitespace around entries is ignored.
IntVec parse_weight(std::string_view text);
/// "1,0;0,1" -> two weights.
std::vector<IntVec> parse_weights(std::string_view text);

/// LiE-style text: "1X[0,1,0] +1X[2,0,0]", terms in ascending order.
/// Central coordinates follow the semisimple ones inside the brackets.
/// The empty decomposition renders as "0".
std::string to_lie_text(const Decomposition& d);
/// Inverse of to_lie_text; the number of trailing central entries per term
/// is d.type.torus_rank().
Decomposition parse_lie_text(std::string_view text, const LieType& type);

/// {"g", "weight", "k", "components": [{"mult", "weight", "central"}]}.
std::string to_json(const Decomposition& d, const LieType& g, const IntVec& input);

struct JsonResult {
  LieType g;
  IntVec weight;
  Decomposition decomposition;
};
JsonResult parse_json(std::string_view text);

/// Rows of the restriction matrix, central columns marked with their
/// denominator.
std::string render_matrix(const RestrictionSpec& spec);

}  // namespace liebranch
