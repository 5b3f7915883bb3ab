#pragma once

/**
 * @file families.hpp
 * @brief Closed-form solution families, kept as one formula table keyed by
 *        FamilyId.
 *
 * Each family lists the free parameters it needs (T, t, u, v, k, l, z, x, a),
 * its regime condition, and the named denominators that must not vanish.
 * Every triple is passed through verify_triple before it is returned.
 */

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laurent/bigrat.hpp"
#include "laurent/equation.hpp"

namespace laurent {

enum class FamilyId {
  product_full,            // n = 1, ABC != 0, free T
  product_degenerate,      // n = 1, 4AC = B^2, free T, t
  square_ratio_neg_base,   // n = 2, full regime
  square_ratio_neg_double, // n = 2, full regime
  square_degenerate,       // n = 2, 4AC = B^2, free t
  unit_integer_k,          // n = 1, A = 0, B = 1, integer k
  unit_integer_kl,         // n = 1, A = 0, B = 1, integers k, l
  no_linear_rational,      // n = 1, A = 0, B not in {0, 1}, free u, v
  no_linear_square,        // n = 2, A = 0, B != 0, free u, v
  padoa,                   // n = 1, (A,B,C) = (0,1,1), integer z >= 1
  steggall,                // n = 1, (A,B,C) = (0,1,1), integers x, a
};

struct FamilyInfo {
  FamilyId id;
  std::string_view name;  // command-line identifier
  EquationKind kind;
  std::vector<std::string_view> parameters;
  std::string_view condition;
};

const std::vector<FamilyInfo>& family_catalog();
const FamilyInfo& family_info(FamilyId id);
/// Accepts the command-line identifier; nullopt when unknown.
std::optional<FamilyId> family_from_name(std::string_view name);

struct FamilyInput {
  LaurentParams params{0, 1, 1};
  std::map<std::string, BigRat> free;
};

/// Evaluates the family. Throws RegimeError on a regime mismatch,
/// PreconditionError for a missing parameter, a vanishing denominator (the
/// message names it) or a zero coordinate, and InternalVerificationError if a
/// produced triple does not verify.
std::vector<SolutionTriple> family_eval(FamilyId id, const FamilyInput& in);

/// All (x, y) with (x - z)(y - z) = z(z + 1), one per ordered divisor pair,
/// in increasing x. Throws PreconditionError for z < 1 or z > 2^31.
std::vector<std::pair<long, long>> padoa_enumerate(long z);

/// y = a - x - 1, z = x - x(x+1)/a. Needs x >= 1, a | x(x+1), a > x + 1.
SolutionTriple steggall_solution(long x, long a);

}  // namespace laurent
