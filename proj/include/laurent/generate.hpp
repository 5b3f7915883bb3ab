#pragma once

/**
 * @file generate.hpp
 * @brief Point-to-solution pipelines: walk multiples of a seed on a
 *        descended cubic, pull each point back to the quartic and solve the
 *        matching quadratic.
 *
 * Product equation (n = 1), x = T fixed:
 *   full regime         quartic in z from product_discriminant, anchored at
 *                       (0, C T); default seed product_base_point.
 *   no_constant regime  biquadratic quartic in z; seed supplied or searched.
 *
 * Square equation (n = 2):
 *   full regime         y = x T^2, z = x T; quartic in T anchored at the
 *                       leading square A C; default seed (2A^2C^2, 8A^3C^3).
 *   no_constant regime  z fixed; biquadratic quartic in y; seed supplied or
 *                       searched.
 *
 * Points visited: +-[m]S + t for m = 1..max_multiple and t over the rational
 * torsion points of 2-power order (only the identity when the cubic does not
 * split). Every emitted triple passes verify_triple.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/bigrat.hpp"
#include "laurent/elliptic.hpp"
#include "laurent/equation.hpp"
#include "laurent/quartic.hpp"

namespace laurent {

struct GenerationConfig {
  BigRat T{1};        // x for n = 1; z / x for n = 2 (unused there)
  BigRat z_fixed{1};  // z for the square equation without constant term
  int max_multiple = 8;
  bool positivity_filter = false;
  /// Seed on the descended cubic, in its own (unscaled) coordinates.
  std::optional<ECPoint> seed;
  bool use_torsion = true;
  /// Drop triples that verify but are trivial.
  bool require_nontrivial = true;
  /// Height bound for the seed search when no seed is given and no canonical
  /// one exists.
  long seed_search_height = 60;
};

struct GenerationResult {
  Correspondence correspondence;
  ECPoint seed;
  std::vector<SolutionTriple> solutions;
  /// One line per skipped point or candidate.
  std::vector<std::string> diagnostics;
};

/// n = 1. Full and no_constant regimes; RegimeError otherwise (the
/// 4AC = B^2 case is covered by the degenerate product family).
GenerationResult generate_product_solutions(const LaurentParams& p, const GenerationConfig& cfg);

/// n = 2. Full and no_constant regimes; RegimeError otherwise.
GenerationResult generate_square_solutions(const LaurentParams& p, const GenerationConfig& cfg);

/// Dispatch on kind.
GenerationResult generate_solutions(const LaurentParams& p, EquationKind kind,
                                    const GenerationConfig& cfg);

/// Searches v^2 = q(s) for s = a/b with |a|, b <= height, transports each hit
/// and returns the first point of infinite order.
std::optional<ECPoint> search_seed(const Correspondence& corr, long height);

/// A shipped configuration with its seed given in printed coordinates
/// (V, U) = (u^2 X, u^3 Y).
struct GenerationPreset {
  std::string name;
  LaurentParams params;
  EquationKind kind;
  GenerationConfig config;  // seed already in unscaled coordinates
  ECPoint printed_point;
  BigRat scale;  // u
};

/// "example2": f = X + 1/X, n = 1, x = 4/3, (V, U) = (8712, 702000), u = 9.
/// "example4": f = X - 1/X, n = 2, z = 4, (X, Y) = (112352/49, 79764000/343), u = 1.
std::optional<GenerationPreset> find_preset(std::string_view name);
std::vector<std::string> preset_names();

/// (V, U) -> (V / u^2, U / u^3).
ECPoint unscale_point(const ECPoint& printed, const BigRat& u);

}  // namespace laurent
