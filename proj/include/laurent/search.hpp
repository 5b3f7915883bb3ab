#pragma once

/**
 * @file search.hpp
 * @brief Exhaustive integer search for f(x) f(y) = f(z)^n in a box.
 *
 * f(z)^n is indexed once per z, so each (x, y) costs one hash lookup. Values
 * are reduced fractions held in 128-bit integers when the box and
 * coefficients are small enough to rule out overflow, and BigRat otherwise;
 * both paths give identical results.
 */

#include <chrono>
#include <cstdint>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "laurent/bigrat.hpp"
#include "laurent/equation.hpp"

namespace laurent {

struct SearchBox {
  long x_min = -100;
  long x_max = 100;
  long z_min = -100;
  long z_max = 100;
  bool require_x_lt_y = true;  // y ranges over [x_min, x_max] as well

  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

/// Throws PreconditionError when x_min > x_max or z_min > z_max.
void validate(const SearchBox& box);

struct SearchStats {
  std::uint64_t candidates_scanned = 0;
  std::chrono::duration<double> elapsed{0};
};

struct SearchReport {
  LaurentParams params;
  EquationKind kind;
  SearchBox box;
  std::vector<SolutionTriple> solutions;  // verified, nontrivial, sorted by (x, y, z)
  SearchStats stats;
};

enum class SearchPath { automatic, wide_integer, big_rational };

/// threads = 0 uses the hardware concurrency.
SearchReport brute_force(const LaurentParams& p, EquationKind kind, const SearchBox& box,
                         unsigned threads = 1, SearchPath path = SearchPath::automatic);

/// brute_force per parameter set, run concurrently across sets; reports come
/// back in input order. Throws PreconditionError for an empty list.
std::vector<SearchReport> sweep(const std::vector<LaurentParams>& params, EquationKind kind,
                                const SearchBox& box, unsigned threads = 1);

/// All z in [z_min, z_max] \ {0} with f(z)^n = value, ascending. Exposed for
/// index checks.
class FValueIndex {
 public:
  FValueIndex(const LaurentParams& p, EquationKind kind, long z_min, long z_max);
  const std::vector<long>& lookup(const BigRat& value) const;

 private:
  std::unordered_map<BigRat, std::vector<long>> map_;
  std::vector<long> empty_;
};

bool wide_integer_path_fits(const LaurentParams& p, const SearchBox& box);

}  // namespace laurent
