#include "doctest.h"

#include <algorithm>

#include "laurent/errors.hpp"
#include "laurent/search.hpp"
#include "support/properties.hpp"

using namespace laurent;
using laurent::testing::IntTriple;
using laurent::testing::kDefaultSeed;

namespace {

std::vector<IntTriple> ints(const SearchReport& r) {
  std::vector<IntTriple> out;
  for (const auto& s : r.solutions) {
    out.push_back({s.x.numerator().get_si(), s.y.numerator().get_si(), s.z.numerator().get_si()});
  }
  return out;
}

}  // namespace

TEST_CASE("box validation") {
  CHECK_THROWS_AS(validate(SearchBox{5, 4, -1, 1, true}), PreconditionError);
  CHECK_THROWS_AS(validate(SearchBox{-1, 1, 3, 2, true}), PreconditionError);
  CHECK_NOTHROW(validate(SearchBox{}));
}

TEST_CASE("integer table row C = 1") {
  const SearchReport r = brute_force(LaurentParams(1, 1, 1), EquationKind::product, SearchBox{});
  const auto got = ints(r);
  CHECK(std::find(got.begin(), got.end(), IntTriple{-3, -2, 2}) != got.end());
  CHECK(std::is_sorted(got.begin(), got.end()));
  CHECK(r.stats.candidates_scanned > 0);
  for (const auto& s : r.solutions) {
    CHECK(s.verified);
    CHECK(s.nontrivial);
    CHECK(s.provenance == "search");
    CHECK(s.x < s.y);
  }
}

TEST_CASE("ordered pairs") {
  SearchBox box{-10, 10, -10, 10, false};
  const auto both = ints(brute_force(LaurentParams(0, 1, 2), EquationKind::product, box));
  box.require_x_lt_y = true;
  const auto lt = ints(brute_force(LaurentParams(0, 1, 2), EquationKind::product, box));
  CHECK(both.size() > lt.size());
  for (const auto& [x, y, z] : lt) {
    CHECK(std::find(both.begin(), both.end(), IntTriple{y, x, z}) != both.end());
  }
}

TEST_CASE("path selection") {
  CHECK(wide_integer_path_fits(LaurentParams(1, 1, 1), SearchBox{}));
  CHECK_FALSE(wide_integer_path_fits(LaurentParams(1, 1, 1),
                                     SearchBox{-(1L << 40), 1L << 40, -1, 1, true}));
  const SearchBox huge{-3, 3, -(1L << 40), (1L << 40), true};
  CHECK_THROWS_AS(brute_force(LaurentParams(1, 1, 1), EquationKind::product, huge, 1,
                              SearchPath::wide_integer),
                  PreconditionError);
}

TEST_CASE("index") {
  const FValueIndex idx(LaurentParams(0, 1, 1), EquationKind::product, -5, 5);
  CHECK(idx.lookup(BigRat(3, 2)) == std::vector<long>{2});
  CHECK(idx.lookup(BigRat(0)) == std::vector<long>{-1});
  CHECK(idx.lookup(BigRat(7)).empty());
  const FValueIndex sq(LaurentParams(1, 0, 1), EquationKind::square, -5, 5);
  CHECK(sq.lookup(BigRat(25, 4)) == std::vector<long>{-2, 2});
}

TEST_CASE("sweep keeps input order") {
  const std::vector<LaurentParams> ps{LaurentParams(0, 1, 3), LaurentParams(0, 1, 1),
                                      LaurentParams(0, 1, 2)};
  const SearchBox box{-20, 20, -20, 20, true};
  const auto reports = sweep(ps, EquationKind::product, box, 3);
  REQUIRE(reports.size() == 3);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(reports[i].params == ps[i]);
    CHECK(ints(reports[i]) == ints(brute_force(ps[i], EquationKind::product, box)));
  }
  CHECK_THROWS_AS(sweep({}, EquationKind::product, box), PreconditionError);
}

TEST_CASE("search properties") {
  using namespace laurent::testing;
  for (const auto& r : {prop_search_determinism(kDefaultSeed), prop_search_index(kDefaultSeed),
                        prop_search_tiny_box(kDefaultSeed), prop_search_paths_agree(kDefaultSeed)}) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
