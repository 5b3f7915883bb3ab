#include "doctest.h"

#include <algorithm>

#include "laurent/errors.hpp"
#include "laurent/generate.hpp"
#include "support/oracles.hpp"

using namespace laurent;

namespace {

BigRat q(long n, long d = 1) { return BigRat(n, d); }

bool contains(const std::vector<SolutionTriple>& s, const BigRat& x, const BigRat& y,
              const BigRat& z) {
  return std::any_of(s.begin(), s.end(), [&](const SolutionTriple& t) {
    return t.x == x && t.y == y && t.z == z;
  });
}

void check_all_verified(const GenerationResult& r) {
  for (const auto& s : r.solutions) {
    CHECK(s.verified);
    CHECK(s.nontrivial);
    CHECK(verify_triple(s.params, s.kind, s.x, s.y, s.z).verified);
  }
}

}  // namespace

TEST_CASE("presets") {
  CHECK(preset_names() == std::vector<std::string>{"example2", "example4"});
  CHECK_FALSE(find_preset("nope"));
  const auto p2 = find_preset("example2");
  REQUIRE(p2);
  CHECK(p2->params == LaurentParams(1, 0, 1));
  CHECK(p2->config.T == q(4, 3));
  CHECK(p2->printed_point == ECPoint(q(8712), q(702000)));
  CHECK(p2->config.seed == unscale_point(p2->printed_point, q(9)));
  CHECK(unscale_point(ECPoint(q(81), q(729)), q(9)) == ECPoint(q(1), q(1)));
}

TEST_CASE("constant-free product pipeline reaches every reference triple") {
  auto preset = *find_preset("example2");
  preset.config.max_multiple = 4;
  const GenerationResult r = generate_solutions(preset.params, preset.kind, preset.config);
  check_all_verified(r);
  for (const auto& t : laurent::testing::product_example_triples()) {
    CHECK(contains(r.solutions, t[0], t[1], t[2]));
  }
  CHECK(r.solutions.front().provenance.rfind("e2-multiple-", 0) == 0);
}

TEST_CASE("fixed-z square pipeline reaches the corrected reference triples") {
  const auto preset = *find_preset("example4");
  const GenerationResult r = generate_solutions(preset.params, preset.kind, preset.config);
  check_all_verified(r);
  const auto& ref = laurent::testing::square_example_triples();
  CHECK_FALSE(contains(r.solutions, ref[0][0], ref[0][1], ref[0][2]));
  CHECK(contains(r.solutions, q(8, 13), q(1, 14), q(4)));
  for (std::size_t i = 1; i < ref.size(); ++i) {
    CHECK(contains(r.solutions, ref[i][0], ref[i][1], ref[i][2]));
  }
}

TEST_CASE("full product pipeline") {
  GenerationConfig cfg;
  cfg.T = q(1);
  cfg.max_multiple = 2;
  const GenerationResult r = generate_product_solutions(LaurentParams(1, 1, 1), cfg);
  check_all_verified(r);
  CHECK(r.correspondence.method() == Correspondence::Method::base_point);
  CHECK(r.seed == ECPoint(q(2), q(8)));
  CHECK(contains(r.solutions, q(1), q(-4, 3), q(-4)));
  CHECK(contains(r.solutions, q(1), q(-3, 4), q(-4)));
  for (const auto& s : r.solutions) {
    CHECK(s.x == q(1));
    CHECK(s.provenance.rfind("e1-", 0) == 0);
  }
}

TEST_CASE("full square pipeline") {
  GenerationConfig cfg;
  cfg.max_multiple = 2;
  const GenerationResult r = generate_square_solutions(LaurentParams(1, 1, 2), cfg);
  check_all_verified(r);
  CHECK(r.correspondence.method() == Correspondence::Method::leading_square);
  CHECK(r.seed == ECPoint(q(8), q(64)));
  CHECK(contains(r.solutions, q(-1, 8), q(-2), q(1, 2)));
  CHECK(contains(r.solutions, q(-1), q(-16), q(4)));
  CHECK(contains(r.solutions, q(-16), q(-225, 49), q(-60, 7)));
  CHECK(contains(r.solutions, q(-98, 225), q(-1, 8), q(-7, 30)));
  for (const auto& s : r.solutions) CHECK(s.y * s.x == s.z * s.z);
}

TEST_CASE("positivity filter") {
  auto preset = *find_preset("example2");
  preset.config.positivity_filter = true;
  preset.config.max_multiple = 3;
  const GenerationResult r = generate_solutions(preset.params, preset.kind, preset.config);
  REQUIRE_FALSE(r.solutions.empty());
  for (const auto& s : r.solutions) {
    CHECK(s.x.sign() > 0);
    CHECK(s.y.sign() > 0);
    CHECK(s.z.sign() > 0);
  }
}

TEST_CASE("torsion translates can be switched off") {
  auto preset = *find_preset("example2");
  preset.config.max_multiple = 2;
  const auto with = generate_solutions(preset.params, preset.kind, preset.config).solutions.size();
  preset.config.use_torsion = false;
  const auto without = generate_solutions(preset.params, preset.kind, preset.config).solutions.size();
  CHECK(without < with);
}

TEST_CASE("regime errors") {
  GenerationConfig cfg;
  CHECK_THROWS_AS(generate_product_solutions(LaurentParams(1, 2, 1), cfg), RegimeError);
  CHECK_THROWS_AS(generate_product_solutions(LaurentParams(0, 1, 1), cfg), RegimeError);
  CHECK_THROWS_AS(generate_square_solutions(LaurentParams(0, 1, 1), cfg), RegimeError);
  CHECK_THROWS_AS(generate_square_solutions(LaurentParams(1, 2, 1), cfg), RegimeError);
  GenerationConfig bad;
  bad.seed = ECPoint(q(1), q(1));
  CHECK_THROWS_AS(generate_product_solutions(LaurentParams(1, 1, 1), bad), NotOnCurve);
}

TEST_CASE("seed search without a supplied point") {
  auto preset = *find_preset("example4");
  preset.config.seed.reset();
  preset.config.max_multiple = 2;
  const GenerationResult r = generate_solutions(preset.params, preset.kind, preset.config);
  CHECK(torsion_status(r.correspondence.target(), r.seed) == TorsionStatus::infinite_order());
  CHECK_FALSE(r.solutions.empty());
  check_all_verified(r);
  const auto found = search_seed(r.correspondence, 10);
  if (found) CHECK_FALSE(torsion_status(r.correspondence.target(), *found).is_torsion());
}
