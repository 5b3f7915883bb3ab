#include "doctest.h"

#include <sstream>

#include "laurent/equation.hpp"
#include "laurent/errors.hpp"
#include "support/properties.hpp"

using namespace laurent;
using laurent::testing::kDefaultSeed;

namespace {
BigRat q(long n, long d = 1) { return BigRat(n, d); }
}  // namespace

TEST_CASE("parameters and regimes") {
  CHECK(LaurentParams(1, 1, 1).regime() == Regime::full);
  CHECK(LaurentParams(1, 2, 1).regime() == Regime::degenerate_square);
  CHECK(LaurentParams(-1, 2, -1).regime() == Regime::degenerate_square);
  CHECK(LaurentParams(1, 0, 1).regime() == Regime::no_constant);
  CHECK(LaurentParams(0, 1, 1).regime() == Regime::no_linear);
  CHECK(LaurentParams(0, 0, 1).regime() == Regime::no_linear);
  CHECK_THROWS_AS(LaurentParams(1, 1, 0), PreconditionError);
  CHECK(to_string(Regime::no_constant) == "no_constant");
  std::ostringstream os;
  os << LaurentParams(1, -2, 3);
  CHECK(os.str() == "(A=1, B=-2, C=3)");
  CHECK(equation_kind(1) == EquationKind::product);
  CHECK(equation_kind(2) == EquationKind::square);
  CHECK_THROWS_AS(equation_kind(3), PreconditionError);
}

TEST_CASE("f evaluation") {
  const LaurentParams p(2, -3, 5);
  CHECK(f_eval(p, q(2)) == q(7, 2));
  CHECK(f_eval(p, q(-1, 2)) == q(-14));
  CHECK_THROWS_AS(f_eval(p, q(0)), PreconditionError);
}

TEST_CASE("verification and nontriviality") {
  const LaurentParams p(0, 1, 1);
  auto s = verify_triple(p, EquationKind::product, q(3), q(8), q(2));
  CHECK(s.verified);
  CHECK(s.nontrivial);
  s = verify_triple(p, EquationKind::product, q(1), q(2), q(3));
  CHECK_FALSE(s.verified);
  CHECK_THROWS_AS(verify_triple(p, EquationKind::product, q(0), q(2), q(3)), PreconditionError);
  // f = 1 + 1/X vanishes at -1
  s = verify_triple(p, EquationKind::product, q(-1), q(5), q(-1));
  CHECK(s.verified);
  CHECK_FALSE(s.nontrivial);
  // square equation with f(x) = f(y) is trivial
  const LaurentParams r(1, 0, -1);
  s = verify_triple(r, EquationKind::square, q(2), q(2), q(2));
  CHECK(s.verified);
  CHECK_FALSE(s.nontrivial);
  s = verify_triple(r, EquationKind::square, q(8, 13), q(1, 14), q(4));
  CHECK(s.verified);
  CHECK(s.nontrivial);
  CHECK(s.params == r);
}

TEST_CASE("first-coordinate completion") {
  const LaurentParams r(1, 0, -1);
  const auto xs = complete_first_coordinate(r, EquationKind::square, q(1, 14), q(4));
  CHECK(xs == std::vector<BigRat>{q(-13, 8), q(8, 13)});
  CHECK_FALSE(verify_triple(r, EquationKind::square, q(18, 13), q(1, 14), q(4)).verified);
  CHECK(complete_first_coordinate(r, EquationKind::square, q(1), q(4)).empty());
}

TEST_CASE("product quadratic and quartic for (1, 1, 1) at T = 1") {
  const LaurentParams p(1, 1, 1);
  const QuadraticPoly quad = product_quadratic(p, q(1), q(-4));
  CHECK(solve_quadratic_exact(quad) == std::vector<BigRat>{q(-4, 3), q(-3, 4)});
  const QuarticModel m = product_discriminant(p, q(1));
  CHECK(m.coefficients() == std::array<BigRat, 5>{q(1), q(-4), q(-30), q(-4), q(1)});
  CHECK_THROWS_AS(product_discriminant(LaurentParams(1, 2, 1), q(1)), RegimeError);
  CHECK_THROWS_AS(product_discriminant(LaurentParams(0, 1, 1), q(1)), RegimeError);
}

TEST_CASE("product cubic with the corrected middle coefficient") {
  const LaurentParams p(1, 1, 1);
  const WeierstrassCurve E = product_curve(p, q(1));
  const BigRat shift(2);
  const QuarticModel m = product_discriminant(p, q(1));
  CHECK(E.a2() == m.c2());
  CHECK(E.a6() / shift == E.a4() - shift * (m.c2() - shift));
  const ECPoint P = product_base_point(p, q(1));
  CHECK(P == ECPoint(q(2), q(8)));
  CHECK(E.contains(P));
  CHECK(product_base_double(p, q(1)) == ec_scalar_mul(E, 2, P));
}

TEST_CASE("constant-free product quartic and cubic") {
  const QuarticModel m = product_discriminant_no_constant(1, 1, q(4, 3));
  CHECK(m.coefficients() == std::array<BigRat, 5>{q(16, 9), q(0), q(-2212, 81), q(0), q(16, 9)});
  CHECK(m == product_discriminant(LaurentParams(1, 0, 1), q(4, 3)));
  const NoConstantCurve nc = product_curve_no_constant(1, 1, q(4, 3));
  CHECK(nc.roots == std::array<BigRat, 3>{q(32, 9), q(-32, 9), q(2212, 81)});
}

TEST_CASE("square-ratio quadratic and quartic") {
  const LaurentParams p(1, 1, 2);
  CHECK_THROWS_AS(square_ratio_quadratic(p, q(1)), PreconditionError);
  CHECK_THROWS_AS(square_ratio_quadratic(p, q(0)), PreconditionError);
  const QuadraticPoly quad = square_ratio_quadratic(p, q(2));
  CHECK(quad == QuadraticPoly{q(4), q(18), q(2)});
  const QuarticModel m = square_ratio_discriminant(1, 1, 2);
  CHECK(m.coefficients() == std::array<BigRat, 5>{q(4), q(16), q(16), q(16), q(4)});
  CHECK(m.eval(q(2)) == quad.discriminant());
  CHECK_THROWS_AS(square_ratio_discriminant(1, 2, 1), RegimeError);
  CHECK_THROWS_AS(square_ratio_curve(1, 0, 1), RegimeError);
}

TEST_CASE("fixed-z quadratic at z = 4") {
  const QuadraticPoly quad = square_fixed_z_quadratic(1, -1, q(1, 14), q(4));
  CHECK(solve_quadratic_exact(quad) == std::vector<BigRat>{q(-13, 8), q(8, 13)});
  CHECK(square_fixed_z_quartic(1, -1, q(4)).eval(q(1, 14)) == quad.discriminant());
  CHECK(quad.c / quad.a == q(-1));
}

TEST_CASE("equation properties") {
  using namespace laurent::testing;
  for (const auto& r :
       {prop_product_discriminant_identity(kDefaultSeed),
        prop_no_constant_discriminant_identity(kDefaultSeed),
        prop_square_ratio_discriminant_identity(kDefaultSeed),
        prop_fixed_z_roots_verify(kDefaultSeed), prop_product_root_product(kDefaultSeed),
        prop_product_curve_fit(kDefaultSeed)}) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
