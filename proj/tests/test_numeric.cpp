#include "doctest.h"

#include <sstream>

#include "laurent/bigrat.hpp"
#include "laurent/errors.hpp"
#include "support/properties.hpp"

using namespace laurent;
using laurent::testing::kDefaultSeed;

TEST_CASE("canonical form") {
  CHECK(BigRat(6, -4).to_string() == "-3/2");
  CHECK(BigRat(0, -7).to_string() == "0");
  CHECK(BigRat(0, -7).denominator() == 1);
  CHECK(BigRat(10, 5).is_integer());
  CHECK(BigRat(-12, 18) == BigRat(2, -3));
  CHECK_THROWS_AS(BigRat(1, 0), DivisionByZero);
}

TEST_CASE("parse") {
  CHECK(BigRat::parse("4/3") == BigRat(4, 3));
  CHECK(BigRat::parse("-8/6") == BigRat(-4, 3));
  CHECK(BigRat::parse("8/-6") == BigRat(-4, 3));
  CHECK(BigRat::parse("+17") == BigRat(17));
  CHECK(BigRat::parse("102449900784/62632357625").numerator() == mpz_class("102449900784"));
  CHECK_THROWS_AS(BigRat::parse(""), PreconditionError);
  CHECK_THROWS_AS(BigRat::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(BigRat::parse("abc"), PreconditionError);
  CHECK_THROWS_AS(BigRat::parse("1.5"), PreconditionError);
}

TEST_CASE("arithmetic") {
  const BigRat a(3, 4);
  const BigRat b(-5, 6);
  CHECK(a + b == BigRat(-1, 12));
  CHECK(a - b == BigRat(19, 12));
  CHECK(a * b == BigRat(-5, 8));
  CHECK(a / b == BigRat(-9, 10));
  CHECK(rat_arith(a, b, ArithOp::div) == BigRat(-9, 10));
  CHECK_THROWS_AS(rat_arith(a, BigRat(0), ArithOp::div), DivisionByZero);
  CHECK_THROWS_AS(a / BigRat(0), DivisionByZero);
  CHECK_THROWS_AS(BigRat(0).reciprocal(), DivisionByZero);
  CHECK(BigRat(-2, 3).pow(3) == BigRat(-8, 27));
  CHECK(BigRat(7).pow(0) == BigRat(1));
  CHECK(BigRat(-2, 3).abs() == BigRat(2, 3));
  CHECK(BigRat(1, 3) < BigRat(1, 2));
  std::ostringstream os;
  os << BigRat(-9, 12);
  CHECK(os.str() == "-3/4");
}

TEST_CASE("square detection") {
  CHECK(rat_is_square(BigRat(9, 4)) == BigRat(3, 2));
  CHECK(rat_is_square(BigRat(0)) == BigRat(0));
  CHECK_FALSE(rat_is_square(BigRat(2)));
  CHECK_FALSE(rat_is_square(BigRat(-4)));
  CHECK_FALSE(rat_is_square(BigRat(4, 3)));
  CHECK(exact_isqrt(mpz_class("152415787532388367501905199875019052100")) ==
        mpz_class("12345678901234567890"));
  CHECK_FALSE(exact_isqrt(mpz_class(-1)));
}

TEST_CASE("exact quadratic roots") {
  CHECK(solve_quadratic_exact({BigRat(1), BigRat(-5), BigRat(6)}) ==
        std::vector<BigRat>{BigRat(2), BigRat(3)});
  CHECK(solve_quadratic_exact({BigRat(4), BigRat(-4), BigRat(1)}) ==
        std::vector<BigRat>{BigRat(1, 2)});
  CHECK(solve_quadratic_exact({BigRat(1), BigRat(0), BigRat(-2)}).empty());
  CHECK(solve_quadratic_exact({BigRat(1), BigRat(0), BigRat(1)}).empty());
  SUBCASE("linear fallback") {
    CHECK(solve_quadratic_exact({BigRat(0), BigRat(3), BigRat(-2)}) ==
          std::vector<BigRat>{BigRat(2, 3)});
  }
  CHECK_THROWS_AS(solve_quadratic_exact({BigRat(0), BigRat(0), BigRat(0)}), DegenerateIdentity);
  CHECK_THROWS_AS(solve_quadratic_exact({BigRat(0), BigRat(0), BigRat(1)}), PreconditionError);
  const QuadraticPoly p{BigRat(2), BigRat(3), BigRat(-5)};
  CHECK(p.scaled(BigRat(-3, 2)) == QuadraticPoly{BigRat(-3), BigRat(-9, 2), BigRat(15, 2)});
  CHECK(solve_quadratic_exact(p.scaled(BigRat(7))) == solve_quadratic_exact(p));
}

TEST_CASE("hash agrees with equality") {
  CHECK(std::hash<BigRat>{}(BigRat(2, 4)) == std::hash<BigRat>{}(BigRat(1, 2)));
  CHECK(std::hash<BigRat>{}(BigRat(-3)) == std::hash<BigRat>{}(BigRat::parse("-6/2")));
}

TEST_CASE("numeric properties") {
  for (const auto& r : {laurent::testing::prop_canonical_form(kDefaultSeed),
                        laurent::testing::prop_square_detection(kDefaultSeed),
                        laurent::testing::prop_quadratic_roots(kDefaultSeed)}) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
