#include "doctest.h"

#include <sstream>

#include "laurent/elliptic.hpp"
#include "laurent/equation.hpp"
#include "laurent/errors.hpp"
#include "support/properties.hpp"

using namespace laurent;
using laurent::testing::kDefaultSeed;

namespace {
BigRat q(long n, long d = 1) { return BigRat(n, d); }
}  // namespace

TEST_CASE("construction and membership") {
  const WeierstrassCurve E(q(0), q(0), q(1));
  CHECK(E.contains(ECPoint(q(2), q(3))));
  CHECK_FALSE(E.contains(ECPoint(q(2), q(2))));
  CHECK(E.contains(ECPoint::identity()));
  CHECK_THROWS_AS(E.point(q(1), q(1)), NotOnCurve);
  CHECK_THROWS_AS(WeierstrassCurve(q(0), q(0), q(0)), SingularCurve);
  CHECK_THROWS_AS(WeierstrassCurve::from_roots(q(1), q(1), q(2)), SingularCurve);
  const WeierstrassCurve F = WeierstrassCurve::from_roots(q(-1), q(0), q(1));
  CHECK(F == WeierstrassCurve(q(0), q(-1), q(0)));
  CHECK(WeierstrassCurve::from_factored(q(2), q(3), q(5)) == WeierstrassCurve(q(5), q(11), q(10)));
  CHECK(curve_discriminant(F) == q(4));
}

TEST_CASE("group law on y^2 = x^3 + 1") {
  const WeierstrassCurve E(q(0), q(0), q(1));
  const ECPoint P(q(2), q(3));
  CHECK(ec_scalar_mul(E, 2, P) == ECPoint(q(0), q(1)));
  CHECK(ec_scalar_mul(E, 3, P) == ECPoint(q(-1), q(0)));
  CHECK(ec_scalar_mul(E, 6, P).is_identity());
  CHECK(ec_scalar_mul(E, -1, P) == ECPoint(q(2), q(-3)));
  CHECK(ec_scalar_mul(E, 0, P).is_identity());
  CHECK(torsion_status(E, P) == TorsionStatus::torsion(6));
  CHECK_THROWS_AS(ec_add(E, P, ECPoint(q(1), q(1))), NotOnCurve);
}

TEST_CASE("torsion orders") {
  const WeierstrassCurve E7(q(0), q(-43), q(166));
  CHECK(torsion_status(E7, ECPoint(q(3), q(8))) == TorsionStatus::torsion(7));
  const WeierstrassCurve E(q(0), q(-2), q(0));
  const auto s = torsion_status(E, ECPoint(q(2), q(2)));
  CHECK(s == TorsionStatus::infinite_order());
  std::ostringstream os;
  os << s << ' ' << TorsionStatus::torsion(4);
  CHECK(os.str() == "infinite_order torsion(4)");
  CHECK_THROWS_AS(torsion_status(E, ECPoint::identity()), PreconditionError);
  CHECK_THROWS_AS(torsion_status(E, ECPoint(q(1), q(1))), NotOnCurve);
}

TEST_CASE("two-power torsion") {
  // y^2 = x^3 - x: Z/2 x Z/2
  const WeierstrassCurve E = WeierstrassCurve::from_roots(q(-1), q(0), q(1));
  CHECK(two_torsion_points(E).size() == 3);
  CHECK(two_power_torsion(E).size() == 4);
  // y^2 = x^3 + 1: one rational root, no halving
  CHECK(two_torsion_points(WeierstrassCurve(q(0), q(0), q(1))).size() == 1);
  CHECK(two_power_torsion(WeierstrassCurve(q(0), q(0), q(1))).size() == 2);
  // y^2 = x^3 + x + 1: no rational 2-torsion
  CHECK(two_power_torsion(WeierstrassCurve(q(0), q(1), q(1))).size() == 1);
}

TEST_CASE("halving") {
  const WeierstrassCurve E = WeierstrassCurve::from_roots(q(-1), q(0), q(1));
  const auto halves = halve(E, ECPoint::identity());
  CHECK(halves.size() == 4);
  for (const ECPoint& h : halves) CHECK(ec_scalar_mul(E, 2, h).is_identity());
  const ECPoint P(q(-1), q(0));
  CHECK(halve(E, P).empty());
  CHECK(halve(WeierstrassCurve(q(0), q(0), q(1)), ECPoint(q(2), q(3))).empty());
}

TEST_CASE("rescaling") {
  const WeierstrassCurve E(q(1), q(-2), q(1));
  const ECPoint P(q(0), q(1));
  REQUIRE(E.contains(P));
  const WeierstrassCurve S = rescale(E, q(3));
  CHECK(S == WeierstrassCurve(q(9), q(-162), q(729)));
  CHECK(S.contains(rescale(P, q(3))));
  CHECK(rescale(P, q(3)) == ECPoint(q(0), q(27)));
  CHECK(rescale(ECPoint::identity(), q(3)).is_identity());
}

TEST_CASE("curve regression: constant-free product cubic at x = 4/3") {
  const NoConstantCurve nc = product_curve_no_constant(1, 1, q(4, 3));
  const WeierstrassCurve scaled = rescale(nc.curve, q(9));
  CHECK(scaled == WeierstrassCurve::from_roots(q(288), q(-288), q(2212)));
  const ECPoint printed(q(8712), q(702000));
  CHECK(scaled.contains(printed));
  CHECK(torsion_status(scaled, printed).kind() == TorsionStatus::Kind::infinite_order);
  for (const BigRat& e : {q(288), q(-288), q(2212)}) {
    CHECK(torsion_status(scaled, ECPoint(e, q(0))) == TorsionStatus::torsion(2));
  }
}

TEST_CASE("curve regression: square-ratio cubic for (1, 1, 2)") {
  const SquareRatioCurve sc = square_ratio_curve(1, 1, 2);
  CHECK(sc.curve == WeierstrassCurve::from_factored(q(8), q(8), q(128)));
  CHECK(sc.base == ECPoint(q(8), q(64)));
  CHECK(sc.curve.contains(sc.base));
  CHECK(torsion_status(sc.curve, sc.base) == TorsionStatus::infinite_order());
  const BaseMultiples bm = square_ratio_multiples(1, 1, 2);
  CHECK(bm.doubled == ec_scalar_mul(sc.curve, 2, sc.base));
  CHECK(bm.quadrupled == ec_scalar_mul(sc.curve, 4, sc.base));
}

TEST_CASE("square-ratio base point of finite order") {
  const auto order = [](long A, long B, long C) {
    const SquareRatioCurve sc = square_ratio_curve(A, B, C);
    REQUIRE(sc.curve.contains(sc.base));
    return torsion_status(sc.curve, sc.base);
  };
  CHECK(order(1, 1, 1) == TorsionStatus::torsion(4));
  CHECK(order(2, 4, 8) == TorsionStatus::torsion(4));
  CHECK(order(1, 1, -1) == TorsionStatus::torsion(3));
  CHECK(order(1, 3, 3) == TorsionStatus::torsion(3));
  CHECK(order(-1, 6, -12) == TorsionStatus::torsion(3));
  CHECK(order(1, 2, 3) == TorsionStatus::infinite_order());
}

TEST_CASE("elliptic properties") {
  using namespace laurent::testing;
  for (const auto& r :
       {prop_commutativity(kDefaultSeed), prop_associativity(kDefaultSeed),
        prop_scalar_laws(kDefaultSeed), prop_no_constant_two_torsion(kDefaultSeed),
        prop_square_ratio_multiples(kDefaultSeed)}) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.ok);
  }
}
