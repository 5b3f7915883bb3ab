#pragma once

/**
 * @file elliptic.hpp
 * @brief Elliptic curves Y^2 = X^3 + a2 X^2 + a4 X + a6 over Q.
 *
 * Only the a1 = a3 = 0 model is supported. Points are plain values; every
 * group operation takes the curve explicitly and rejects points that are not
 * on it.
 *
 * Infinite order is decided with Mazur's bound: a rational torsion point has
 * order at most 12, so if none of [2]P..[12]P is the identity then P has
 * infinite order. No minimal model or Nagell-Lutz integrality test is needed.
 */

#include <array>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "laurent/bigrat.hpp"

namespace laurent {

class ECPoint {
 public:
  static ECPoint identity() { return ECPoint(); }
  ECPoint(BigRat x, BigRat y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_identity() const { return !xy_.has_value(); }
  // Precondition: !is_identity().
  const BigRat& x() const { return xy_->first; }
  const BigRat& y() const { return xy_->second; }

  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  ECPoint() = default;
  std::optional<std::pair<BigRat, BigRat>> xy_;
};

std::ostream& operator<<(std::ostream& os, const ECPoint& p);

class WeierstrassCurve {
 public:
  /// Throws SingularCurve when the cubic has a repeated root.
  WeierstrassCurve(BigRat a2, BigRat a4, BigRat a6);

  /// (X - e1)(X - e2)(X - e3), expanded.
  static WeierstrassCurve from_roots(const BigRat& e1, const BigRat& e2, const BigRat& e3);
  /// (X + shift)(X^2 + p X + q), expanded.
  static WeierstrassCurve from_factored(const BigRat& shift, const BigRat& p, const BigRat& q);

  const BigRat& a2() const { return a2_; }
  const BigRat& a4() const { return a4_; }
  const BigRat& a6() const { return a6_; }

  /// X^3 + a2 X^2 + a4 X + a6
  BigRat rhs(const BigRat& x) const;
  bool contains(const ECPoint& p) const;
  /// Checked construction; throws NotOnCurve.
  ECPoint point(BigRat x, BigRat y) const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  BigRat a2_;
  BigRat a4_;
  BigRat a6_;
};

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e);

/// Discriminant of the cubic X^3 + a2 X^2 + a4 X + a6 (zero iff singular).
BigRat curve_discriminant(const BigRat& a2, const BigRat& a4, const BigRat& a6);
BigRat curve_discriminant(const WeierstrassCurve& e);

bool on_curve(const WeierstrassCurve& e, const ECPoint& p);
ECPoint ec_neg(const WeierstrassCurve& e, const ECPoint& p);
ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);
/// Double-and-add; negative n negates first.
ECPoint ec_scalar_mul(const WeierstrassCurve& e, long n, const ECPoint& p);

class TorsionStatus {
 public:
  enum class Kind { torsion, infinite_order };

  static TorsionStatus torsion(int order) { return TorsionStatus(Kind::torsion, order); }
  static TorsionStatus infinite_order() { return TorsionStatus(Kind::infinite_order, 0); }

  Kind kind() const { return kind_; }
  bool is_torsion() const { return kind_ == Kind::torsion; }
  // 0 for infinite order.
  int order() const { return order_; }

  friend bool operator==(const TorsionStatus&, const TorsionStatus&) = default;

 private:
  TorsionStatus(Kind kind, int order) : kind_(kind), order_(order) {}
  Kind kind_;
  int order_;
};

std::ostream& operator<<(std::ostream& os, const TorsionStatus& t);

/// Throws PreconditionError for the identity and NotOnCurve off the curve.
TorsionStatus torsion_status(const WeierstrassCurve& e, const ECPoint& p);

/// Points (e, 0) for every rational root e of the cubic, sorted by e.
std::vector<ECPoint> two_torsion_points(const WeierstrassCurve& e);

/// All rational Q with [2]Q = p. Only available when the cubic splits over Q;
/// returns an empty list otherwise.
std::vector<ECPoint> halve(const WeierstrassCurve& e, const ECPoint& p);

/// The identity, the rational 2-torsion and, when the cubic splits over Q,
/// every point reachable from them by repeated halving: the whole 2-power
/// part of the rational torsion subgroup in that case. Odd-order torsion is
/// not searched.
std::vector<ECPoint> two_power_torsion(const WeierstrassCurve& e);

/// The model with coordinates (u^2 X, u^3 Y). Used to match curves printed in
/// scaled coordinates.
WeierstrassCurve rescale(const WeierstrassCurve& e, const BigRat& u);
ECPoint rescale(const ECPoint& p, const BigRat& u);

}  // namespace laurent
