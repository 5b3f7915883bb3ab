#pragma once

/**
 * @file quartic.hpp
 * @brief Genus-one quartics v^2 = q(z) and their birational maps to
 *        Weierstrass cubics.
 *
 * Every construction here lands on the resolvent model
 *
 *     Y^2 = X^3 + c2 X^2 + (c3 c1 - 4 c4 c0) X + (c4 c1^2 + c3^2 c0 - 4 c4 c2 c0)
 *
 * of the (translated) quartic; they differ only in which rational point of
 * the quartic is sent to the identity. A Correspondence carries both maps and
 * reports the denominator that vanished when asked to transport an
 * exceptional point.
 */

#include <array>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "laurent/bigrat.hpp"
#include "laurent/elliptic.hpp"

namespace laurent {

struct QuarticPoint {
  BigRat z;
  BigRat v;
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const QuarticPoint& p);

class QuarticModel {
 public:
  /// v^2 = c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0. Degree must be 3 or 4 and the
  /// polynomial squarefree; throws SingularCurve otherwise.
  QuarticModel(BigRat c4, BigRat c3, BigRat c2, BigRat c1, BigRat c0);

  const BigRat& c4() const { return c_[0]; }
  const BigRat& c3() const { return c_[1]; }
  const BigRat& c2() const { return c_[2]; }
  const BigRat& c1() const { return c_[3]; }
  const BigRat& c0() const { return c_[4]; }
  /// Leading coefficient first.
  const std::array<BigRat, 5>& coefficients() const { return c_; }

  BigRat eval(const BigRat& z) const;
  bool contains(const QuarticPoint& p) const { return p.v * p.v == eval(p.z); }
  bool is_biquadratic() const { return c3().is_zero() && c1().is_zero(); }

  friend bool operator==(const QuarticModel&, const QuarticModel&) = default;

 private:
  std::array<BigRat, 5> c_;
};

std::ostream& operator<<(std::ostream& os, const QuarticModel& q);

BigRat quartic_eval(const QuarticModel& q, const BigRat& z);

/// Polynomial discriminant of c4 z^4 + ... + c0 (of the cubic when c4 = 0).
BigRat quartic_discriminant(const std::array<BigRat, 5>& c);

/// Sends the point at infinity with v/z^2 -> alpha to the identity.
/// Requires alpha^2 = c4 != 0.
struct LeadingSquare {
  BigRat alpha;
};

using DescentBase = std::variant<QuarticPoint, LeadingSquare>;

class Correspondence {
 public:
  enum class Method {
    biquadratic,       // c3 = c1 = 0 and c4 = alpha^2
    base_point,        // finite base point with v != 0, moved to z = 0
    leading_square,    // point at infinity
    root_at_infinity,  // finite base point with v = 0
  };

  const QuarticModel& source() const { return source_; }
  const WeierstrassCurve& target() const { return target_; }
  Method method() const { return method_; }

  /// Throws NotOnCurve off the quartic, ExceptionalPoint where undefined.
  ECPoint to_curve(const QuarticPoint& p) const;
  /// Throws NotOnCurve off the cubic, ExceptionalPoint where undefined.
  QuarticPoint to_quartic(const ECPoint& p) const;

  /// Human-readable list of the conditions under which either map is undefined.
  std::vector<std::string> exceptional_inputs() const;

 private:
  friend Correspondence descend_biquadratic(const QuarticModel&);
  friend Correspondence descend_general(const QuarticModel&, const DescentBase&);

  Correspondence(QuarticModel source, WeierstrassCurve target, Method method)
      : source_(std::move(source)), target_(std::move(target)), method_(method) {}

  QuarticModel source_;
  WeierstrassCurve target_;
  Method method_;
  // Meaning depends on method_:
  //   biquadratic:      scale = alpha
  //   base_point:       shift = z0, scale = v0, local = quartic in w = z - z0
  //   leading_square:   scale = alpha, local = reversed quartic in s = 1/z
  //   root_at_infinity: shift = z0, scale = q'(z0)
  BigRat shift_;
  BigRat scale_;
  std::array<BigRat, 5> local_;
};

/// Closed-form descent of v^2 = c4 z^4 + c2 z^2 + c0 with c4 = alpha^2:
///   target  Y^2 = (X + c2)(X^2 - 4 c4 c0)
///   forward X = 2 c4 z^2 + 2 alpha v,  Y = 2 alpha z (X + c2)
///   inverse z = Y / (2 alpha (X + c2)),  v = (X - 2 c4 z^2) / (2 alpha)
/// alpha is the positive square root. Throws PreconditionError otherwise.
Correspondence descend_biquadratic(const QuarticModel& q);

/// Descent anchored at a rational point of the quartic or at a square leading
/// coefficient. Throws NotOnCurve for a base point off the quartic and
/// PreconditionError for a bad witness.
Correspondence descend_general(const QuarticModel& q, const DescentBase& base);

/// Picks the anchor automatically: (0, sqrt c0) when c0 is a nonzero square,
/// else the leading-square witness. Throws NoBasePoint when neither exists.
Correspondence descend_general(const QuarticModel& q);

enum class Direction { to_quartic, to_curve };

using AnyPoint = std::variant<QuarticPoint, ECPoint>;

/// Direction-tagged wrapper over Correspondence::to_curve / to_quartic. The
/// input alternative must match the direction.
AnyPoint transport(const Correspondence& corr, const AnyPoint& p, Direction direction);

}  // namespace laurent
