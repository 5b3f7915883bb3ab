#pragma once

/**
 * @file equation.hpp
 * @brief f(X) = A X + B + C / X and the objects built from f(x) f(y) = f(z)^n.
 *
 * Naming: the "product" equation is n = 1, f(x) f(y) = f(z); the "square"
 * equation is n = 2, f(x) f(y) = f(z)^2.
 *
 * Product equation, full regime: fix x = T and read the equation as a
 * quadratic in y whose discriminant in z is a quartic with square extreme
 * coefficients (A^2 T^2 and C^2 T^2). Square equation, full regime: put
 * y = x T^2, z = x T; after removing the factor (T - 1)^2 the equation is a
 * quadratic in x with a palindromic quartic discriminant in T. With B = 0
 * both discriminants become biquadratic.
 */

#include <array>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/bigrat.hpp"
#include "laurent/elliptic.hpp"
#include "laurent/quartic.hpp"

namespace laurent {

enum class Regime {
  full,               // ABC != 0, 4AC != B^2
  degenerate_square,  // ABC != 0, 4AC == B^2: f(X) = (2AX + B)^2 / (4AX)
  no_constant,        // B == 0, AC != 0
  no_linear,          // A == 0
};

std::string_view to_string(Regime r);

class LaurentParams {
 public:
  /// Throws PreconditionError when C == 0.
  LaurentParams(long a, long b, long c);

  long A() const { return a_; }
  long B() const { return b_; }
  long C() const { return c_; }
  Regime regime() const;

  friend bool operator==(const LaurentParams&, const LaurentParams&) = default;

 private:
  long a_;
  long b_;
  long c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentParams& p);

enum class EquationKind : int { product = 1, square = 2 };

inline int exponent(EquationKind k) { return static_cast<int>(k); }
/// 1 -> product, 2 -> square; throws PreconditionError otherwise.
EquationKind equation_kind(int n);

struct SolutionTriple {
  BigRat x;
  BigRat y;
  BigRat z;
  EquationKind kind = EquationKind::product;
  LaurentParams params{0, 0, 1};
  bool verified = false;
  bool nontrivial = false;
  std::string provenance;
};

/// A x + B + C / x. Throws PreconditionError for x = 0.
BigRat f_eval(const LaurentParams& p, const BigRat& x);

/// Exact check of f(x) f(y) = f(z)^n plus the nontriviality conditions
/// (n = 1: x != z, y != z, f(z) != 0; n = 2: f(x) != f(y), f(z) != 0).
/// Throws PreconditionError if any coordinate is zero.
SolutionTriple verify_triple(const LaurentParams& p, EquationKind kind, const BigRat& x,
                             const BigRat& y, const BigRat& z);

/// Roots x' of A x'^2 + (B - r) x' + C = 0 with r = f(z)^n / f(y): the values
/// that would complete (., y, z) to a solution. Empty when f(y) = 0.
std::vector<BigRat> complete_first_coordinate(const LaurentParams& p, EquationKind kind,
                                              const BigRat& y, const BigRat& z);

// ---------------------------------------------------------------------------
// Product equation, x = T.

/// f(T) f(y) = f(z) as a quadratic in y:
///   a = A z (A T^2 + B T + C)
///   b = -A T z^2 + (A T^2 + (B - 1) T + C) B z - C T
///   c = C z (A T^2 + B T + C)
QuadraticPoly product_quadratic(const LaurentParams& p, const BigRat& T, const BigRat& z);

/// Discriminant of product_quadratic as a quartic in z. Full regime only.
QuarticModel product_discriminant(const LaurentParams& p, const BigRat& T);

/// B = 0 specialisation:
///   A^2 T^2 z^4 + (-4A^3 C T^4 - 8A^2 C^2 T^2 - 4A C^3 + 2A C T^2) z^2 + C^2 T^2
QuarticModel product_discriminant_no_constant(long A, long C, const BigRat& T);

/// Y^2 = (X + 2ACT^2)(X^2 + m X + k), the cubic model of
/// product_discriminant, with m = c2 - 2ACT^2 (c2 the z^2 coefficient of the
/// discriminant) and
///   k = 2ACT^2 (A^2(4AC+B^2)T^4 + 2AB(4AC+B^2-B)T^3
///       + (8A^2C^2+6AB^2C+B^4-2B^3-2AC+B^2)T^2 + 2BC(4AC+B^2-B)T + C^2(4AC+B^2)).
/// Full regime.
WeierstrassCurve product_curve(const LaurentParams& p, const BigRat& T);

/// (2ACT^2, 4ABC(AT^2 + (B-1)T + C)T^2), a point of product_curve.
ECPoint product_base_point(const LaurentParams& p, const BigRat& T);

/// Closed form of [2] product_base_point. Requires B != 0.
ECPoint product_base_double(const LaurentParams& p, const BigRat& T);

struct NoConstantCurve {
  WeierstrassCurve curve;
  std::array<BigRat, 3> roots;  // 2ACT^2, -2ACT^2, 2AC(2A^2T^4 + (4AC-1)T^2 + 2C^2)
};

/// Y^2 = (X - 2ACT^2)(X + 2ACT^2)(X - 2AC(2A^2T^4 + (4AC-1)T^2 + 2C^2)).
/// Throws SingularCurve when two roots coincide.
NoConstantCurve product_curve_no_constant(long A, long C, const BigRat& T);

// ---------------------------------------------------------------------------
// Square equation, y = x T^2, z = x T.

/// A B T^2 x^2 + A C (T + 1)^2 x + B C, the cofactor of (T - 1)^2.
/// Throws PreconditionError for T = 0 or T = 1.
QuadraticPoly square_ratio_quadratic(const LaurentParams& p, const BigRat& T);

/// A^2C^2 T^4 + 4A^2C^2 T^3 + (6A^2C^2 - 4AB^2C) T^2 + 4A^2C^2 T + A^2C^2.
QuarticModel square_ratio_discriminant(long A, long B, long C);

struct SquareRatioCurve {
  WeierstrassCurve curve;
  ECPoint base;  // (2A^2C^2, 8A^3C^3)
};

/// Y^2 = (X + 2A^2C^2)(X^2 + 4AC(AC - B^2) X + 4A^3C^3(AC + 2B^2)). Full regime.
SquareRatioCurve square_ratio_curve(long A, long B, long C);

struct BaseMultiples {
  ECPoint doubled;
  ECPoint quadrupled;
};

/// Closed forms of [2] and [4] of the square_ratio_curve base point. Throws
/// DivisionByZero where their denominators vanish.
BaseMultiples square_ratio_multiples(long A, long B, long C);

// ---------------------------------------------------------------------------
// Square equation with B = 0 and z fixed.

/// v^2 = -4A^3 C z^4 y^4 + (A^4 z^8 + 4A^3 C z^6 - 2A^2 C^2 z^4 + 4A C^3 z^2 + C^4) y^2
///       - 4A C^3 z^4
QuarticModel square_fixed_z_quartic(long A, long C, const BigRat& z);

/// (A^2 y^2 z^2 + A C z^2) x^2 + (-A^2 y z^4 - 2 A C y z^2 - C^2 y) x + A C y^2 z^2 + C^2 z^2
QuadraticPoly square_fixed_z_quadratic(long A, long C, const BigRat& y, const BigRat& z);

}  // namespace laurent
