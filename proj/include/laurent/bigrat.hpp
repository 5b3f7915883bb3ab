#pragma once

/**
 * @file bigrat.hpp
 * @brief Exact rational arithmetic, square detection and exact quadratic roots.
 *
 * BigRat is the scalar used everywhere in the library. It is always stored in
 * canonical form: positive denominator, numerator and denominator coprime, and
 * zero as 0/1. Nothing in this header ever rounds.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace laurent {

class BigRat {
 public:
  BigRat() = default;
  BigRat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRat(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  BigRat(const mpz_class& value) : value_(value) {}  // NOLINT
  BigRat(const mpz_class& num, const mpz_class& den);
  BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

  /// Accepts "p" or "p/q" with an optional leading sign on either part.
  static BigRat parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRat abs() const;
  BigRat reciprocal() const;
  BigRat pow(unsigned exponent) const;

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string to_string() const;

  BigRat& operator+=(const BigRat& rhs);
  BigRat& operator-=(const BigRat& rhs);
  BigRat& operator*=(const BigRat& rhs);
  BigRat& operator/=(const BigRat& rhs);

  friend BigRat operator+(BigRat lhs, const BigRat& rhs) { return lhs += rhs; }
  friend BigRat operator-(BigRat lhs, const BigRat& rhs) { return lhs -= rhs; }
  friend BigRat operator*(BigRat lhs, const BigRat& rhs) { return lhs *= rhs; }
  friend BigRat operator/(BigRat lhs, const BigRat& rhs) { return lhs /= rhs; }
  BigRat operator-() const;

  friend bool operator==(const BigRat& lhs, const BigRat& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const BigRat& lhs, const BigRat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  explicit BigRat(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& q);

enum class ArithOp { add, sub, mul, div };

/// Single entry point for the four field operations. Throws DivisionByZero
/// for div by zero.
BigRat rat_arith(const BigRat& lhs, const BigRat& rhs, ArithOp op);

/// Exact integer square root; absent for negative or non-square input.
std::optional<mpz_class> exact_isqrt(const mpz_class& n);

/// Nonnegative rational square root of q, or absent if q is not the square of
/// a rational.
std::optional<BigRat> rat_is_square(const BigRat& q);

// a*u^2 + b*u + c
struct QuadraticPoly {
  BigRat a;
  BigRat b;
  BigRat c;

  BigRat eval(const BigRat& u) const { return (a * u + b) * u + c; }
  BigRat discriminant() const { return b * b - BigRat(4) * a * c; }
  /// Multiplies through by a nonzero rational. Roots are unchanged.
  QuadraticPoly scaled(const BigRat& factor) const {
    return {a * factor, b * factor, c * factor};
  }
  friend bool operator==(const QuadraticPoly&, const QuadraticPoly&) = default;
};

/// Rational roots of p in ascending order, each checked by back-substitution.
/// A vanishing leading coefficient falls back to the linear root. Throws
/// DegenerateIdentity when a=b=c=0 and PreconditionError when a=b=0, c!=0.
std::vector<BigRat> solve_quadratic_exact(const QuadraticPoly& p);

}  // namespace laurent

template <>
struct std::hash<laurent::BigRat> {
  std::size_t operator()(const laurent::BigRat& q) const noexcept { return q.hash(); }
};
