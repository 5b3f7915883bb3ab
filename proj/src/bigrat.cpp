#include "laurent/bigrat.hpp"

#include <algorithm>
#include <cctype>

#include "laurent/errors.hpp"

namespace laurent {

namespace {

bool is_signed_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_signed_decimal(s)) {
    throw PreconditionError("malformed rational '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(sgn(z)) + 0x9e3779b97f4a7c15ULL;
  const mpz_srcptr raw = z.get_mpz_t();
  const std::size_t limbs = mpz_size(raw);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(raw, i)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRat BigRat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRat(parse_integer(text, text));
  return BigRat(parse_integer(text.substr(0, slash), text),
                parse_integer(text.substr(slash + 1), text));
}

BigRat BigRat::abs() const { return BigRat(mpq_class(::abs(value_))); }

BigRat BigRat::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return BigRat(value_.get_den(), value_.get_num());
}

BigRat BigRat::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return BigRat(mpq_class(num, den));  // coprime powers stay canonical
}

std::string BigRat::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRat& BigRat::operator+=(const BigRat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-value_)); }

std::size_t BigRat::hash() const {
  return hash_mpz(value_.get_num()) * 31 + hash_mpz(value_.get_den());
}

std::ostream& operator<<(std::ostream& os, const BigRat& q) { return os << q.to_string(); }

BigRat rat_arith(const BigRat& lhs, const BigRat& rhs, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return lhs + rhs;
    case ArithOp::sub:
      return lhs - rhs;
    case ArithOp::mul:
      return lhs * rhs;
    case ArithOp::div:
      return lhs / rhs;
  }
  throw PreconditionError("unknown arithmetic operation");
}

std::optional<mpz_class> exact_isqrt(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class root;
  mpz_class rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

std::optional<BigRat> rat_is_square(const BigRat& q) {
  if (q.sign() < 0) return std::nullopt;
  auto num = exact_isqrt(q.numerator());
  if (!num) return std::nullopt;
  auto den = exact_isqrt(q.denominator());
  if (!den) return std::nullopt;
  return BigRat(*num, *den);
}

std::vector<BigRat> solve_quadratic_exact(const QuadraticPoly& p) {
  std::vector<BigRat> roots;
  if (p.a.is_zero()) {
    if (p.b.is_zero()) {
      if (p.c.is_zero()) throw DegenerateIdentity();
      throw PreconditionError("constant nonzero polynomial has no unknown to solve for");
    }
    roots.push_back(-p.c / p.b);
  } else {
    const auto root = rat_is_square(p.discriminant());
    if (!root) return roots;
    const BigRat two_a = BigRat(2) * p.a;
    roots.push_back((-p.b - *root) / two_a);
    if (!root->is_zero()) roots.push_back((-p.b + *root) / two_a);
    std::sort(roots.begin(), roots.end());
  }
  for (const auto& r : roots) {
    if (!p.eval(r).is_zero()) {
      throw InternalVerificationError("quadratic root failed back-substitution: " +
                                      r.to_string());
    }
  }
  return roots;
}

}  // namespace laurent
