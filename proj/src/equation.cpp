#include "laurent/equation.hpp"

#include "laurent/errors.hpp"

namespace laurent {

namespace {

void require_nonzero(const BigRat& v, const char* name) {
  if (v.is_zero()) throw PreconditionError(std::string(name) + " must be nonzero");
}

void require_nonzero(long v, const char* name) {
  if (v == 0) throw PreconditionError(std::string(name) + " must be nonzero");
}

void require_regime(const LaurentParams& p, std::initializer_list<Regime> allowed,
                    const char* what) {
  for (Regime r : allowed) {
    if (p.regime() == r) return;
  }
  throw RegimeError(std::string(what) + " is not available in regime " +
                    std::string(to_string(p.regime())));
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::full:
      return "full";
    case Regime::degenerate_square:
      return "degenerate_square";
    case Regime::no_constant:
      return "no_constant";
    case Regime::no_linear:
      return "no_linear";
  }
  return "unknown";
}

LaurentParams::LaurentParams(long a, long b, long c) : a_(a), b_(b), c_(c) {
  if (c == 0) throw PreconditionError("C must be nonzero");
}

Regime LaurentParams::regime() const {
  if (a_ == 0) return Regime::no_linear;
  if (b_ == 0) return Regime::no_constant;
  if (mpz_class(4) * a_ * c_ == mpz_class(b_) * b_) return Regime::degenerate_square;
  return Regime::full;
}

std::ostream& operator<<(std::ostream& os, const LaurentParams& p) {
  return os << "(A=" << p.A() << ", B=" << p.B() << ", C=" << p.C() << ')';
}

EquationKind equation_kind(int n) {
  if (n == 1) return EquationKind::product;
  if (n == 2) return EquationKind::square;
  throw PreconditionError("n must be 1 or 2");
}

BigRat f_eval(const LaurentParams& p, const BigRat& x) {
  require_nonzero(x, "f argument");
  return BigRat(p.A()) * x + BigRat(p.B()) + BigRat(p.C()) / x;
}

SolutionTriple verify_triple(const LaurentParams& p, EquationKind kind, const BigRat& x,
                             const BigRat& y, const BigRat& z) {
  const BigRat fx = f_eval(p, x);
  const BigRat fy = f_eval(p, y);
  const BigRat fz = f_eval(p, z);
  SolutionTriple t{x, y, z, kind, p, false, false, {}};
  t.verified = fx * fy == (kind == EquationKind::product ? fz : fz * fz);
  if (kind == EquationKind::product) {
    t.nontrivial = x != z && y != z && !fz.is_zero();
  } else {
    t.nontrivial = fx != fy && !fz.is_zero();
  }
  return t;
}

std::vector<BigRat> complete_first_coordinate(const LaurentParams& p, EquationKind kind,
                                              const BigRat& y, const BigRat& z) {
  const BigRat fy = f_eval(p, y);
  const BigRat fz = f_eval(p, z);
  if (fy.is_zero()) return {};
  const BigRat target = (kind == EquationKind::product ? fz : fz * fz) / fy;
  // f(x) = target  <=>  A x^2 + (B - target) x + C = 0  (x != 0)
  const QuadraticPoly q{BigRat(p.A()), BigRat(p.B()) - target, BigRat(p.C())};
  if (q.a.is_zero() && q.b.is_zero()) return {};
  std::vector<BigRat> out;
  for (auto& r : solve_quadratic_exact(q)) {
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

QuadraticPoly product_quadratic(const LaurentParams& p, const BigRat& T, const BigRat& z) {
  require_nonzero(T, "T");
  require_nonzero(z, "z");
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  const BigRat fT = A * T * T + B * T + C;  // T f(T)
  return {A * z * fT,
          -A * T * z * z + (A * T * T + (B - BigRat(1)) * T + C) * B * z - C * T,
          C * z * fT};
}

QuarticModel product_discriminant(const LaurentParams& p, const BigRat& T) {
  require_regime(p, {Regime::full, Regime::no_constant}, "product discriminant");
  require_nonzero(T, "T");
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  const BigRat T2 = T * T;
  const BigRat T3 = T2 * T;
  const BigRat T4 = T2 * T2;
  const BigRat k = BigRat(4) * A * C - B * B;  // 4AC - B^2
  const BigRat mid = A * T2 + (B - BigRat(1)) * T + C;
  return QuarticModel(
      A * A * T2,
      BigRat(-2) * A * B * T * mid,
      -A * A * k * T4 - BigRat(2) * A * B * (k + B) * T3 +
          (B.pow(4) - BigRat(8) * A * A * C * C - BigRat(2) * A * B * B * C -
           BigRat(2) * B.pow(3) + BigRat(2) * A * C + B * B) *
              T2 -
          BigRat(2) * B * C * (k + B) * T - C * C * k,
      BigRat(-2) * B * C * T * mid,
      C * C * T2);
}

QuarticModel product_discriminant_no_constant(long a, long c, const BigRat& T) {
  require_nonzero(a, "A");
  require_nonzero(c, "C");
  require_nonzero(T, "T");
  const BigRat A(a);
  const BigRat C(c);
  const BigRat T2 = T * T;
  return QuarticModel(A * A * T2, BigRat(0),
                      BigRat(-4) * A.pow(3) * C * T2 * T2 - BigRat(8) * A * A * C * C * T2 -
                          BigRat(4) * A * C.pow(3) + BigRat(2) * A * C * T2,
                      BigRat(0), C * C * T2);
}

WeierstrassCurve product_curve(const LaurentParams& p, const BigRat& T) {
  const QuarticModel disc = product_discriminant(p, T);
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  const BigRat T2 = T * T;
  const BigRat T3 = T2 * T;
  const BigRat T4 = T2 * T2;
  const BigRat k = BigRat(4) * A * C + B * B;  // 4AC + B^2
  const BigRat two_act2 = BigRat(2) * A * C * T2;
  const BigRat constant =
      two_act2 * (A * A * k * T4 + BigRat(2) * A * B * (k - B) * T3 +
                  (BigRat(8) * A * A * C * C + BigRat(6) * A * B * B * C + B.pow(4) -
                   BigRat(2) * B.pow(3) - BigRat(2) * A * C + B * B) *
                      T2 +
                  BigRat(2) * B * C * (k - B) * T + C * C * k);
  return WeierstrassCurve::from_factored(two_act2, disc.c2() - two_act2, constant);
}

ECPoint product_base_point(const LaurentParams& p, const BigRat& T) {
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  const BigRat T2 = T * T;
  return ECPoint(BigRat(2) * A * C * T2,
                 BigRat(4) * A * B * C * (A * T2 + (B - BigRat(1)) * T + C) * T2);
}

ECPoint product_base_double(const LaurentParams& p, const BigRat& T) {
  if (p.B() == 0) throw PreconditionError("doubling closed form needs B != 0");
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  const BigRat T2 = T * T;
  const BigRat T3 = T2 * T;
  const BigRat T4 = T2 * T2;
  const BigRat one(1);
  const BigRat x =
      BigRat(2) * A * C *
      (BigRat(2) * A.pow(3) * C * T4 + BigRat(4) * A * A * C * (B + one) * T3 +
       (BigRat(4) * A * A * C * C + BigRat(2) * A * B * B * C + BigRat(4) * A * B * C +
        BigRat(2) * A * C - B * B) *
           T2 +
       BigRat(4) * A * C * C * (B + one) * T + BigRat(2) * A * C.pow(3)) /
      (B * B);
  const BigRat y =
      BigRat(4) * A * A * C * C * (A * T2 + (B + one) * T + C) *
      ((BigRat(2) * A.pow(3) * C - A * A * B * B) * T4 +
       (BigRat(4) * A * A * B * C - BigRat(2) * A * B.pow(3) + BigRat(4) * A * A * C) * T3 +
       (BigRat(4) * A * A * C * C - B.pow(4) + BigRat(4) * A * B * C + BigRat(2) * A * C -
        B * B) *
           T2 +
       (BigRat(4) * A * B * C * C - BigRat(2) * B.pow(3) * C + BigRat(4) * A * C * C) * T +
       BigRat(2) * A * C.pow(3) - B * B * C * C) /
      B.pow(3);
  return ECPoint(x, y);
}

NoConstantCurve product_curve_no_constant(long a, long c, const BigRat& T) {
  require_nonzero(a, "A");
  require_nonzero(c, "C");
  require_nonzero(T, "T");
  const BigRat A(a);
  const BigRat C(c);
  const BigRat T2 = T * T;
  const BigRat e1 = BigRat(2) * A * C * T2;
  const BigRat e3 = BigRat(2) * A * C *
                    (BigRat(2) * A * A * T2 * T2 + (BigRat(4) * A * C - BigRat(1)) * T2 +
                     BigRat(2) * C * C);
  return {WeierstrassCurve::from_roots(e1, -e1, e3), {e1, -e1, e3}};
}

QuadraticPoly square_ratio_quadratic(const LaurentParams& p, const BigRat& T) {
  require_nonzero(T, "T");
  if (T == BigRat(1)) {
    throw PreconditionError("T = 1 makes (T - 1)^2 vanish: every x is a root");
  }
  const BigRat A(p.A());
  const BigRat B(p.B());
  const BigRat C(p.C());
  return {A * B * T * T, A * C * T * T + BigRat(2) * A * C * T + A * C, B * C};
}

QuarticModel square_ratio_discriminant(long a, long b, long c) {
  require_regime(LaurentParams(a, b, c), {Regime::full}, "square-ratio discriminant");
  const BigRat A(a);
  const BigRat B(b);
  const BigRat C(c);
  const BigRat s = A * A * C * C;
  return QuarticModel(s, BigRat(4) * s, BigRat(6) * s - BigRat(4) * A * B * B * C,
                      BigRat(4) * s, s);
}

SquareRatioCurve square_ratio_curve(long a, long b, long c) {
  require_regime(LaurentParams(a, b, c), {Regime::full}, "square-ratio curve");
  const BigRat A(a);
  const BigRat B(b);
  const BigRat C(c);
  const BigRat ac = A * C;
  WeierstrassCurve curve = WeierstrassCurve::from_factored(
      BigRat(2) * ac * ac, BigRat(4) * ac * (ac - B * B),
      BigRat(4) * ac.pow(3) * (ac + BigRat(2) * B * B));
  ECPoint base = curve.point(BigRat(2) * ac * ac, BigRat(8) * ac.pow(3));
  return {std::move(curve), std::move(base)};
}

BaseMultiples square_ratio_multiples(long a, long b, long c) {
  const BigRat A(a);
  const BigRat B(b);
  const BigRat C(c);
  const BigRat ac = A * C;
  const BigRat b2 = B * B;
  // Powers of AC and B^2 keep the long closed forms readable.
  auto term = [&](long coeff, unsigned ac_pow, unsigned b2_pow) {
    return BigRat(coeff) * ac.pow(ac_pow) * b2.pow(b2_pow);
  };
  ECPoint doubled(-ac * ac - BigRat(2) * ac * b2 + b2 * b2,
                  (ac - b2) * (ac * ac + BigRat(4) * ac * b2 - b2 * b2));
  const BigRat d1 = ac - b2;
  const BigRat d2 = ac * ac + BigRat(4) * ac * b2 - b2 * b2;
  const BigRat x4_num = term(7, 8, 0) + term(88, 7, 1) + term(-420, 6, 2) + term(24, 5, 3) +
                        term(50, 4, 4) + term(8, 3, 5) + term(-20, 2, 6) + term(8, 1, 7) +
                        term(-1, 0, 8);
  const BigRat x4 = -x4_num / (BigRat(4) * d1 * d1 * d2 * d2);
  const BigRat y4_f1 =
      term(1, 4, 0) + term(-20, 3, 1) + term(6, 2, 2) + term(-4, 1, 3) + term(1, 0, 4);
  const BigRat y4_f2 = term(1, 8, 0) + term(80, 7, 1) + term(-180, 6, 2) + term(656, 5, 3) +
                       term(-282, 4, 4) + term(-80, 3, 5) + term(76, 2, 6) +
                       term(-16, 1, 7) + term(1, 0, 8);
  const BigRat y4 = y4_f1 * y4_f2 / (BigRat(8) * d1.pow(3) * d2.pow(3));
  return {std::move(doubled), ECPoint(x4, y4)};
}

QuarticModel square_fixed_z_quartic(long a, long c, const BigRat& z) {
  require_nonzero(a, "A");
  require_nonzero(c, "C");
  require_nonzero(z, "z");
  const BigRat A(a);
  const BigRat C(c);
  const BigRat z2 = z * z;
  const BigRat z4 = z2 * z2;
  return QuarticModel(BigRat(-4) * A.pow(3) * C * z4, BigRat(0),
                      A.pow(4) * z4 * z4 + BigRat(4) * A.pow(3) * C * z4 * z2 -
                          BigRat(2) * A * A * C * C * z4 + BigRat(4) * A * C.pow(3) * z2 +
                          C.pow(4),
                      BigRat(0), BigRat(-4) * A * C.pow(3) * z4);
}

QuadraticPoly square_fixed_z_quadratic(long a, long c, const BigRat& y, const BigRat& z) {
  require_nonzero(y, "y");
  require_nonzero(z, "z");
  const BigRat A(a);
  const BigRat C(c);
  const BigRat z2 = z * z;
  return {A * A * y * y * z2 + A * C * z2,
          -A * A * y * z2 * z2 - BigRat(2) * A * C * y * z2 - C * C * y,
          A * C * y * y * z2 + C * C * z2};
}

}  // namespace laurent
