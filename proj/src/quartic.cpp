#include "laurent/quartic.hpp"

#include "laurent/errors.hpp"

namespace laurent {

namespace {

using Coeffs = std::array<BigRat, 5>;  // leading first

// Coefficients of q(z0 + h) in h.
Coeffs taylor_shift(const Coeffs& c, const BigRat& z0) {
  const BigRat& a = c[0];
  const BigRat& b = c[1];
  const BigRat& cc = c[2];
  const BigRat& d = c[3];
  const BigRat& e = c[4];
  const BigRat z2 = z0 * z0;
  const BigRat z3 = z2 * z0;
  return {a,
          BigRat(4) * a * z0 + b,
          BigRat(6) * a * z2 + BigRat(3) * b * z0 + cc,
          BigRat(4) * a * z3 + BigRat(3) * b * z2 + BigRat(2) * cc * z0 + d,
          (((a * z0 + b) * z0 + cc) * z0 + d) * z0 + e};
}

Coeffs reversed(const Coeffs& c) { return {c[4], c[3], c[2], c[1], c[0]}; }

// v^2 = a w^4 + b w^3 + c w^2 + d w + e: the resolvent cubic.
WeierstrassCurve resolvent(const Coeffs& k) {
  const BigRat& a = k[0];
  const BigRat& b = k[1];
  const BigRat& c = k[2];
  const BigRat& d = k[3];
  const BigRat& e = k[4];
  return WeierstrassCurve(c, b * d - BigRat(4) * a * e,
                          a * d * d + b * b * e - BigRat(4) * a * c * e);
}

// Classical descent of v^2 = a w^4 + b w^3 + c w^2 + d w + q^2 (q != 0) that
// sends (0, q) to the identity, followed by completing the square to remove
// the a1 X Y + a3 Y terms. a1 = d/q, a3 = 2 q b.
ECPoint square_constant_to_curve(const Coeffs& k, const BigRat& q, const BigRat& w,
                                 const BigRat& v) {
  const BigRat& b = k[1];
  const BigRat& c = k[2];
  const BigRat& d = k[3];
  if (w.is_zero()) {
    if (v == q) return ECPoint::identity();
    throw ExceptionalPoint("w (local coordinate at the base point)");
  }
  const BigRat two_q = BigRat(2) * q;
  const BigRat x = (two_q * (v + q) + d * w) / (w * w);
  const BigRat y =
      (two_q * two_q * (v + q) + two_q * (d * w + c * w * w) - d * d * w * w / two_q) /
      (w * w * w);
  const BigRat a1 = d / q;
  const BigRat a3 = two_q * b;
  return ECPoint(x, y + (a1 * x + a3) / BigRat(2));
}

QuarticPoint square_constant_to_quartic(const Coeffs& k, const BigRat& q, const ECPoint& p) {
  const BigRat& b = k[1];
  const BigRat& c = k[2];
  const BigRat& d = k[3];
  const BigRat two_q = BigRat(2) * q;
  const BigRat a1 = d / q;
  const BigRat a3 = two_q * b;
  const BigRat y = p.y() - (a1 * p.x() + a3) / BigRat(2);
  if (y.is_zero()) throw ExceptionalPoint("Y - (a1 X + a3)/2");
  const BigRat w = (two_q * (p.x() + c) - d * d / two_q) / y;
  const BigRat v = -q + w * (w * p.x() - d) / two_q;
  return {w, v};
}

void require_on_quartic(const QuarticModel& q, const QuarticPoint& p) {
  if (!q.contains(p)) throw NotOnCurve("point is not on the quartic");
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const QuarticPoint& p) {
  return os << "(z=" << p.z << ", v=" << p.v << ')';
}

QuarticModel::QuarticModel(BigRat c4, BigRat c3, BigRat c2, BigRat c1, BigRat c0)
    : c_{std::move(c4), std::move(c3), std::move(c2), std::move(c1), std::move(c0)} {
  if (c_[0].is_zero() && c_[1].is_zero()) {
    throw SingularCurve("quartic model needs degree 3 or 4");
  }
  if (quartic_discriminant(c_).is_zero()) {
    throw SingularCurve("quartic is not squarefree");
  }
}

BigRat QuarticModel::eval(const BigRat& z) const {
  return (((c_[0] * z + c_[1]) * z + c_[2]) * z + c_[3]) * z + c_[4];
}

std::ostream& operator<<(std::ostream& os, const QuarticModel& q) {
  return os << "v^2 = (" << q.c4() << ")z^4 + (" << q.c3() << ")z^3 + (" << q.c2()
            << ")z^2 + (" << q.c1() << ")z + (" << q.c0() << ')';
}

BigRat quartic_eval(const QuarticModel& q, const BigRat& z) { return q.eval(z); }

BigRat quartic_discriminant(const std::array<BigRat, 5>& c) {
  const BigRat& a = c[0];
  const BigRat& b = c[1];
  const BigRat& cc = c[2];
  const BigRat& d = c[3];
  const BigRat& e = c[4];
  if (a.is_zero()) {
    // cubic b z^3 + cc z^2 + d z + e
    return BigRat(18) * b * cc * d * e - BigRat(4) * cc.pow(3) * e + cc * cc * d * d -
           BigRat(4) * b * d.pow(3) - BigRat(27) * b * b * e * e;
  }
  return BigRat(256) * a.pow(3) * e.pow(3) - BigRat(192) * a * a * b * d * e * e -
         BigRat(128) * a * a * cc * cc * e * e + BigRat(144) * a * a * cc * d * d * e -
         BigRat(27) * a * a * d.pow(4) + BigRat(144) * a * b * b * cc * e * e -
         BigRat(6) * a * b * b * d * d * e - BigRat(80) * a * b * cc * cc * d * e +
         BigRat(18) * a * b * cc * d.pow(3) + BigRat(16) * a * cc.pow(4) * e -
         BigRat(4) * a * cc.pow(3) * d * d - BigRat(27) * b.pow(4) * e * e +
         BigRat(18) * b.pow(3) * cc * d * e - BigRat(4) * b.pow(3) * d.pow(3) -
         BigRat(4) * b * b * cc.pow(3) * e + b * b * cc * cc * d * d;
}

ECPoint Correspondence::to_curve(const QuarticPoint& p) const {
  require_on_quartic(source_, p);
  ECPoint out = ECPoint::identity();
  switch (method_) {
    case Method::biquadratic: {
      const BigRat& alpha = scale_;
      const BigRat x = BigRat(2) * source_.c4() * p.z * p.z + BigRat(2) * alpha * p.v;
      out = ECPoint(x, BigRat(2) * alpha * p.z * (x + source_.c2()));
      break;
    }
    case Method::base_point:
      out = square_constant_to_curve(local_, scale_, p.z - shift_, p.v);
      break;
    case Method::leading_square: {
      if (p.z.is_zero()) throw ExceptionalPoint("z");
      const BigRat s = p.z.reciprocal();
      out = square_constant_to_curve(local_, scale_, s, p.v * s * s);
      break;
    }
    case Method::root_at_infinity: {
      if (p.z == shift_) return ECPoint::identity();
      const BigRat w = (p.z - shift_).reciprocal();
      out = ECPoint(scale_ * w, scale_ * p.v * w * w);
      break;
    }
  }
  if (!target_.contains(out)) {
    throw InternalVerificationError("descent image is not on the target curve");
  }
  return out;
}

QuarticPoint Correspondence::to_quartic(const ECPoint& p) const {
  if (!target_.contains(p)) throw NotOnCurve("point is not on the target curve");
  QuarticPoint out;
  switch (method_) {
    case Method::biquadratic: {
      if (p.is_identity()) throw ExceptionalPoint("identity (point at infinity of the quartic)");
      const BigRat& alpha = scale_;
      const BigRat den = p.x() + source_.c2();
      if (den.is_zero()) throw ExceptionalPoint("X + c2");
      const BigRat z = p.y() / (BigRat(2) * alpha * den);
      out = {z, (p.x() - BigRat(2) * source_.c4() * z * z) / (BigRat(2) * alpha)};
      break;
    }
    case Method::base_point: {
      if (p.is_identity()) return {shift_, scale_};
      const QuarticPoint local = square_constant_to_quartic(local_, scale_, p);
      out = {local.z + shift_, local.v};
      break;
    }
    case Method::leading_square: {
      if (p.is_identity()) throw ExceptionalPoint("identity (point at infinity of the quartic)");
      const QuarticPoint local = square_constant_to_quartic(local_, scale_, p);
      if (local.z.is_zero()) throw ExceptionalPoint("s = 1/z");
      const BigRat z = local.z.reciprocal();
      out = {z, local.v * z * z};
      break;
    }
    case Method::root_at_infinity: {
      if (p.is_identity()) return {shift_, BigRat(0)};
      if (p.x().is_zero()) throw ExceptionalPoint("X");
      out = {shift_ + scale_ / p.x(), p.y() * scale_ / (p.x() * p.x())};
      break;
    }
  }
  if (!source_.contains(out)) {
    throw InternalVerificationError("descent preimage is not on the quartic");
  }
  return out;
}

std::vector<std::string> Correspondence::exceptional_inputs() const {
  switch (method_) {
    case Method::biquadratic:
      return {"curve: identity", "curve: X = -c2 (2-torsion point)"};
    case Method::base_point:
      return {"quartic: z = z0 with v = -v0", "curve: Y - (a1 X + a3)/2 = 0"};
    case Method::leading_square:
      return {"quartic: z = 0", "curve: identity", "curve: Y - (a1 X + a3)/2 = 0",
              "curve: image with s = 1/z = 0"};
    case Method::root_at_infinity:
      return {"curve: X = 0"};
  }
  return {};
}

Correspondence descend_biquadratic(const QuarticModel& q) {
  if (!q.is_biquadratic()) {
    throw PreconditionError("biquadratic descent needs c3 = c1 = 0");
  }
  const auto alpha = rat_is_square(q.c4());
  if (!alpha || alpha->is_zero()) {
    throw PreconditionError("biquadratic descent needs c4 to be a nonzero square");
  }
  const BigRat four_c4_c0 = BigRat(4) * q.c4() * q.c0();
  Correspondence corr(q, WeierstrassCurve(q.c2(), -four_c4_c0, -four_c4_c0 * q.c2()),
                      Correspondence::Method::biquadratic);
  corr.scale_ = *alpha;
  return corr;
}

Correspondence descend_general(const QuarticModel& q, const DescentBase& base) {
  if (const auto* lead = std::get_if<LeadingSquare>(&base)) {
    if (lead->alpha.is_zero() || lead->alpha * lead->alpha != q.c4()) {
      throw PreconditionError("leading-square witness must satisfy alpha^2 = c4 != 0");
    }
    const Coeffs local = reversed(q.coefficients());
    Correspondence corr(q, resolvent(local), Correspondence::Method::leading_square);
    corr.scale_ = lead->alpha;
    corr.local_ = local;
    return corr;
  }
  const auto& pt = std::get<QuarticPoint>(base);
  require_on_quartic(q, pt);
  const Coeffs local = taylor_shift(q.coefficients(), pt.z);
  if (!pt.v.is_zero()) {
    Correspondence corr(q, resolvent(local), Correspondence::Method::base_point);
    corr.shift_ = pt.z;
    corr.scale_ = pt.v;
    corr.local_ = local;
    return corr;
  }
  // Root at z0: h = 1/w gives (v w^2)^2 = t1 w^3 + t2 w^2 + t3 w + t4, then
  // X = t1 w, Y = t1 v w^2 makes it monic.
  const BigRat& t4 = local[0];
  const BigRat& t3 = local[1];
  const BigRat& t2 = local[2];
  const BigRat& t1 = local[3];
  Correspondence corr(q, WeierstrassCurve(t2, t1 * t3, t1 * t1 * t4),
                      Correspondence::Method::root_at_infinity);
  corr.shift_ = pt.z;
  corr.scale_ = t1;
  corr.local_ = local;
  return corr;
}

Correspondence descend_general(const QuarticModel& q) {
  if (!q.c0().is_zero()) {
    if (auto s = rat_is_square(q.c0())) return descend_general(q, QuarticPoint{BigRat(0), *s});
  }
  if (!q.c4().is_zero()) {
    if (auto s = rat_is_square(q.c4())) return descend_general(q, LeadingSquare{*s});
  }
  throw NoBasePoint("quartic has no square extreme coefficient; supply a rational point");
}

AnyPoint transport(const Correspondence& corr, const AnyPoint& p, Direction direction) {
  if (direction == Direction::to_curve) {
    const auto* qp = std::get_if<QuarticPoint>(&p);
    if (qp == nullptr) throw PreconditionError("to_curve expects a quartic point");
    return corr.to_curve(*qp);
  }
  const auto* ep = std::get_if<ECPoint>(&p);
  if (ep == nullptr) throw PreconditionError("to_quartic expects a curve point");
  return corr.to_quartic(*ep);
}

}  // namespace laurent
