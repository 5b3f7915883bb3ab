#include "laurent/elliptic.hpp"

#include <algorithm>
#include <set>

#include "laurent/errors.hpp"

namespace laurent {

namespace {

void require_on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  if (!e.contains(p)) {
    throw NotOnCurve("point is not on curve");
  }
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

mpz_class floor_div(const mpz_class& n, long d) {
  mpz_class r;
  mpz_fdiv_q_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
  return r;
}

mpz_class ceil_div(const mpz_class& n, long d) {
  mpz_class r;
  mpz_cdiv_q_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
  return r;
}

// x^3 + b x^2 + c x + d over Z.
struct MonicCubic {
  mpz_class b;
  mpz_class c;
  mpz_class d;

  mpz_class operator()(const mpz_class& x) const { return ((x + b) * x + c) * x + d; }
};

// Integer zero of p on [lo, hi], where p is strictly monotone on the integers
// of that range.
std::optional<mpz_class> monotone_zero(const MonicCubic& p, mpz_class lo, mpz_class hi) {
  if (lo > hi) return std::nullopt;
  const int s_lo = sgn(p(lo));
  const int s_hi = sgn(p(hi));
  if (s_lo == 0) return lo;
  if (s_hi == 0) return hi;
  if (s_lo == s_hi) return std::nullopt;
  // Invariant: sign(p(lo)) == s_lo, sign(p(hi)) == s_hi, no zero found yet.
  while (hi - lo > 1) {
    mpz_class mid = floor_div(lo + hi, 2);
    const int s = sgn(p(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

// Integer roots of a monic integer cubic, found exactly: the real line is cut
// at the critical points (bracketed with an integer square root) into pieces
// on which the cubic is monotone, and each piece is bisected.
std::vector<mpz_class> integer_roots(const MonicCubic& p) {
  const mpz_class ab = abs(p.b);
  const mpz_class ac = abs(p.c);
  const mpz_class ad = abs(p.d);
  const mpz_class bound = 1 + std::max({ab, ac, ad});
  std::set<mpz_class> roots;
  auto take = [&](const std::optional<mpz_class>& r) {
    if (r) roots.insert(*r);
  };
  const mpz_class crit_disc = p.b * p.b - 3 * p.c;
  if (sgn(crit_disc) <= 0) {
    take(monotone_zero(p, -bound, bound));
  } else {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), crit_disc.get_mpz_t());
    // Critical points c1 <= c2 satisfy (-b-s-1)/3 < c1 <= (-b-s)/3 and
    // (-b+s)/3 <= c2 < (-b+s+1)/3.
    const mpz_class k1 = floor_div(-p.b - s - 1, 3);
    const mpz_class k1p = ceil_div(-p.b - s, 3);
    const mpz_class k2 = floor_div(-p.b + s, 3);
    const mpz_class k2p = ceil_div(-p.b + s + 1, 3);
    take(monotone_zero(p, -bound, k1));
    take(monotone_zero(p, k1p, k2));
    take(monotone_zero(p, k2p, bound));
    for (mpz_class x = k1 + 1; x < k1p; ++x) {
      if (p(x) == 0) roots.insert(x);
    }
    for (mpz_class x = k2 + 1; x < k2p; ++x) {
      if (p(x) == 0) roots.insert(x);
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<BigRat> rational_roots(const WeierstrassCurve& e) {
  // X = x/m turns the cubic into a monic integer one.
  const mpz_class m =
      lcm(lcm(e.a2().denominator(), e.a4().denominator()), e.a6().denominator());
  const BigRat mq(m);
  const BigRat b = e.a2() * mq;
  const BigRat c = e.a4() * mq * mq;
  const BigRat d = e.a6() * mq * mq * mq;
  std::vector<BigRat> out;
  for (const auto& r : integer_roots({b.numerator(), c.numerator(), d.numerator()})) {
    out.emplace_back(r, m);
  }
  return out;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const ECPoint& p) {
  if (p.is_identity()) return os << "O";
  return os << '(' << p.x() << ", " << p.y() << ')';
}

WeierstrassCurve::WeierstrassCurve(BigRat a2, BigRat a4, BigRat a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
  if (curve_discriminant(a2_, a4_, a6_).is_zero()) {
    throw SingularCurve("singular Weierstrass cubic: repeated root");
  }
}

WeierstrassCurve WeierstrassCurve::from_roots(const BigRat& e1, const BigRat& e2,
                                              const BigRat& e3) {
  return WeierstrassCurve(-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -(e1 * e2 * e3));
}

WeierstrassCurve WeierstrassCurve::from_factored(const BigRat& shift, const BigRat& p,
                                                 const BigRat& q) {
  return WeierstrassCurve(p + shift, q + shift * p, shift * q);
}

BigRat WeierstrassCurve::rhs(const BigRat& x) const { return ((x + a2_) * x + a4_) * x + a6_; }

bool WeierstrassCurve::contains(const ECPoint& p) const {
  return p.is_identity() || p.y() * p.y() == rhs(p.x());
}

ECPoint WeierstrassCurve::point(BigRat x, BigRat y) const {
  ECPoint p(std::move(x), std::move(y));
  require_on_curve(*this, p);
  return p;
}

std::ostream& operator<<(std::ostream& os, const WeierstrassCurve& e) {
  return os << "Y^2 = X^3 + (" << e.a2() << ")X^2 + (" << e.a4() << ")X + (" << e.a6()
            << ')';
}

BigRat curve_discriminant(const BigRat& a2, const BigRat& a4, const BigRat& a6) {
  // x^3 + b x^2 + c x + d: 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2
  return BigRat(18) * a2 * a4 * a6 - BigRat(4) * a2.pow(3) * a6 + a2 * a2 * a4 * a4 -
         BigRat(4) * a4.pow(3) - BigRat(27) * a6 * a6;
}

BigRat curve_discriminant(const WeierstrassCurve& e) {
  return curve_discriminant(e.a2(), e.a4(), e.a6());
}

bool on_curve(const WeierstrassCurve& e, const ECPoint& p) { return e.contains(p); }

ECPoint ec_neg(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  if (p.is_identity()) return p;
  return ECPoint(p.x(), -p.y());
}

ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  BigRat slope;
  if (p.x() == q.x()) {
    if (p.y() == -q.y()) return ECPoint::identity();  // also covers 2-torsion doubling
    slope = (BigRat(3) * p.x() * p.x() + BigRat(2) * e.a2() * p.x() + e.a4()) /
            (BigRat(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  BigRat x = slope * slope - e.a2() - p.x() - q.x();
  BigRat y = slope * (p.x() - x) - p.y();
  return ECPoint(std::move(x), std::move(y));
}

ECPoint ec_scalar_mul(const WeierstrassCurve& e, long n, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint base = n < 0 ? ec_neg(e, p) : p;
  unsigned long k = n < 0 ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::identity();
  while (k != 0) {
    if (k & 1UL) acc = ec_add(e, acc, base);
    k >>= 1;
    if (k != 0) base = ec_add(e, base, base);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const TorsionStatus& t) {
  if (t.is_torsion()) return os << "torsion(" << t.order() << ')';
  return os << "infinite_order";
}

TorsionStatus torsion_status(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  if (p.is_identity()) throw PreconditionError("torsion_status of the identity");
  constexpr int kMazurMaxOrder = 12;
  ECPoint multiple = p;
  for (int n = 2; n <= kMazurMaxOrder; ++n) {
    multiple = ec_add(e, multiple, p);
    if (multiple.is_identity()) return TorsionStatus::torsion(n);
  }
  return TorsionStatus::infinite_order();
}

std::vector<ECPoint> two_torsion_points(const WeierstrassCurve& e) {
  std::vector<ECPoint> out;
  for (auto& r : rational_roots(e)) out.emplace_back(std::move(r), BigRat(0));
  return out;
}

std::vector<ECPoint> halve(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  const auto roots = rational_roots(e);
  if (roots.size() != 3) return {};
  std::vector<ECPoint> halves;
  if (p.is_identity()) {
    halves.push_back(ECPoint::identity());
    for (const auto& r : roots) halves.emplace_back(r, BigRat(0));
    return halves;
  }
  // p is in 2E(Q) iff every x(p) - e_i is a square; the halves then have
  // x = x(p) + r1 r2 + r1 r3 + r2 r3 for suitable signs of r_i = sqrt(x(p) - e_i).
  std::array<BigRat, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    auto s = rat_is_square(p.x() - roots[i]);
    if (!s) return {};
    r[i] = *s;
  }
  for (int signs = 0; signs < 8; ++signs) {
    std::array<BigRat, 3> rs = r;
    for (std::size_t i = 0; i < 3; ++i) {
      if (signs & (1 << i)) rs[i] = -rs[i];
    }
    const BigRat x = p.x() + rs[0] * rs[1] + rs[0] * rs[2] + rs[1] * rs[2];
    const auto y = rat_is_square(e.rhs(x));
    if (!y) continue;
    for (const BigRat& yy : {*y, -*y}) {
      ECPoint q(x, yy);
      if (ec_add(e, q, q) == p &&
          std::find(halves.begin(), halves.end(), q) == halves.end()) {
        halves.push_back(std::move(q));
      }
    }
  }
  return halves;
}

std::vector<ECPoint> two_power_torsion(const WeierstrassCurve& e) {
  std::vector<ECPoint> found{ECPoint::identity()};
  for (auto& t : two_torsion_points(e)) found.push_back(std::move(t));
  if (found.size() != 4) return found;
  // Mazur caps the 2-power part at Z/2 x Z/8, so this terminates quickly.
  for (std::size_t next = 1; next < found.size(); ++next) {
    for (auto& h : halve(e, found[next])) {
      if (std::find(found.begin(), found.end(), h) == found.end()) found.push_back(std::move(h));
    }
  }
  return found;
}

WeierstrassCurve rescale(const WeierstrassCurve& e, const BigRat& u) {
  const BigRat u2 = u * u;
  return WeierstrassCurve(e.a2() * u2, e.a4() * u2 * u2, e.a6() * u2 * u2 * u2);
}

ECPoint rescale(const ECPoint& p, const BigRat& u) {
  if (p.is_identity()) return p;
  return ECPoint(p.x() * u * u, p.y() * u * u * u);
}

}  // namespace laurent
