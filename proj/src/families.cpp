#include "laurent/families.hpp"

#include <array>
#include <functional>

#include "laurent/errors.hpp"

namespace laurent {

namespace {

using Triple = std::array<BigRat, 3>;

// Evaluation context handed to each formula: parameters, named lookups and a
// checked denominator.
class Ctx {
 public:
  Ctx(const FamilyInput& in) : in_(in), A(in.params.A()), B(in.params.B()), C(in.params.C()) {}

  const BigRat& get(const std::string& name) const {
    const auto it = in_.free.find(name);
    if (it == in_.free.end()) throw PreconditionError("missing parameter " + name);
    return it->second;
  }

  const BigRat& integer(const std::string& name) const {
    const BigRat& v = get(name);
    if (!v.is_integer()) throw PreconditionError("parameter " + name + " must be an integer");
    return v;
  }

  static const BigRat& den(const BigRat& value, const char* name) {
    if (value.is_zero()) throw PreconditionError(std::string("denominator ") + name + " vanishes");
    return value;
  }

 private:
  const FamilyInput& in_;

 public:
  const BigRat A;
  const BigRat B;
  const BigRat C;
};

struct FamilyEntry {
  FamilyInfo info;
  std::function<bool(const LaurentParams&)> admissible;
  std::function<std::vector<Triple>(const Ctx&)> formula;
};

bool degenerate(const LaurentParams& p) { return p.regime() == Regime::degenerate_square; }
bool abc_nonzero(const LaurentParams& p) { return p.A() != 0 && p.B() != 0; }

std::vector<Triple> product_full(const Ctx& c) {
  const BigRat& T = c.get("T");
  const BigRat m = c.A * T * T + c.B * T + c.C;                 // T f(T)
  const BigRat n = c.A * T * T + (c.B + BigRat(1)) * T + c.C;  // T f(T) + T
  const BigRat z = -n * c.C / Ctx::den(c.B * T, "BT");
  return {Triple{T, -m * c.B / Ctx::den(n * c.A, "(AT^2+(B+1)T+C)A"), z},
          Triple{T, -n * c.C / Ctx::den(m * c.B, "(AT^2+BT+C)B"), z}};
}

std::vector<Triple> product_degenerate(const Ctx& c) {
  const BigRat& T = c.get("T");
  const BigRat& t = c.get("t");
  const BigRat two_at = BigRat(2) * c.A * T;
  const BigRat k = two_at * two_at + BigRat(2) * (BigRat(2) * c.B - BigRat(1)) * c.A * T +
                   c.B * c.B + t;
  const BigRat sq = (two_at + c.B) * (two_at + c.B);
  const BigRat z = BigRat(2) * c.B * T * k / Ctx::den(two_at * two_at - t * t, "4A^2T^2-t^2");
  return {Triple{T,
                 c.B * (two_at - t) * k /
                     Ctx::den(BigRat(2) * c.A * sq * (two_at + t), "2A(2AT+B)^2(2AT+t)"),
                 z},
          Triple{T,
                 c.B * sq * (two_at + t) /
                     Ctx::den(BigRat(2) * c.A * (two_at - t) * k,
                              "2A(2AT-t)(4A^2T^2+2(2B-1)AT+B^2+t)"),
                 z}};
}

std::vector<Triple> square_ratio_neg_base(const Ctx& c) {
  const BigRat d = c.A * c.C - c.B * c.B;
  return {Triple{-d * d / Ctx::den(BigRat(4) * c.A * c.A * c.B * c.C, "4A^2BC"), -c.C / c.B,
                 d / (BigRat(2) * c.A * c.B)},
          Triple{-c.B / c.A, BigRat(-4) * c.A * c.B * c.C * c.C / Ctx::den(d * d, "(AC-B^2)^2"),
                 BigRat(2) * c.B * c.C / d}};
}

std::vector<Triple> square_ratio_neg_double(const Ctx& c) {
  const BigRat ac = c.A * c.C;
  const BigRat b2 = c.B * c.B;
  const BigRat d = ac - b2;
  const BigRat p3 = BigRat(3) * ac - b2;
  const BigRat s = ac + b2;
  const BigRat r = ac * ac - BigRat(6) * ac * b2 + b2 * b2;
  Ctx::den(d, "AC-B^2");
  Ctx::den(p3, "3AC-B^2");
  Ctx::den(s, "AC+B^2");
  Ctx::den(r, "A^2C^2-6AB^2C+B^4");
  return {Triple{BigRat(-4) * c.A * c.B * c.C * c.C / (d * d),
                 -c.B * p3 * p3 * s * s / (c.A * r * r),
                 BigRat(2) * c.B * c.C * p3 * s / (d * r)},
          Triple{-c.C * r * r / (c.B * p3 * p3 * s * s),
                 -d * d / (BigRat(4) * c.A * c.A * c.B * c.C),
                 d * r / (BigRat(2) * c.A * c.B * s * p3)}};
}

std::vector<Triple> square_degenerate(const Ctx& c) {
  const BigRat& t = c.get("t");
  const BigRat one(1);
  const BigRat three(3);
  const BigRat tp = t + one;
  const BigRat tm = t - one;
  const BigRat t3 = t - three;
  Ctx::den(tm, "t-1");
  Ctx::den(tp, "t+1");
  Ctx::den(t3, "t-3");
  return {Triple{-tp * tp * c.B / (BigRat(16) * c.A), -t3 * t3 * c.B / (BigRat(4) * tm * tm * c.A),
                 t3 * tp * c.B / (BigRat(8) * tm * c.A)},
          Triple{-tm * tm * c.B / (t3 * t3 * c.A), BigRat(-4) * c.B / (tp * tp * c.A),
                 BigRat(2) * tm * c.B / (tp * t3 * c.A)}};
}

std::vector<Triple> unit_integer_k(const Ctx& c) {
  const BigRat& k = c.integer("k");
  return {Triple{k * (k + BigRat(1) + c.C), k + BigRat(1), k}};
}

std::vector<Triple> unit_integer_kl(const Ctx& c) {
  const BigRat& k = c.integer("k");
  const BigRat& l = c.integer("l");
  return {Triple{k * (k * l - c.C - l), k * l - c.C, k * l - c.C - l}};
}

std::vector<Triple> no_linear_rational(const Ctx& c) {
  const BigRat& u = c.get("u");
  const BigRat& v = c.get("v");
  const BigRat den = (c.B * c.B - c.B) * u * v + c.B * c.C * u + c.B * c.C * v + c.C * c.C;
  return {Triple{u, v, c.C * u * v / Ctx::den(den, "(B^2-B)uv+BCu+BCv+C^2")}};
}

std::vector<Triple> no_linear_square(const Ctx& c) {
  const BigRat& u = c.get("u");
  const BigRat& v = c.get("v");
  const BigRat den = BigRat(2) * c.B * u * v - c.B * v * v + c.C * u;
  return {Triple{v * v * (c.B * u + c.C) / Ctx::den(den, "2Buv-Bv^2+Cu"), u, v}};
}

long to_long(const BigRat& v, const char* name) {
  if (!v.is_integer() || !v.numerator().fits_slong_p()) {
    throw PreconditionError(std::string("parameter ") + name + " must be a machine integer");
  }
  return v.numerator().get_si();
}

std::vector<Triple> padoa_family(const Ctx& c) {
  const long z = to_long(c.get("z"), "z");
  std::vector<Triple> out;
  for (const auto& [x, y] : padoa_enumerate(z)) out.push_back(Triple{BigRat(x), BigRat(y), BigRat(z)});
  return out;
}

std::vector<Triple> steggall_family(const Ctx& c) {
  const SolutionTriple t = steggall_solution(to_long(c.get("x"), "x"), to_long(c.get("a"), "a"));
  return {Triple{t.x, t.y, t.z}};
}

bool unit_no_linear(const LaurentParams& p) { return p.A() == 0 && p.B() == 1; }
bool padoa_params(const LaurentParams& p) { return p.A() == 0 && p.B() == 1 && p.C() == 1; }

const std::vector<FamilyEntry>& table() {
  using K = EquationKind;
  static const std::vector<FamilyEntry> entries{
      {{FamilyId::product_full, "example1", K::product, {"T"}, "A B C != 0"},
       abc_nonzero, product_full},
      {{FamilyId::product_degenerate, "degenerate_e11", K::product, {"T", "t"}, "4AC = B^2"},
       degenerate, product_degenerate},
      {{FamilyId::square_ratio_neg_base, "example3_negQ", K::square, {}, "A B C != 0"},
       abc_nonzero, square_ratio_neg_base},
      {{FamilyId::square_ratio_neg_double, "example3_neg2Q", K::square, {}, "A B C != 0"},
       abc_nonzero, square_ratio_neg_double},
      {{FamilyId::square_degenerate, "degenerate_e12", K::square, {"t"}, "4AC = B^2"},
       degenerate, square_degenerate},
      {{FamilyId::unit_integer_k, "remark11_int_k", K::product, {"k"}, "A = 0, B = 1"},
       unit_no_linear, unit_integer_k},
      {{FamilyId::unit_integer_kl, "remark11_int_kl", K::product, {"k", "l"}, "A = 0, B = 1"},
       unit_no_linear, unit_integer_kl},
      {{FamilyId::no_linear_rational, "remark11_rat", K::product, {"u", "v"},
        "A = 0, B not in {0, 1}"},
       [](const LaurentParams& p) { return p.A() == 0 && p.B() != 0 && p.B() != 1; },
       no_linear_rational},
      {{FamilyId::no_linear_square, "remark12_rat", K::square, {"u", "v"}, "A = 0, B != 0"},
       [](const LaurentParams& p) { return p.A() == 0 && p.B() != 0; }, no_linear_square},
      {{FamilyId::padoa, "padoa", K::product, {"z"}, "(A, B, C) = (0, 1, 1)"}, padoa_params,
       padoa_family},
      {{FamilyId::steggall, "steggall", K::product, {"x", "a"}, "(A, B, C) = (0, 1, 1)"},
       padoa_params, steggall_family},
  };
  return entries;
}

const FamilyEntry& entry(FamilyId id) {
  for (const auto& e : table()) {
    if (e.info.id == id) return e;
  }
  throw PreconditionError("unknown family");
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& e : table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const FamilyInfo& family_info(FamilyId id) { return entry(id).info; }

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& e : table()) {
    if (e.info.name == name) return e.info.id;
  }
  return std::nullopt;
}

std::vector<SolutionTriple> family_eval(FamilyId id, const FamilyInput& in) {
  const FamilyEntry& e = entry(id);
  if (!e.admissible(in.params)) {
    throw RegimeError(std::string(e.info.name) + " needs " + std::string(e.info.condition));
  }
  const Ctx ctx(in);
  std::vector<SolutionTriple> out;
  for (const Triple& t : e.formula(ctx)) {
    if (t[0].is_zero() || t[1].is_zero() || t[2].is_zero()) {
      throw PreconditionError(std::string(e.info.name) + " produced a zero coordinate");
    }
    SolutionTriple s = verify_triple(in.params, e.info.kind, t[0], t[1], t[2]);
    if (!s.verified) {
      throw InternalVerificationError(std::string(e.info.name) + " produced (" +
                                      t[0].to_string() + ", " + t[1].to_string() + ", " +
                                      t[2].to_string() + "), which does not verify");
    }
    s.provenance = std::string(e.info.name);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<long, long>> padoa_enumerate(long z) {
  if (z < 1) throw PreconditionError("padoa needs z >= 1");
  if (z > (1L << 31)) throw PreconditionError("padoa z too large");
  const long n = z * (z + 1);
  std::vector<long> small;
  std::vector<long> large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  std::vector<std::pair<long, long>> out;
  out.reserve(small.size());
  for (long d : small) out.emplace_back(z + d, z + n / d);
  return out;
}

SolutionTriple steggall_solution(long x, long a) {
  if (x < 1) throw PreconditionError("steggall needs x >= 1");
  if (x > (1L << 31)) throw PreconditionError("steggall x too large");
  if (a <= x + 1) throw PreconditionError("steggall needs a > x + 1");
  const long n = x * (x + 1);
  if (n % a != 0) throw PreconditionError("steggall needs a to divide x(x+1)");
  const long y = a - x - 1;
  const long z = x - n / a;
  const LaurentParams padoa_params(0, 1, 1);
  SolutionTriple t = verify_triple(padoa_params, EquationKind::product, BigRat(x), BigRat(y),
                                   BigRat(z));
  if (!t.verified) throw InternalVerificationError("steggall triple does not verify");
  t.provenance = "steggall";
  return t;
}

}  // namespace laurent
