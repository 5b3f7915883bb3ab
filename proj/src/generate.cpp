#include "laurent/generate.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "laurent/errors.hpp"

namespace laurent {

namespace {

// How a quartic point turns into candidate triples.
using Expander = std::function<std::vector<SolutionTriple>(const QuarticPoint&)>;

std::string step_label(const std::string& tag, long m, std::size_t torsion_index) {
  std::string s = tag + (m < 0 ? "-multiple-neg-" : "-multiple-") + std::to_string(m < 0 ? -m : m);
  if (torsion_index != 0) s += "+torsion-" + std::to_string(torsion_index);
  return s;
}

bool all_positive(const SolutionTriple& t) {
  return t.x.sign() > 0 && t.y.sign() > 0 && t.z.sign() > 0;
}

GenerationResult walk(Correspondence corr, ECPoint seed, const std::string& tag,
                      const LaurentParams& p, EquationKind kind, const GenerationConfig& cfg,
                      const Expander& expand) {
  if (cfg.max_multiple < 1) throw PreconditionError("max_multiple must be at least 1");
  const WeierstrassCurve& E = corr.target();
  if (!E.contains(seed)) throw NotOnCurve("seed is not on the descended curve");
  GenerationResult out{corr, seed, {}, {}};

  const std::vector<ECPoint> torsion =
      cfg.use_torsion ? two_power_torsion(E) : std::vector<ECPoint>{ECPoint::identity()};
  std::set<std::tuple<BigRat, BigRat, BigRat>> seen;
  auto note = [&](const std::string& where, const std::string& what) {
    out.diagnostics.push_back(where + ": " + what);
  };

  ECPoint multiple = ECPoint::identity();
  for (long m = 1; m <= cfg.max_multiple; ++m) {
    multiple = ec_add(E, multiple, seed);
    for (const long sign : {1L, -1L}) {
      const ECPoint base = sign > 0 ? multiple : ec_neg(E, multiple);
      for (std::size_t ti = 0; ti < torsion.size(); ++ti) {
        const std::string label = step_label(tag, sign * m, ti);
        const ECPoint point = ec_add(E, base, torsion[ti]);
        QuarticPoint qp;
        try {
          qp = corr.to_quartic(point);
        } catch (const ExceptionalPoint& e) {
          note(label, e.what());
          continue;
        }
        std::vector<SolutionTriple> candidates;
        try {
          candidates = expand(qp);
        } catch (const Error& e) {
          note(label, e.what());
          continue;
        }
        if (candidates.empty()) note(label, "no rational root");
        for (auto& t : candidates) {
          if (t.x.is_zero() || t.y.is_zero() || t.z.is_zero()) {
            note(label, "zero coordinate");
            continue;
          }
          SolutionTriple checked = verify_triple(p, kind, t.x, t.y, t.z);
          if (!checked.verified) {
            note(label, "candidate failed verification");
            continue;
          }
          if (cfg.require_nontrivial && !checked.nontrivial) {
            note(label, "trivial solution dropped");
            continue;
          }
          if (cfg.positivity_filter && !all_positive(checked)) continue;
          if (!seen.emplace(checked.x, checked.y, checked.z).second) continue;
          checked.provenance = label;
          out.solutions.push_back(std::move(checked));
        }
      }
    }
  }
  return out;
}

ECPoint seed_or_search(const Correspondence& corr, const GenerationConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (auto found = search_seed(corr, cfg.seed_search_height)) return *found;
  throw NoBasePoint("no seed given and none of infinite order found up to height " +
                    std::to_string(cfg.seed_search_height));
}

std::vector<SolutionTriple> from_roots(const std::vector<BigRat>& roots,
                                       const std::function<SolutionTriple(const BigRat&)>& make) {
  std::vector<SolutionTriple> out;
  for (const auto& r : roots) {
    if (!r.is_zero()) out.push_back(make(r));
  }
  return out;
}

std::vector<BigRat> roots_of(const QuadraticPoly& q) {
  if (q.a.is_zero() && q.b.is_zero()) return {};
  return solve_quadratic_exact(q);
}

}  // namespace

GenerationResult generate_product_solutions(const LaurentParams& p, const GenerationConfig& cfg) {
  const BigRat& T = cfg.T;
  if (T.is_zero()) throw PreconditionError("T must be nonzero");
  const EquationKind kind = EquationKind::product;
  auto expand = [&](const QuarticPoint& qp) {
    if (qp.z.is_zero()) return std::vector<SolutionTriple>{};
    return from_roots(roots_of(product_quadratic(p, T, qp.z)), [&](const BigRat& u) {
      return SolutionTriple{T, u, qp.z, kind, p, false, false, {}};
    });
  };
  switch (p.regime()) {
    case Regime::full: {
      const BigRat ct = BigRat(p.C()) * T;
      Correspondence corr =
          descend_general(product_discriminant(p, T), QuarticPoint{BigRat(0), ct});
      ECPoint seed = cfg.seed ? *cfg.seed : product_base_point(p, T);
      return walk(std::move(corr), std::move(seed), "e1", p, kind, cfg, expand);
    }
    case Regime::no_constant: {
      Correspondence corr = descend_biquadratic(product_discriminant_no_constant(p.A(), p.C(), T));
      ECPoint seed = seed_or_search(corr, cfg);
      return walk(std::move(corr), std::move(seed), "e2", p, kind, cfg, expand);
    }
    case Regime::degenerate_square:
      throw RegimeError("4AC = B^2: use the degenerate_e11 family instead");
    case Regime::no_linear:
      throw RegimeError("A = 0: use the remark11 families instead");
  }
  throw RegimeError("unhandled regime");
}

GenerationResult generate_square_solutions(const LaurentParams& p, const GenerationConfig& cfg) {
  const EquationKind kind = EquationKind::square;
  switch (p.regime()) {
    case Regime::full: {
      const BigRat ac = BigRat(p.A()) * BigRat(p.C());
      Correspondence corr =
          descend_general(square_ratio_discriminant(p.A(), p.B(), p.C()), LeadingSquare{ac});
      ECPoint seed = cfg.seed ? *cfg.seed : square_ratio_curve(p.A(), p.B(), p.C()).base;
      auto expand = [&](const QuarticPoint& qp) {
        const BigRat& T = qp.z;
        if (T.is_zero() || T == BigRat(1)) return std::vector<SolutionTriple>{};
        return from_roots(roots_of(square_ratio_quadratic(p, T)), [&](const BigRat& x) {
          return SolutionTriple{x, x * T * T, x * T, kind, p, false, false, {}};
        });
      };
      return walk(std::move(corr), std::move(seed), "e3", p, kind, cfg, expand);
    }
    case Regime::no_constant: {
      const BigRat& z = cfg.z_fixed;
      if (z.is_zero()) throw PreconditionError("z_fixed must be nonzero");
      Correspondence corr = descend_biquadratic(square_fixed_z_quartic(p.A(), p.C(), z));
      ECPoint seed = seed_or_search(corr, cfg);
      auto expand = [&](const QuarticPoint& qp) {
        const BigRat& y = qp.z;
        if (y.is_zero()) return std::vector<SolutionTriple>{};
        return from_roots(roots_of(square_fixed_z_quadratic(p.A(), p.C(), y, z)),
                          [&](const BigRat& x) {
                            return SolutionTriple{x, y, z, kind, p, false, false, {}};
                          });
      };
      return walk(std::move(corr), std::move(seed), "e4", p, kind, cfg, expand);
    }
    case Regime::degenerate_square:
      throw RegimeError("4AC = B^2: use the degenerate_e12 family instead");
    case Regime::no_linear:
      throw RegimeError("A = 0: use the remark12_rat family instead");
  }
  throw RegimeError("unhandled regime");
}

GenerationResult generate_solutions(const LaurentParams& p, EquationKind kind,
                                    const GenerationConfig& cfg) {
  return kind == EquationKind::product ? generate_product_solutions(p, cfg)
                                       : generate_square_solutions(p, cfg);
}

std::optional<ECPoint> search_seed(const Correspondence& corr, long height) {
  const QuarticModel& q = corr.source();
  for (long h = 1; h <= height; ++h) {
    // Points of height exactly h: a/b in lowest terms with max(|a|, b) = h.
    for (long b = 1; b <= h; ++b) {
      for (long a = -h; a <= h; ++a) {
        if (std::max(std::labs(a), b) != h || std::gcd(a, b) != 1) continue;
        const BigRat s(a, b);
        const auto v = rat_is_square(q.eval(s));
        if (!v || v->is_zero()) continue;
        ECPoint pt = ECPoint::identity();
        try {
          pt = corr.to_curve(QuarticPoint{s, *v});
        } catch (const ExceptionalPoint&) {
          continue;
        }
        if (pt.is_identity()) continue;
        if (!torsion_status(corr.target(), pt).is_torsion()) return pt;
      }
    }
  }
  return std::nullopt;
}

ECPoint unscale_point(const ECPoint& printed, const BigRat& u) {
  if (printed.is_identity()) return printed;
  const BigRat u2 = u * u;
  return ECPoint(printed.x() / u2, printed.y() / (u2 * u));
}

std::optional<GenerationPreset> find_preset(std::string_view name) {
  if (name == "example2") {
    GenerationPreset preset{std::string(name), LaurentParams(1, 0, 1), EquationKind::product,
                            {}, ECPoint(BigRat(8712), BigRat(702000)), BigRat(9)};
    preset.config.T = BigRat(4, 3);
    preset.config.seed = unscale_point(preset.printed_point, preset.scale);
    return preset;
  }
  if (name == "example4") {
    GenerationPreset preset{std::string(name), LaurentParams(1, 0, -1), EquationKind::square,
                            {}, ECPoint(BigRat(112352, 49), BigRat(79764000, 343)), BigRat(1)};
    preset.config.z_fixed = BigRat(4);
    preset.config.seed = preset.printed_point;
    return preset;
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() { return {"example2", "example4"}; }

}  // namespace laurent
