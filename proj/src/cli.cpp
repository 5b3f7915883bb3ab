#include "laurent/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "laurent/errors.hpp"
#include "laurent/families.hpp"
#include "laurent/generate.hpp"
#include "laurent/search.hpp"
#include "laurent/serialize.hpp"

namespace laurent::cli {

namespace {

// Raised for malformed flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { jsonl, csv, table };

const std::map<std::string, Format> kFormats{
    {"jsonl", Format::jsonl}, {"csv", Format::csv}, {"table", Format::table}};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

BigRat parse_rat(const std::string& s, const char* what) {
  try {
    return BigRat::parse(s);
  } catch (const Error&) {
    throw UsageError(std::string(what) + ": malformed rational '" + s + "'");
  }
}

long parse_long(const std::string& s, const char* what) {
  const BigRat v = parse_rat(s, what);
  if (!v.is_integer() || !v.numerator().fits_slong_p()) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + s + "'");
  }
  return v.numerator().get_si();
}

ECPoint parse_point(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw UsageError("point must be X,Y");
  return ECPoint(parse_rat(parts[0], "point X"), parse_rat(parts[1], "point Y"));
}

// "V=81X,U=729Y" -> u = 9 (V = u^2 X, U = u^3 Y).
BigRat parse_scaled(const std::string& s) {
  const auto parts = split(s, ',');
  auto coefficient = [&](const std::string& part, char lhs, char var) {
    if (part.size() < 4 || part[0] != lhs || part[1] != '=' || part.back() != var) {
      throw UsageError("--scaled must look like V=81X,U=729Y");
    }
    return parse_rat(part.substr(2, part.size() - 3), "--scaled");
  };
  if (parts.size() != 2) throw UsageError("--scaled must look like V=81X,U=729Y");
  const BigRat k2 = coefficient(parts[0], 'V', 'X');
  const BigRat k3 = coefficient(parts[1], 'U', 'Y');
  if (k2.is_zero()) throw UsageError("--scaled: zero scale");
  const BigRat u = k3 / k2;
  if (u * u != k2) throw UsageError("--scaled: need V = u^2 X and U = u^3 Y");
  return u;
}

SearchBox parse_box(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() != 4) throw UsageError("--box must be xmin:xmax:zmin:zmax");
  SearchBox box;
  box.x_min = parse_long(parts[0], "--box");
  box.x_max = parse_long(parts[1], "--box");
  box.z_min = parse_long(parts[2], "--box");
  box.z_max = parse_long(parts[3], "--box");
  if (box.x_min > box.x_max || box.z_min > box.z_max) {
    throw UsageError("--box needs xmin <= xmax and zmin <= zmax");
  }
  return box;
}

std::pair<long, long> parse_range(const std::string& s, const char* what) {
  const auto parts = split(s, ':');
  if (parts.size() != 2) throw UsageError(std::string(what) + " must be lo:hi");
  const long lo = parse_long(parts[0], what);
  const long hi = parse_long(parts[1], what);
  if (lo > hi) throw UsageError(std::string(what) + " needs lo <= hi");
  return {lo, hi};
}

unsigned default_threads() {
  if (const char* env = std::getenv("LAURENT_DIOPH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<unsigned>(v);
  }
  return 1;
}

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void add(const SolutionTriple& t) {
    switch (format_) {
      case Format::jsonl:
        out_ << solution_jsonl(t) << '\n';
        break;
      case Format::csv:
        if (!header_done_) out_ << csv_header() << '\n';
        header_done_ = true;
        out_ << solution_csv(t) << '\n';
        break;
      case Format::table:
        rows_.push_back(t);
        break;
    }
    out_.flush();
  }

  void finish() {
    if (format_ != Format::table) return;
    std::vector<std::array<std::string, 5>> cells{{"params", "x", "y", "z", "provenance"}};
    for (const auto& t : rows_) {
      std::ostringstream params;
      params << '(' << t.params.A() << ',' << t.params.B() << ',' << t.params.C()
             << ") n=" << exponent(t.kind);
      cells.push_back({params.str(), t.x.to_string(), t.y.to_string(), t.z.to_string(),
                       t.provenance});
    }
    std::array<std::size_t, 5> width{};
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
      }
      out_ << line << '\n';
    }
  }

 private:
  std::ostream& out_;
  Format format_;
  bool header_done_ = false;
  std::vector<SolutionTriple> rows_;
};

struct ParamFlags {
  long A = 1;
  long B = 1;
  long C = 1;
  int n = 1;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* c_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void add(CLI::App* app, bool with_n = true) {
    a_opt = app->add_option("--A", A, "coefficient of X");
    b_opt = app->add_option("--B", B, "constant term");
    c_opt = app->add_option("--C", C, "coefficient of 1/X (nonzero)");
    if (with_n) n_opt = app->add_option("--n", n, "exponent: 1 or 2")->check(CLI::IsMember({1, 2}));
  }

  bool given() const { return a_opt->count() + b_opt->count() + c_opt->count() > 0; }
  LaurentParams params() const { return LaurentParams(A, B, C); }
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "output format: jsonl, csv or table")
      ->check(CLI::IsMember({"jsonl", "csv", "table"}));
}

// ---------------------------------------------------------------------------

int verify_one(const SolutionTriple& t, std::ostream& out, std::ostream& err) {
  SolutionTriple v = verify_triple(t.params, t.kind, t.x, t.y, t.z);
  v.provenance = t.provenance.empty() ? "input" : t.provenance;
  Json j = solution_to_json(v);
  if (v.verified) {
    out << j.dump() << '\n';
    return kOk;
  }
  const auto proposed = complete_first_coordinate(t.params, t.kind, t.y, t.z);
  Json roots = Json::array();
  for (const auto& r : proposed) roots.push_back(rat_to_json(r));
  j["proposed_x"] = roots;
  out << j.dump() << '\n';
  const BigRat lhs = f_eval(t.params, t.x) * f_eval(t.params, t.y);
  const BigRat fz = f_eval(t.params, t.z);
  err << "not a solution: f(x)f(y) = " << lhs
      << ", f(z)^" << exponent(t.kind) << " = " << (t.kind == EquationKind::product ? fz : fz * fz);
  if (proposed.empty()) {
    err << "; no rational x completes (y, z)\n";
  } else {
    err << "; x completing (y, z):";
    for (const auto& r : proposed) err << ' ' << r;
    err << '\n';
  }
  return kVerificationFailed;
}

int cmd_verify(const ParamFlags& pf, const std::optional<std::string>& x,
               const std::optional<std::string>& y, const std::optional<std::string>& z,
               const std::optional<std::string>& jsonl, std::istream& in, std::ostream& out,
               std::ostream& err) {
  if (jsonl) {
    std::ifstream file;
    std::istream* src = &in;
    if (*jsonl != "-") {
      file.open(*jsonl);
      if (!file) throw UsageError("cannot open " + *jsonl);
      src = &file;
    }
    int code = kOk;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(*src, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      SolutionTriple t;
      try {
        t = solution_from_json(Json::parse(line));
      } catch (const std::exception& e) {
        throw UsageError("line " + std::to_string(lineno) + ": " + e.what());
      }
      if (verify_one(t, out, err) != kOk) code = kVerificationFailed;
    }
    return code;
  }
  if (!x || !y || !z) throw UsageError("verify needs --x, --y and --z (or --jsonl)");
  SolutionTriple t;
  t.params = pf.params();
  t.kind = equation_kind(pf.n);
  t.x = parse_rat(*x, "--x");
  t.y = parse_rat(*y, "--y");
  t.z = parse_rat(*z, "--z");
  if (t.x.is_zero() || t.y.is_zero() || t.z.is_zero()) {
    throw UsageError("x, y and z must be nonzero");
  }
  return verify_one(t, out, err);
}

int cmd_family(const ParamFlags& pf, const std::optional<std::string>& id, bool list,
               const std::vector<std::string>& params, const std::string& format,
               std::ostream& out) {
  if (list) {
    for (const auto& info : family_catalog()) {
      out << info.name << "  n=" << exponent(info.kind) << "  params:";
      for (auto p : info.parameters) out << ' ' << p;
      out << "  needs " << info.condition << '\n';
    }
    return kOk;
  }
  if (!id) throw UsageError("family needs an id (see family --list)");
  const auto fid = family_from_name(*id);
  if (!fid) throw UsageError("unknown family '" + *id + "' (see family --list)");
  FamilyInput input;
  if (pf.given()) {
    input.params = pf.params();
  } else if (*fid == FamilyId::padoa || *fid == FamilyId::steggall) {
    input.params = LaurentParams(0, 1, 1);
  } else {
    throw UsageError("family " + *id + " needs --A, --B and --C");
  }
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param must be name=value");
    input.free[kv.substr(0, eq)] = parse_rat(kv.substr(eq + 1), "--param");
  }
  Emitter emit(out, kFormats.at(format));
  for (const auto& t : family_eval(*fid, input)) emit.add(t);
  emit.finish();
  return kOk;
}

struct GenerateFlags {
  std::optional<std::string> preset;
  std::optional<std::string> T;
  std::optional<std::string> z;
  std::optional<std::string> from_point;
  std::optional<std::string> scaled;
  std::optional<int> max_multiple;
  bool positive = false;
  bool no_torsion = false;
  bool allow_trivial = false;
  bool diagnostics = false;
  std::string format = "jsonl";
};

int cmd_generate(const ParamFlags& pf, const GenerateFlags& g, std::ostream& out,
                 std::ostream& err) {
  LaurentParams params = pf.params();
  EquationKind kind = equation_kind(pf.n);
  GenerationConfig cfg;
  if (g.preset) {
    const auto preset = find_preset(*g.preset);
    if (!preset) throw UsageError("unknown preset '" + *g.preset + "'");
    if (pf.given() || pf.n_opt->count() > 0) {
      throw UsageError("--preset fixes A, B, C and n");
    }
    params = preset->params;
    kind = preset->kind;
    cfg = preset->config;
  }
  if (g.T) cfg.T = parse_rat(*g.T, "--T");
  if (g.z) cfg.z_fixed = parse_rat(*g.z, "--z");
  if (g.max_multiple) {
    if (*g.max_multiple < 1) throw UsageError("--max-multiple must be at least 1");
    cfg.max_multiple = *g.max_multiple;
  }
  if (g.from_point) {
    const ECPoint printed = parse_point(*g.from_point);
    cfg.seed = g.scaled ? unscale_point(printed, parse_scaled(*g.scaled)) : printed;
  } else if (g.scaled) {
    throw UsageError("--scaled needs --from-point");
  }
  cfg.positivity_filter = g.positive;
  cfg.use_torsion = !g.no_torsion;
  cfg.require_nontrivial = !g.allow_trivial;

  const GenerationResult result = generate_solutions(params, kind, cfg);
  Emitter emit(out, kFormats.at(g.format));
  for (const auto& t : result.solutions) emit.add(t);
  emit.finish();
  if (g.diagnostics) {
    for (const auto& d : result.diagnostics) err << "skip " << d << '\n';
  }
  if (result.solutions.empty()) {
    err << "no solutions within " << cfg.max_multiple << " multiples\n";
    return kVerificationFailed;
  }
  return kOk;
}

struct SearchFlags {
  std::string box = "-100:100:-100:100";
  std::optional<unsigned> threads;
  std::optional<std::string> c_range;
  bool allow_x_ge_y = false;
  bool stats = false;
  std::string format = "jsonl";
};

int cmd_search(const ParamFlags& pf, const SearchFlags& s, std::ostream& out, std::ostream& err) {
  SearchBox box = parse_box(s.box);
  box.require_x_lt_y = !s.allow_x_ge_y;
  const unsigned threads = s.threads ? *s.threads : default_threads();
  const EquationKind kind = equation_kind(pf.n);
  std::vector<LaurentParams> list;
  if (s.c_range) {
    const auto [lo, hi] = parse_range(*s.c_range, "--C-range");
    for (long c = lo; c <= hi; ++c) {
      if (c != 0) list.emplace_back(pf.A, pf.B, c);
    }
    if (list.empty()) throw UsageError("--C-range contains no nonzero C");
  } else {
    list.push_back(pf.params());
  }
  const auto reports = sweep(list, kind, box, threads);
  Emitter emit(out, kFormats.at(s.format));
  for (const auto& r : reports) {
    for (const auto& t : r.solutions) emit.add(t);
    if (s.stats) {
      err << "(A,B,C)=(" << r.params.A() << ',' << r.params.B() << ',' << r.params.C()
          << ") solutions=" << r.solutions.size()
          << " scanned=" << r.stats.candidates_scanned
          << " seconds=" << r.stats.elapsed.count() << '\n';
    }
  }
  emit.finish();
  return kOk;
}

int cmd_padoa(long z, const std::string& format, std::ostream& out) {
  const LaurentParams unit(0, 1, 1);
  Emitter emit(out, kFormats.at(format));
  for (const auto& [x, y] : padoa_enumerate(z)) {
    SolutionTriple t = verify_triple(unit, EquationKind::product, BigRat(x), BigRat(y), BigRat(z));
    t.provenance = "padoa";
    emit.add(t);
  }
  emit.finish();
  return kOk;
}

struct CurveFlags {
  std::optional<std::string> curve;
  std::optional<std::string> T;
  std::optional<std::string> z;
  std::optional<std::string> a2;
  std::optional<std::string> a4;
  std::optional<std::string> a6;
  std::optional<std::string> point;
  std::optional<std::string> scale;
};

std::string torsion_text(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.is_identity()) return "identity";
  std::ostringstream os;
  os << torsion_status(e, p);
  return os.str();
}

std::string method_text(Correspondence::Method m) {
  switch (m) {
    case Correspondence::Method::biquadratic:
      return "biquadratic";
    case Correspondence::Method::base_point:
      return "base_point";
    case Correspondence::Method::leading_square:
      return "leading_square";
    case Correspondence::Method::root_at_infinity:
      return "root_at_infinity";
  }
  return "unknown";
}

int cmd_curve_info(const ParamFlags& pf, const CurveFlags& c, std::ostream& out) {
  Json j;
  std::optional<Correspondence> corr;
  std::optional<ECPoint> canonical;
  const bool raw = c.a2 || c.a4 || c.a6;
  if (raw == c.curve.has_value()) {
    throw UsageError("curve-info needs either --curve or all of --a2, --a4, --a6");
  }
  std::optional<WeierstrassCurve> curve;
  if (raw) {
    if (!c.a2 || !c.a4 || !c.a6) throw UsageError("--a2, --a4 and --a6 go together");
    curve.emplace(parse_rat(*c.a2, "--a2"), parse_rat(*c.a4, "--a4"), parse_rat(*c.a6, "--a6"));
  } else {
    const std::string& name = *c.curve;
    const LaurentParams p = pf.params();
    const BigRat T = c.T ? parse_rat(*c.T, "--T") : BigRat(1);
    if (name == "product" || name == "e1") {
      corr.emplace(descend_general(product_discriminant(p, T), QuarticPoint{BigRat(0), BigRat(p.C()) * T}));
      canonical = product_base_point(p, T);
    } else if (name == "product-no-constant" || name == "e2") {
      corr.emplace(descend_biquadratic(product_discriminant_no_constant(p.A(), p.C(), T)));
    } else if (name == "square-ratio" || name == "e3") {
      corr.emplace(descend_general(square_ratio_discriminant(p.A(), p.B(), p.C()),
                                   LeadingSquare{BigRat(p.A()) * BigRat(p.C())}));
      canonical = square_ratio_curve(p.A(), p.B(), p.C()).base;
    } else if (name == "square-fixed-z" || name == "e4") {
      if (!c.z) throw UsageError("square-fixed-z needs --z");
      corr.emplace(descend_biquadratic(square_fixed_z_quartic(p.A(), p.C(), parse_rat(*c.z, "--z"))));
    } else {
      throw UsageError("unknown --curve '" + name +
                       "' (product, product-no-constant, square-ratio, square-fixed-z)");
    }
    curve = corr->target();
    j["quartic"] = quartic_to_json(corr->source());
    j["descent"] = method_text(corr->method());
    Json ex = Json::array();
    for (const auto& e : corr->exceptional_inputs()) ex.push_back(e);
    j["exceptional_inputs"] = ex;
  }
  j["curve"] = curve_to_json(*curve);
  j["discriminant"] = rat_to_json(curve_discriminant(*curve));
  std::optional<BigRat> scale;
  if (c.scale) {
    scale = parse_rat(*c.scale, "--scale");
    if (scale->is_zero()) throw UsageError("--scale must be nonzero");
    j["scaled_curve"] = curve_to_json(rescale(*curve, *scale));
  }
  if (canonical) {
    j["canonical_point"] = point_to_json(*canonical);
    j["canonical_torsion"] = torsion_text(*curve, *canonical);
  }
  Json tors = Json::array();
  for (const auto& t : two_power_torsion(*curve)) tors.push_back(point_to_json(t));
  j["two_power_torsion"] = tors;
  if (c.point) {
    const ECPoint given = parse_point(*c.point);
    const ECPoint pt = scale ? unscale_point(given, *scale) : given;
    Json pj;
    pj["point"] = point_to_json(pt);
    pj["on_curve"] = curve->contains(pt);
    if (curve->contains(pt)) {
      pj["torsion"] = torsion_text(*curve, pt);
      if (corr) {
        try {
          const QuarticPoint q = corr->to_quartic(pt);
          pj["quartic_point"] = Json{{"z", rat_to_json(q.z)}, {"v", rat_to_json(q.v)}};
        } catch (const ExceptionalPoint& e) {
          pj["exceptional"] = e.denominator();
        }
      }
    }
    j["query"] = pj;
  }
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact solutions of f(x) f(y) = f(z)^n for f(X) = A X + B + C / X", "laurent-dioph"};
  app.require_subcommand(1);

  ParamFlags verify_pf;
  std::optional<std::string> vx;
  std::optional<std::string> vy;
  std::optional<std::string> vz;
  std::optional<std::string> vjsonl;
  CLI::App* verify = app.add_subcommand("verify", "check f(x) f(y) = f(z)^n exactly");
  verify_pf.add(verify);
  verify->add_option("--x", vx, "x as p/q");
  verify->add_option("--y", vy, "y as p/q");
  verify->add_option("--z", vz, "z as p/q");
  verify->add_option("--jsonl", vjsonl, "verify every JSON line of FILE ('-' for stdin)");

  ParamFlags family_pf;
  std::optional<std::string> fid;
  bool flist = false;
  std::vector<std::string> fparams;
  std::string fformat = "jsonl";
  CLI::App* family = app.add_subcommand("family", "evaluate a closed-form solution family");
  family->add_option("id", fid, "family id (see --list)");
  family_pf.add(family, false);
  family->add_flag("--list", flist, "list family ids and their parameters");
  family->add_option("--param", fparams, "free parameter name=value (repeatable)");
  add_format(family, fformat);

  ParamFlags gen_pf;
  GenerateFlags gflags;
  CLI::App* generate = app.add_subcommand("generate", "solutions from multiples of a curve point");
  gen_pf.add(generate);
  generate->add_option("--preset", gflags.preset, "example2 or example4");
  generate->add_option("--T", gflags.T, "x for n = 1 (default 1)");
  generate->add_option("--z", gflags.z, "fixed z for n = 2 with B = 0");
  generate->add_option("--from-point", gflags.from_point, "seed point X,Y on the curve");
  generate->add_option("--scaled", gflags.scaled,
                       "seed given in scaled coordinates, e.g. V=81X,U=729Y");
  generate->add_option("--max-multiple", gflags.max_multiple, "largest multiple m (default 8)");
  generate->add_flag("--positive", gflags.positive, "keep only x, y, z > 0");
  generate->add_flag("--no-torsion", gflags.no_torsion, "do not add torsion translates");
  generate->add_flag("--allow-trivial", gflags.allow_trivial, "keep trivial solutions");
  generate->add_flag("--diagnostics", gflags.diagnostics, "report skipped points on stderr");
  add_format(generate, gflags.format);

  ParamFlags search_pf;
  SearchFlags sflags;
  CLI::App* search = app.add_subcommand("search", "exhaustive integer search in a box");
  search_pf.add(search);
  search->add_option("--box", sflags.box, "xmin:xmax:zmin:zmax (default -100:100:-100:100)");
  search->add_option("--threads", sflags.threads,
                     "worker threads (default $LAURENT_DIOPH_THREADS or 1; 0 = all cores)");
  search->add_option("--C-range", sflags.c_range, "sweep C over lo:hi instead of --C");
  search->add_flag("--allow-x-ge-y", sflags.allow_x_ge_y, "scan all y, not only y > x");
  search->add_flag("--stats", sflags.stats, "per-parameter statistics on stderr");
  add_format(search, sflags.format);

  long pz = 0;
  std::string pformat = "jsonl";
  CLI::App* padoa = app.add_subcommand("padoa", "all positive (x, y) with (1+1/x)(1+1/y) = 1+1/z");
  padoa->add_option("--z", pz, "positive integer z")->required();
  add_format(padoa, pformat);

  ParamFlags curve_pf;
  CurveFlags cflags;
  CLI::App* curve_info = app.add_subcommand("curve-info", "cubic model, descent and point data");
  curve_pf.add(curve_info, false);
  curve_info->add_option("--curve", cflags.curve,
                         "product, product-no-constant, square-ratio or square-fixed-z");
  curve_info->add_option("--T", cflags.T, "x for the product curves (default 1)");
  curve_info->add_option("--z", cflags.z, "fixed z for square-fixed-z");
  curve_info->add_option("--a2", cflags.a2, "raw model coefficient");
  curve_info->add_option("--a4", cflags.a4, "raw model coefficient");
  curve_info->add_option("--a6", cflags.a6, "raw model coefficient");
  curve_info->add_option("--point", cflags.point, "point X,Y to examine");
  curve_info->add_option("--scale", cflags.scale, "u: --point is (u^2 X, u^3 Y), show scaled model");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return cmd_verify(verify_pf, vx, vy, vz, vjsonl, in, out, err);
    if (*family) return cmd_family(family_pf, fid, flist, fparams, fformat, out);
    if (*generate) return cmd_generate(gen_pf, gflags, out, err);
    if (*search) return cmd_search(search_pf, sflags, out, err);
    if (*padoa) return cmd_padoa(pz, pformat, out);
    if (*curve_info) return cmd_curve_info(curve_pf, cflags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalVerificationError& e) {
    err << "internal verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace laurent::cli
