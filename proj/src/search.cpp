#include "laurent/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <thread>
#include <tuple>

#include "laurent/errors.hpp"

namespace laurent {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Reduced fraction with positive denominator.
struct WideKey {
  i128 num;
  i128 den;

  WideKey(i128 n, i128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const i128 g = gcd128(n, d);
    num = g == 0 ? n : n / g;
    den = g == 0 ? d : d / g;
  }

  friend bool operator==(const WideKey&, const WideKey&) = default;
};

struct WideKeyHash {
  std::size_t operator()(const WideKey& k) const noexcept {
    const auto mix = [](std::uint64_t h, std::uint64_t v) {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    std::uint64_t h = 0;
    for (i128 v : {k.num, k.den}) {
      const auto u = static_cast<u128>(v);
      h = mix(h, static_cast<std::uint64_t>(u));
      h = mix(h, static_cast<std::uint64_t>(u >> 64));
    }
    return h;
  }
};

std::vector<long> nonzero_range(long lo, long hi) {
  std::vector<long> out;
  for (long v = lo; v <= hi; ++v) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs body(i) for i in [0, count) on `threads` workers with dynamic
// scheduling; each worker owns one slot of the returned vector.
template <typename Local, typename Body>
std::vector<Local> parallel_for(std::size_t count, unsigned threads, Body body) {
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<Local> locals(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned w) {
    for (std::size_t i = next++; i < count; i = next++) body(i, locals[w]);
  };
  if (workers == 1) {
    run(0);
    return locals;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
  return locals;
}

struct StripeResult {
  std::vector<SolutionTriple> solutions;
  std::uint64_t scanned = 0;
};

// Shared scan: key_xy(ix, iy) gives the lookup handle; hits(handle) the z list.
template <typename KeyOf, typename Hits>
StripeResult scan_row(const LaurentParams& p, EquationKind kind, const SearchBox& box,
                      const std::vector<long>& xs, std::size_t ix, const KeyOf& key_of,
                      const Hits& hits) {
  StripeResult r;
  const long x = xs[ix];
  const std::size_t start = box.require_x_lt_y ? ix + 1 : 0;
  for (std::size_t iy = start; iy < xs.size(); ++iy) {
    ++r.scanned;
    for (long z : hits(key_of(ix, iy))) {
      SolutionTriple t = verify_triple(p, kind, BigRat(x), BigRat(xs[iy]), BigRat(z));
      if (t.verified && t.nontrivial) r.solutions.push_back(std::move(t));
    }
  }
  return r;
}

}  // namespace

void validate(const SearchBox& box) {
  if (box.x_min > box.x_max) throw PreconditionError("search box needs x_min <= x_max");
  if (box.z_min > box.z_max) throw PreconditionError("search box needs z_min <= z_max");
}

bool wide_integer_path_fits(const LaurentParams& p, const SearchBox& box) {
  const mpz_class m = std::max({std::labs(box.x_min), std::labs(box.x_max),
                                std::labs(box.z_min), std::labs(box.z_max)});
  const mpz_class bound = abs(mpz_class(p.A())) * m * m + abs(mpz_class(p.B())) * m +
                          abs(mpz_class(p.C()));
  // Products of two such values (and m^2 denominators) must stay below 2^126.
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 62;
}

FValueIndex::FValueIndex(const LaurentParams& p, EquationKind kind, long z_min, long z_max) {
  for (long z = z_min; z <= z_max; ++z) {
    if (z == 0) continue;
    const BigRat fz = f_eval(p, BigRat(z));
    map_[kind == EquationKind::product ? fz : fz * fz].push_back(z);
  }
}

const std::vector<long>& FValueIndex::lookup(const BigRat& value) const {
  const auto it = map_.find(value);
  return it == map_.end() ? empty_ : it->second;
}

SearchReport brute_force(const LaurentParams& p, EquationKind kind, const SearchBox& box,
                         unsigned threads, SearchPath path) {
  validate(box);
  const auto started = std::chrono::steady_clock::now();
  threads = resolve_threads(threads);
  const std::vector<long> xs = nonzero_range(box.x_min, box.x_max);

  bool wide = false;
  if (path == SearchPath::wide_integer) {
    if (!wide_integer_path_fits(p, box)) {
      throw PreconditionError("box too large for the 128-bit search path");
    }
    wide = true;
  } else if (path == SearchPath::automatic) {
    wide = wide_integer_path_fits(p, box);
  }

  std::vector<StripeResult> locals;
  if (wide) {
    const i128 A = p.A();
    const i128 B = p.B();
    const i128 C = p.C();
    auto numer = [&](long v) { return (A * v + B) * v + C; };  // v f(v)
    std::unordered_map<WideKey, std::vector<long>, WideKeyHash> index;
    for (long z = box.z_min; z <= box.z_max; ++z) {
      if (z == 0) continue;
      const i128 nz = numer(z);
      const WideKey key = kind == EquationKind::product ? WideKey(nz, z)
                                                        : WideKey(nz * nz, i128(z) * z);
      index[key].push_back(z);
    }
    std::vector<i128> nx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) nx[i] = numer(xs[i]);
    const std::vector<long> none;
    auto key_of = [&](std::size_t ix, std::size_t iy) {
      return WideKey(nx[ix] * nx[iy], i128(xs[ix]) * xs[iy]);
    };
    auto hits = [&](const WideKey& k) -> const std::vector<long>& {
      const auto it = index.find(k);
      return it == index.end() ? none : it->second;
    };
    locals = parallel_for<StripeResult>(xs.size(), threads, [&](std::size_t ix, StripeResult& acc) {
      StripeResult r = scan_row(p, kind, box, xs, ix, key_of, hits);
      acc.scanned += r.scanned;
      std::move(r.solutions.begin(), r.solutions.end(), std::back_inserter(acc.solutions));
    });
  } else {
    const FValueIndex index(p, kind, box.z_min, box.z_max);
    std::vector<BigRat> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f_eval(p, BigRat(xs[i]));
    auto key_of = [&](std::size_t ix, std::size_t iy) { return fx[ix] * fx[iy]; };
    auto hits = [&](const BigRat& k) -> const std::vector<long>& { return index.lookup(k); };
    locals = parallel_for<StripeResult>(xs.size(), threads, [&](std::size_t ix, StripeResult& acc) {
      StripeResult r = scan_row(p, kind, box, xs, ix, key_of, hits);
      acc.scanned += r.scanned;
      std::move(r.solutions.begin(), r.solutions.end(), std::back_inserter(acc.solutions));
    });
  }

  SearchReport report{p, kind, box, {}, {}};
  for (auto& l : locals) {
    report.stats.candidates_scanned += l.scanned;
    std::move(l.solutions.begin(), l.solutions.end(), std::back_inserter(report.solutions));
  }
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const SolutionTriple& a, const SolutionTriple& b) {
              return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
            });
  for (auto& s : report.solutions) s.provenance = "search";
  report.stats.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

std::vector<SearchReport> sweep(const std::vector<LaurentParams>& params, EquationKind kind,
                                const SearchBox& box, unsigned threads) {
  if (params.empty()) throw PreconditionError("sweep needs at least one parameter set");
  validate(box);
  threads = resolve_threads(threads);
  std::vector<std::optional<SearchReport>> slots(params.size());
  // Split workers between parameter sets and x-stripes inside each search.
  const unsigned outer = std::min<unsigned>(threads, static_cast<unsigned>(params.size()));
  const unsigned inner = std::max(1U, threads / outer);
  parallel_for<int>(params.size(), outer, [&](std::size_t i, int&) {
    slots[i] = brute_force(params[i], kind, box, inner);
  });
  std::vector<SearchReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace laurent
