#include "gplab/density.hpp"

#include <algorithm>

namespace gplab {

std::optional<Index> gap_syndeticity(const NatSet& a) {
  if (a.empty()) return std::nullopt;
  Index prev = 0, gap = 0;
  for (Index m : a) {
    gap = std::max(gap, m - prev);
    prev = m;
  }
  return std::max(gap, a.hi() + 1 - prev);
}

namespace {

// Division-free a mod d for a, d < 2^32 (Lemire, Kaser & Kurz).
struct FastMod {
  explicit FastMod(std::uint64_t d) : d(d), m(~std::uint64_t{0} / d + 1) {}
  std::uint64_t operator()(std::uint64_t a) const noexcept {
    if (a >> 32) return a % d;
    std::uint64_t low = m * a;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(low) * d) >> 64);
  }
  std::uint64_t d;
  std::uint64_t m;
};

}  // namespace

std::optional<Index> decide_thick_dilation(const PeriodicSet& p,
                                           std::span<const Index> f,
                                           const CosetSpec& s) {
  if (f.empty()) throw DomainError("test set F must be non-empty");
  const Index q = p.modulus();
  const Index n = s.dilation();

  // Distinct residues of F modulo q; s*f mod q only depends on them.
  thread_local std::vector<std::uint64_t> seen;
  thread_local std::vector<Index> residues;
  seen.assign(static_cast<std::size_t>((q + 63) / 64), 0);
  residues.clear();
  Index max_f = 0;
  FastMod fm(static_cast<std::uint64_t>(q));
  for (Index x : f) {
    if (x < 1) throw DomainError("test set members must be positive");
    max_f = std::max(max_f, x);
    auto r = fm(static_cast<std::uint64_t>(x));
    auto& word = seen[r >> 6];
    auto bit = std::uint64_t{1} << (r & 63);
    if (!(word & bit)) {
      word |= bit;
      residues.push_back(static_cast<Index>(r));
    }
  }

  // u ranges over one period of both the residue of n*u mod q and the
  // semigroup membership of u (which depends on u mod N).
  const Index period = lcm_checked(q, s.modulus());
  for (Index u = 1; u <= period; ++u) {
    if (!s.in_semigroup(u)) continue;
    Index dil = checked_mul(n, u);
    Index top;
    if (!try_mul(dil, max_f, top))
      throw OverflowError("dilation " + std::to_string(dil) +
                          " times max(F) exceeds the absolute bound");
    Index sigma = mod(dil, q);
    bool ok = true;
    for (Index r : residues) {
      if (!p.has_residue(mulmod(sigma, r, q))) {
        ok = false;
        break;
      }
    }
    if (ok) return dil;
  }
  return std::nullopt;
}

GridSpec GridSpec::power(Index base, unsigned length, Index scale) {
  if (base < 2 || length < 1 || scale < 1)
    throw DomainError("power grid needs base >= 2, length >= 1, scale >= 1");
  GridSpec g;
  g.style = Style::Power;
  g.base = base;
  g.length = length;
  g.scale = scale;
  return g;
}

GridSpec GridSpec::prime(std::vector<Index> primes, unsigned max_exponent, Index scale) {
  if (primes.empty() || max_exponent < 1 || scale < 1)
    throw DomainError("prime grid needs primes, max exponent >= 1, scale >= 1");
  GridSpec g;
  g.style = Style::Prime;
  g.primes = std::move(primes);
  g.length = max_exponent;
  g.scale = scale;
  return g;
}

GridSpec GridSpec::explicit_elements(std::vector<Index> elements) {
  if (elements.empty()) throw DomainError("explicit grid must be non-empty");
  GridSpec g;
  g.style = Style::Explicit;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.front() < 1) throw DomainError("grid members must be positive");
  g.explicit_set = std::move(elements);
  return g;
}

std::vector<Index> GridSpec::elements() const {
  std::vector<Index> out;
  switch (style) {
    case Style::Power: {
      Index v = scale;
      for (unsigned e = 1; e <= length; ++e) {
        v = checked_mul(v, base);
        out.push_back(v);
      }
      break;
    }
    case Style::Prime: {
      std::vector<Index> cur{scale};
      for (Index prime : primes) {
        std::vector<Index> next;
        for (Index c : cur) {
          Index v = c;
          for (unsigned e = 1; e <= length; ++e) {
            v = checked_mul(v, prime);
            next.push_back(v);
          }
        }
        cur = std::move(next);
      }
      out = std::move(cur);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
    }
    case Style::Explicit: out = explicit_set; break;
  }
  return out;
}

std::string GridSpec::str() const {
  std::string s;
  switch (style) {
    case Style::Power:
      s = "power(base=" + std::to_string(base) + ",L=" + std::to_string(length) + ")";
      break;
    case Style::Prime: {
      s = "prime(p=";
      for (std::size_t i = 0; i < primes.size(); ++i)
        s += (i ? "," : "") + std::to_string(primes[i]);
      s += ";e<=" + std::to_string(length) + ")";
      break;
    }
    case Style::Explicit: {
      s = "explicit{";
      for (std::size_t i = 0; i < explicit_set.size(); ++i)
        s += (i ? "," : "") + std::to_string(explicit_set[i]);
      s += "}";
      break;
    }
  }
  if (scale != 1) s = std::to_string(scale) + "*" + s;
  return s;
}

namespace {

bool is_prime(Index n) {
  if (n < 2) return false;
  for (Index d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Index> semigroup_primes(const CosetSpec& coset, std::size_t count) {
  std::vector<Index> out;
  for (Index p = 2; out.size() < count && p < 100000; ++p)
    if (is_prime(p) && coset.in_semigroup(p)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<GridSpec> default_grid_family(const CosetSpec& coset, Index hi,
                                          Index s_bound) {
  std::vector<GridSpec> out;
  const Index scale = coset.dilation();
  Index room = hi / std::max<Index>(1, s_bound);
  for (Index base : semigroup_primes(coset, 3)) {
    unsigned length = 0;
    Index v = scale;
    while (try_mul(v, base, v) && v <= room) ++length;
    if (length >= 1) out.push_back(GridSpec::power(base, length, scale));
  }
  auto primes = semigroup_primes(coset, 4);
  for (std::size_t k = 1; k <= primes.size(); ++k) {
    std::vector<Index> ps(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(k));
    Index top = scale;
    bool fits = true;
    for (Index prime : ps) {
      Index pk;
      fits = fits && try_pow(prime, static_cast<unsigned>(k), pk) && try_mul(top, pk, top);
    }
    if (fits && top <= room) out.push_back(GridSpec::prime(ps, static_cast<unsigned>(k), scale));
  }
  return out;
}

DensityProfile density_profile(const NatSet& a, const CosetSpec& coset,
                               const std::vector<GridSpec>& grids, Index s_bound) {
  if (s_bound < 1) throw DomainError("s_bound must be positive");
  DensityProfile prof;
  prof.coset = coset;
  prof.s_bound = s_bound;
  prof.window = a.window();
  prof.summary = Rational(1);
  for (const GridSpec& g : grids) {
    DensityEntry e;
    e.grid = g;
    e.test_set = g.elements();
    for (Index x : e.test_set) {
      if (!coset.in_coset(x))
        throw DomainError("grid element " + std::to_string(x) + " of " + g.str() +
                          " is not in the coset " + coset.str());
      Index top;
      if (!try_mul(x, s_bound, top) || top > a.hi())
        throw DomainError("grid element " + std::to_string(x) + " times s_bound " +
                          std::to_string(s_bound) + " leaves the window");
    }
    const auto size = static_cast<Index>(e.test_set.size());
    Index best = -1;
    for (Index s = 1; s <= s_bound; ++s) {
      if (!coset.in_semigroup(s)) continue;
      Index hits = 0;
      for (Index x : e.test_set) hits += a.contains(s * x) ? 1 : 0;
      if (hits > best) {
        best = hits;
        e.best_dilation = s;
        if (hits == size) break;
      }
    }
    e.ratio = Rational(std::max<Index>(best, 0), size);
    prof.summary = std::min(prof.summary, e.ratio);
    prof.entries.push_back(std::move(e));
  }
  return prof;
}

std::optional<Index> pigeonhole_select(std::span<const NatSet> sets, const Rational& eta) {
  if (eta < Rational(0) || eta >= Rational(1))
    throw DomainError("eta must lie in [0, 1)");
  if (sets.empty()) return std::nullopt;
  const Index hi = sets.front().hi();
  for (const NatSet& s : sets)
    if (s.hi() != hi) throw DomainError("sets must share one window");
  std::vector<Index> count(static_cast<std::size_t>(hi) + 1, 0);
  for (const NatSet& s : sets)
    for (Index m : s) ++count[static_cast<std::size_t>(m)];
  const Wide k = static_cast<Wide>(sets.size());
  for (Index m = 1; m <= hi; ++m)
    if (static_cast<Wide>(count[static_cast<std::size_t>(m)]) * eta.den() > k * eta.num())
      return m;
  return std::nullopt;
}

}  // namespace gplab
