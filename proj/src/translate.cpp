#include "gplab/translate.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace gplab {

std::string TranslateWitness::str() const {
  std::string s = "N=" + std::to_string(n_mod) + " t=" + std::to_string(t) +
                  " (N,t)=" + std::to_string(g) + " K=" + std::to_string(k) + " F'={";
  for (std::size_t i = 0; i < f_prime.size(); ++i) s += (i ? "," : "") + std::to_string(f_prime[i]);
  s += "} f0=" + std::to_string(f0) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
       " c=" + std::to_string(c);
  return s;
}

Index translate_gcd(Index n_mod, Index t) { return t == 0 ? n_mod : gcd(n_mod, t); }

std::string check_translate_witness(const TranslateWitness& w) {
  if (w.f_prime.empty()) return "F' is empty";
  if (w.g != translate_gcd(w.n_mod, w.t) || w.k * w.g != w.n_mod) return "wrong (N,t) or K";
  Wide prod = 1;
  for (Index f : w.f_prime) {
    if (mod(f - w.f0, w.k) != 0) return "f=" + std::to_string(f) + " not congruent to f0 mod K";
    if (gcd(f, w.k) != 1) return "f=" + std::to_string(f) + " shares a factor with K";
    prod *= f;
  }
  if (prod != w.product) return "stored product differs";
  if (static_cast<Wide>(w.b) * prod - static_cast<Wide>(w.a) * w.k != w.t / w.g)
    return "b*prod(F') - a*K != t/(N,t)";
  if (w.b < 1 || w.c < 1) return "b and c must be positive";
  if (gcd(w.b, w.k) != 1) return "gcd(b, K) != 1";
  if (gcd(w.c, w.k) != 1) return "gcd(c, K) != 1";
  for (Index f : w.f_prime) {
    Wide m = static_cast<Wide>(f) * w.n_mod;
    Wide lhs = static_cast<Wide>(w.c) * w.g * f - static_cast<Wide>(w.a) * w.n_mod - w.t;
    if (mod(lhs, m) != 0) return "congruence fails at f=" + std::to_string(f);
  }
  return {};
}

TranslateWitness solve_translate_witness(Index n_mod, Index t, std::span<const Index> f) {
  if (n_mod < 1) throw DomainError("N must be positive");
  if (f.empty()) throw DomainError("F must be non-empty");
  TranslateWitness w;
  w.n_mod = n_mod;
  w.t = t;
  w.g = translate_gcd(n_mod, t);
  w.k = n_mod / w.g;
  const Index k = w.k;

  // largest residue class mod K, least residue on ties
  std::vector<Index> count(static_cast<std::size_t>(k));
  for (Index x : f) {
    if (x < 1) throw DomainError("F must consist of positive integers");
    if (gcd(x, k) != 1)
      throw DomainError("f=" + std::to_string(x) + " is not coprime to K=" + std::to_string(k));
    ++count[static_cast<std::size_t>(x % k)];
  }
  const auto best = static_cast<Index>(std::max_element(count.begin(), count.end()) - count.begin());
  for (Index x : f)
    if (x % k == best) w.f_prime.push_back(x);
  std::sort(w.f_prime.begin(), w.f_prime.end());
  w.f_prime.erase(std::unique(w.f_prime.begin(), w.f_prime.end()), w.f_prime.end());
  w.f0 = w.f_prime.front();

  Index prod = 1;
  for (Index x : w.f_prime) prod = checked_mul(prod, x);
  w.product = prod;

  // b * prod = t/g (mod K); least positive solution
  const Index tau = t / w.g;
  Index b = mulmod(mod(tau, k), modinv(mod(prod, k), k), k);
  if (b == 0) b = k;
  if (gcd(b, k) != 1)
    throw std::logic_error("Bezout coefficient b shares a factor with K; gcd(t/(N,t), K) != 1");
  Wide a_num = static_cast<Wide>(b) * prod - tau;
  if (a_num % k != 0) throw std::logic_error("Bezout equation has no integral a");
  Wide a = a_num / k;
  if (a > absolute_bound() || a < -absolute_bound()) throw OverflowError("a exceeds the absolute bound");
  w.a = static_cast<Index>(a);
  w.b = b;
  w.c = checked_mul(b, checked_pow(w.f0, static_cast<unsigned>(w.f_prime.size() - 1)));

  if (auto err = check_translate_witness(w); !err.empty())
    throw std::logic_error("translate witness failed verification: " + err);
  return w;
}

TranslateWitness solve_translate_witness(Index n_mod, Index t, const NatSet& f) {
  std::vector<Index> v = f.to_vector();
  return solve_translate_witness(n_mod, t, std::span<const Index>(v));
}

DensityTransfer verify_density_transfer(const NatSet& a, Index t, Index n_mod,
                                        std::span<const Index> f, Index search_bound) {
  if (search_bound < 0) throw DomainError("search_bound must be non-negative");
  DensityTransfer res;
  res.witness = solve_translate_witness(n_mod, t, f);
  const auto& w = res.witness;
  // A + t = {m : m - t in A}
  res.target = quotient(translate(a, -t), w.g);
  if (res.target.empty()) {
    res.ratio = Rational(0);
    res.diagnostic = "(A+t)/(N,t) is empty on the window";
    return res;
  }
  const Index fmax = *std::max_element(f.begin(), f.end());
  const auto fsize = static_cast<Index>(f.size());
  Index best_hits = -1;
  for (Index n = 0; n <= search_bound; ++n) {
    Index s = checked_add(checked_mul(w.k, n), w.c);
    Index top;
    if (!try_mul(s, fmax, top) || top > res.target.hi()) break;
    if (gcd(s, w.k) != 1) throw std::logic_error("dilation left S_K");
    Index hits = 0;
    for (Index x : f) hits += res.target.contains(s * x) ? 1 : 0;
    if (hits > best_hits) {
      best_hits = hits;
      res.dilation = s;
      res.n = n;
    }
    if (hits == fsize) break;
  }
  if (best_hits < 0) {
    res.ratio = Rational(0);
    res.diagnostic = "no dilation K*n+c keeps sF inside the window";
    return res;
  }
  res.ratio = Rational(best_hits, fsize);
  return res;
}

bool BoundReport::any_below() const noexcept {
  return std::any_of(rows.begin(), rows.end(), [](const BoundRow& r) { return r.below; });
}

namespace {

std::optional<GridSpec> shorter(const GridSpec& g) {
  switch (g.style) {
    case GridSpec::Style::Power:
      if (g.length > 1) return GridSpec::power(g.base, g.length - 1, g.scale);
      break;
    case GridSpec::Style::Prime:
      if (g.length > 1) return GridSpec::prime(g.primes, g.length - 1, g.scale);
      break;
    case GridSpec::Style::Explicit:
      break;
  }
  return std::nullopt;
}

}  // namespace

BoundReport iprstar_bound_check(const NatSet& a, unsigned r, Index n_mod, Index t_range,
                                Index search_bound) {
  if (n_mod < 1) throw DomainError("N must be positive");
  if (r < 1 || r > 28) throw DomainError("rank must lie in [1, 28]");
  if (t_range < 0) throw DomainError("t_range must be non-negative");
  BoundReport rep;
  rep.n_mod = n_mod;
  rep.r = r;
  const Index denom = checked_mul(Index{1} << (2 * r + 2), n_mod);
  for (Index t = -t_range; t <= t_range; ++t) {
    BoundRow row;
    row.t = t;
    row.g = translate_gcd(n_mod, t);
    row.k = n_mod / row.g;
    row.bound = Rational(row.g, denom);
    row.observed = Rational(1);
    const Index target_hi = (a.hi() + t) / row.g;
    if (target_hi >= 1) {
      for (auto grid : default_grid_family(CosetSpec::coprime(row.k), target_hi, 1)) {
        // c grows like f0^(|F'|-1), so the longest prefix of the grid whose
        // witness fits the bound and the window is used
        for (std::optional<GridSpec> g = grid; g; g = shorter(*g)) {
          std::optional<DensityTransfer> tr;
          try {
            tr = verify_density_transfer(a, t, n_mod, g->elements(), search_bound);
          } catch (const OverflowError&) {
            continue;
          }
          if (tr->dilation == 0) continue;
          if (++row.grids == 1 || tr->ratio < row.observed) {
            row.observed = tr->ratio;
            row.worst_grid = g->str();
            row.worst_dilation = tr->dilation;
          }
          break;
        }
      }
    }
    if (row.grids == 0) row.observed = Rational(0);
    row.below = row.observed < row.bound;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace gplab
