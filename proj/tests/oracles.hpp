#pragma once

// Brute-force reference implementations used as test oracles. None of them
// calls into the library's search code: each works from plain std::set
// membership or from first principles.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gplab/natset.hpp"
#include "gplab/translate.hpp"

namespace oracle {

using gplab::Index;
using BigInt = boost::multiprecision::cpp_int;

inline std::set<Index> members(const gplab::NatSet& a) {
  std::set<Index> s;
  for (Index m : a) s.insert(m);
  return s;
}

struct Gp {
  Index n = 0, m = 0;
};

// Least (m, n) with {n m, ..., n m^len} inside s and the window.
inline std::optional<Gp> gp(const std::set<Index>& s, Index hi, unsigned len, Index m_bound) {
  for (Index m = 2; m <= m_bound; ++m)
    for (Index n = 1; n <= hi; ++n) {
      BigInt v = n;
      bool ok = true;
      for (unsigned e = 1; e <= len && ok; ++e) {
        v *= m;
        ok = v <= hi && s.count(static_cast<Index>(v));
      }
      if (ok) return Gp{n, m};
    }
  return std::nullopt;
}

struct Ap {
  Index start = 0, step = 0;
};

inline std::optional<Ap> ap(const std::set<Index>& s, Index hi, unsigned len) {
  for (Index start : s)
    for (Index step = 1; start + (len - 1) * step <= hi; ++step) {
      bool ok = true;
      for (unsigned i = 0; i < len && ok; ++i) ok = s.count(start + i * step) > 0;
      if (ok) return Ap{start, step};
    }
  return std::nullopt;
}

struct GeoArith {
  Index a = 0, c = 0, d = 0;
};

// Least (a, c, d) with {c (a + i d)^j : 1 <= i, j <= len} inside s.
inline std::optional<GeoArith> geo_arith(const std::set<Index>& s, Index hi, unsigned len, Index bound) {
  for (Index a = 1; a <= bound; ++a)
    for (Index c = 1; c <= bound; ++c)
      for (Index d = 1; d <= bound; ++d) {
        bool ok = true;
        for (unsigned i = 1; i <= len && ok; ++i) {
          BigInt v = c;
          for (unsigned j = 1; j <= len && ok; ++j) {
            v *= a + static_cast<Index>(i) * d;
            ok = v <= hi && s.count(static_cast<Index>(v));
          }
        }
        if (ok) return GeoArith{a, c, d};
      }
  return std::nullopt;
}

inline std::set<Index> fs(const std::vector<Index>& gens) {
  std::set<Index> out;
  const std::size_t r = gens.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << r); ++mask) {
    Index sum = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) sum += gens[i];
    out.insert(sum);
  }
  return out;
}

// Visits non-decreasing r-tuples with entries <= bound in lexicographic order
// until visit returns true.
template <class Visit>
bool each_tuple(unsigned r, Index bound, Visit&& visit) {
  std::vector<Index> t(r, 1);
  if (bound < 1) return false;
  while (true) {
    if (visit(t)) return true;
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == bound) --i;
    if (i < 0) return false;
    Index v = ++t[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j) t[j] = v;
  }
}

// Least tuple whose finite sums lie inside s (and the window).
inline std::optional<std::vector<Index>> ip_r(const std::set<Index>& s, Index hi, unsigned r,
                                              Index gen_bound) {
  std::optional<std::vector<Index>> out;
  each_tuple(r, std::min(gen_bound, hi), [&](const std::vector<Index>& t) {
    for (Index v : fs(t))
      if (v > hi || !s.count(v)) return false;
    out = t;
    return true;
  });
  return out;
}

// Least tuple whose finite sums lie inside [1, hi] and all miss s.
inline std::optional<std::vector<Index>> ip_r_star_violator(const std::set<Index>& s, Index hi,
                                                            unsigned r) {
  std::optional<std::vector<Index>> out;
  each_tuple(r, hi, [&](const std::vector<Index>& t) {
    for (Index v : fs(t))
      if (v > hi || s.count(v)) return false;
    out = t;
    return true;
  });
  return out;
}

// Components of T^n on Z_k by breadth-first orbit search, numbered so that the
// component of 0 is 0 and T maps component j to j + 1.
inline std::vector<Index> rotation_components(Index k, Index n) {
  std::vector<Index> comp(static_cast<std::size_t>(k), -1);
  Index next = 0;
  for (Index start = 0; start < k; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<Index> frontier{start};
    comp[static_cast<std::size_t>(start)] = next;
    while (!frontier.empty()) {
      Index x = frontier.back();
      frontier.pop_back();
      Index y = (x + n) % k;
      if (comp[static_cast<std::size_t>(y)] < 0) {
        comp[static_cast<std::size_t>(y)] = next;
        frontier.push_back(y);
      }
    }
    ++next;
  }
  return comp;
}

// Recomputes every identity of a translate witness in arbitrary precision.
inline std::string check_witness(const gplab::TranslateWitness& w, const std::vector<Index>& f) {
  const BigInt n = w.n_mod, t = w.t;
  Index g = t == 0 ? w.n_mod : std::gcd(w.n_mod, w.t < 0 ? -w.t : w.t);
  if (w.g != g) return "gcd";
  if (w.k * g != w.n_mod) return "K";
  const Index k = w.k;
  // F' is the largest class of F mod K, least residue on ties
  std::map<Index, std::vector<Index>> classes;
  for (Index x : f) {
    if (std::gcd(x, k) != 1) return "F not coprime to K";
    classes[x % k].push_back(x);
  }
  std::vector<Index> best;
  for (auto& [r, members] : classes)
    if (members.size() > best.size()) best = members;
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  if (best != w.f_prime) return "F'";
  if (w.f0 != best.front()) return "f0";
  BigInt prod = 1;
  for (Index x : best) prod *= x;
  if (prod != w.product) return "product";
  if (w.b < 1 || w.c < 1) return "b, c positive";
  if (BigInt(w.b) * prod - BigInt(w.a) * k != t / g) return "Bezout identity";
  if (std::gcd(w.c, k) != 1) return "gcd(c, K)";
  BigInt c = w.b;
  for (std::size_t i = 1; i < best.size(); ++i) c *= w.f0;
  if (c != w.c) return "c = b f0^(|F'|-1)";
  for (Index x : best) {
    BigInt lhs = BigInt(w.c) * g * x - BigInt(w.a) * n - t;
    BigInt m = BigInt(x) * n;
    if (lhs % m != 0) return "congruence at f = " + std::to_string(x);
  }
  return {};
}

// Forward closure of the diagonal of Z_k^l under x -> x + m, and the orbit
// closures of Delta(X_{M,j}), by breadth-first search.
struct DiagonalOracle {
  std::set<std::vector<Index>> closure;
  std::vector<std::set<std::vector<Index>>> components;
};

inline DiagonalOracle diagonal_oracle(Index k, const std::vector<Index>& m) {
  auto step = [&](std::vector<Index> x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + m[i]) % k;
    return x;
  };
  auto closure_from = [&](const std::vector<std::vector<Index>>& seeds) {
    std::set<std::vector<Index>> seen(seeds.begin(), seeds.end());
    std::deque<std::vector<Index>> q(seeds.begin(), seeds.end());
    while (!q.empty()) {
      auto y = step(q.front());
      q.pop_front();
      if (seen.insert(y).second) q.push_back(y);
    }
    return seen;
  };
  Index big_m = 1;
  for (Index v : m) big_m = std::lcm(big_m, v);
  const Index d = std::gcd(big_m, k);
  DiagonalOracle o;
  std::vector<std::vector<Index>> diag;
  for (Index x = 0; x < k; ++x) diag.emplace_back(m.size(), x);
  o.closure = closure_from(diag);
  for (Index j = 0; j < d; ++j) {
    std::vector<std::vector<Index>> seeds;
    for (Index x = j; x < k; x += d) seeds.emplace_back(m.size(), x);
    o.components.push_back(closure_from(seeds));
  }
  return o;
}

}  // namespace oracle
