#include "gplab/patterns.hpp"

#include <optional>
#include <stdexcept>

namespace gplab {

std::vector<Index> GpWitness::elements() const {
  std::vector<Index> out;
  Index v = n;
  for (unsigned j = 1; j <= length; ++j) {
    v = checked_mul(v, m);
    out.push_back(v);
  }
  return out;
}

std::vector<Index> GeoArithWitness::elements() const {
  std::vector<Index> out;
  for (unsigned i = 1; i <= length; ++i) {
    Index base = checked_add(a, checked_mul(static_cast<Index>(i), d));
    Index v = c;
    for (unsigned j = 1; j <= length; ++j) {
      v = checked_mul(v, base);
      out.push_back(v);
    }
  }
  return out;
}

std::vector<Index> ApWitness::elements() const {
  std::vector<Index> out;
  for (unsigned i = 0; i < length; ++i) out.push_back(start + static_cast<Index>(i) * step);
  return out;
}

namespace {

template <class W>
const W& self_checked(const NatSet& a, const W& w, const char* what) {
  for (Index x : w.elements())
    if (!a.contains(x))
      throw std::logic_error(std::string(what) + " witness failed re-verification at " +
                             std::to_string(x));
  return w;
}

}  // namespace

std::optional<GpWitness> find_gp(const NatSet& a, unsigned length, Index m_bound) {
  if (length == 0) throw DomainError("progression length must be positive");
  for (Index m = 2; m <= m_bound; ++m) {
    Index top;
    if (!try_pow(m, length, top) || top > a.hi()) break;
    for (Index n = 1; n <= a.hi() / top; ++n) {
      Index v = n;
      bool ok = true;
      for (unsigned j = 1; j <= length && ok; ++j) {
        v *= m;
        ok = a.contains(v);
      }
      if (ok) return self_checked(a, GpWitness{n, m, length}, "GP");
    }
  }
  return std::nullopt;
}

GeoArithResult find_geo_arith(const NatSet& a, unsigned length, const GeoArithBounds& bounds) {
  if (length == 0) throw DomainError("configuration length must be positive");
  GeoArithResult res;
  const Index hi = a.hi();
  // largest element c*(av + length*d)^length, or nullopt past the absolute bound
  auto top_of = [&](Index av, Index c, Index d) -> std::optional<Index> {
    Index base_top, top;
    if (!try_mul(static_cast<Index>(length), d, base_top) ||
        !try_pow(base_top + av, length, top) || !try_mul(top, c, top))
      return std::nullopt;
    return top;
  };
  // an overflowing candidate can only lie in the window when the bound is below hi
  const bool overflow_hides = absolute_bound() < hi;
  auto fits = [&](Index av, Index c, Index d) {
    auto top = top_of(av, c, d);
    if (!top && overflow_hides) res.truncated = true;
    return top && *top <= hi;
  };
  for (Index av = 1; av <= bounds.a_max; ++av) {
    for (Index c = 1; c <= bounds.c_max; ++c) {
      bool any_d = false;
      for (Index d = 1; d <= bounds.d_max; ++d) {
        if (!fits(av, c, d)) break;  // increasing in d
        any_d = true;
        bool ok = true;
        for (unsigned i = 1; i <= length && ok; ++i) {
          Index base = av + static_cast<Index>(i) * d;
          Index v = c;
          for (unsigned j = 1; j <= length && ok; ++j) {
            v *= base;
            ok = a.contains(v);
          }
        }
        if (ok) {
          res.witness = self_checked(a, GeoArithWitness{av, c, d, length}, "geo-arithmetic");
          return res;
        }
      }
      if (!any_d) break;  // c*(av+length)^length already too large; larger c too
    }
  }
  // the top element is increasing in each parameter, so some in-window
  // candidate lies outside the caps iff one of these corners fits
  const bool capped = fits(bounds.a_max + 1, 1, 1) || fits(1, bounds.c_max + 1, 1) ||
                      fits(1, 1, bounds.d_max + 1);
  res.truncated = res.truncated || capped;
  return res;
}

std::optional<ApWitness> ap_search(const NatSet& e, unsigned length) {
  std::optional<ApWitness> found;
  for_each_ap(e, length, [&](const ApWitness& w) {
    found = w;
    return true;
  });
  if (found) self_checked(e, *found, "AP");
  return found;
}

GpDensityResult gp_via_density(const NatSet& a, Index m, unsigned big_l, const Rational& eps,
                               unsigned length, Index s_bound) {
  if (eps <= Rational(0) || eps > Rational(1)) throw DomainError("eps must lie in (0, 1]");
  if (m < 2) throw DomainError("grid base must be at least 2");
  if (big_l < 1 || length < 1 || s_bound < 1)
    throw DomainError("grid length, progression length and s_bound must be positive");
  Index top;
  if (!try_pow(m, big_l, top) || !try_mul(top, s_bound, top))
    throw DomainError("m^L * s_bound exceeds the absolute bound");

  GpDensityResult res;
  for (Index s = 1; s <= s_bound; ++s) {
    NatSet::Builder eb(big_l);
    Index v = s;
    Index hits = 0;
    for (unsigned e = 1; e <= big_l; ++e) {
      v *= m;
      if (a.contains(v)) {
        eb.add(e);
        ++hits;
      }
    }
    if (static_cast<Wide>(hits) * eps.den() < static_cast<Wide>(eps.num()) * big_l) continue;
    NatSet exps = std::move(eb).finish();
    for_each_ap(exps, length, [&](const ApWitness& ap) {
      // n = s * m^(e0 - delta) must be a positive integer
      Index e0 = ap.start, delta = ap.step;
      Index n = s;
      if (e0 >= delta) {
        n = checked_mul(s, checked_pow(m, static_cast<unsigned>(e0 - delta)));
      } else {
        Index div = checked_pow(m, static_cast<unsigned>(delta - e0));
        if (s % div != 0) return false;
        n = s / div;
      }
      GpWitness w{n, checked_pow(m, static_cast<unsigned>(delta)), length};
      self_checked(a, w, "GP-from-density");
      res.witness = w;
      res.dilation = s;
      res.exponents = exps.to_vector();
      res.exponent_ap = ap;
      return true;
    });
    if (res.witness) return res;
  }
  return res;
}

}  // namespace gplab
