#include "gplab/dynsim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "gplab/density.hpp"

namespace gplab {

// ---- specs ----------------------------------------------------------------

SystemSpec SystemSpec::finite_rotation(Index k) {
  if (k < 1) throw DomainError("finite rotation needs k >= 1");
  FactorSpec f;
  f.kind = FactorSpec::Kind::Finite;
  f.k = k;
  return {{f}};
}

SystemSpec SystemSpec::torus_rotation(const Approximant& alpha) {
  FactorSpec f;
  f.kind = FactorSpec::Kind::Torus;
  f.alpha = alpha;
  return {{f}};
}

SystemSpec SystemSpec::skew_product(const Approximant& alpha) {
  FactorSpec f;
  f.kind = FactorSpec::Kind::Skew;
  f.alpha = alpha;
  return {{f}};
}

SystemSpec SystemSpec::product(const std::vector<SystemSpec>& parts) {
  SystemSpec s;
  for (const auto& p : parts) s.factors.insert(s.factors.end(), p.factors.begin(), p.factors.end());
  if (s.factors.empty()) throw DomainError("product of no systems");
  return s;
}

bool SystemSpec::all_finite() const noexcept {
  return std::all_of(factors.begin(), factors.end(),
                     [](const FactorSpec& f) { return f.kind == FactorSpec::Kind::Finite; });
}

Index SystemSpec::finite_state_count() const {
  Index n = 1;
  for (const auto& f : factors) {
    if (f.kind != FactorSpec::Kind::Finite) throw DomainError("system has a continuous factor");
    n = checked_mul(n, f.k);
  }
  return n;
}

std::string SystemSpec::str() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    const auto& f = factors[i];
    switch (f.kind) {
      case FactorSpec::Kind::Finite: s += "rot k=" + std::to_string(f.k); break;
      case FactorSpec::Kind::Torus: s += "torus alpha=" + f.alpha.str(); break;
      case FactorSpec::Kind::Skew: s += "skew alpha=" + f.alpha.str(); break;
    }
  }
  return s;
}

PointSpec PointSpec::finite(Index state) { return {{FactorPoint{state, {}, {}}}}; }
PointSpec PointSpec::torus(const Rational& x) { return {{FactorPoint{0, x, {}}}}; }
PointSpec PointSpec::skew(const Rational& x, const Rational& y) {
  return {{FactorPoint{0, x, y}}};
}
PointSpec PointSpec::product(const std::vector<PointSpec>& parts) {
  PointSpec p;
  for (const auto& q : parts) p.coords.insert(p.coords.end(), q.coords.begin(), q.coords.end());
  return p;
}

std::string PointSpec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += "; ";
    const auto& c = coords[i];
    s += std::to_string(c.state) + "|" + c.x.str() + "|" + c.y.str();
  }
  return s + ")";
}

OpenSetSpec OpenSetSpec::states(std::vector<Index> states) {
  FactorOpenSet f;
  f.states = std::move(states);
  return {{f}};
}
OpenSetSpec OpenSetSpec::arcs(std::vector<Arc> arcs) {
  FactorOpenSet f;
  f.x_arcs = std::move(arcs);
  return {{f}};
}
OpenSetSpec OpenSetSpec::box(std::vector<Arc> x_arcs, std::vector<Arc> y_arcs) {
  FactorOpenSet f;
  f.x_arcs = std::move(x_arcs);
  f.y_arcs = std::move(y_arcs);
  return {{f}};
}
OpenSetSpec OpenSetSpec::product(const std::vector<OpenSetSpec>& parts) {
  OpenSetSpec u;
  for (const auto& p : parts) u.factors.insert(u.factors.end(), p.factors.begin(), p.factors.end());
  return u;
}

std::string OpenSetSpec::str() const {
  auto arcs = [](const std::vector<Arc>& v) {
    std::string s;
    for (const auto& a : v) s += "(" + a.lo.str() + "," + a.hi.str() + ")";
    return s;
  };
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    const auto& f = factors[i];
    if (!f.states.empty()) {
      s += "{";
      for (std::size_t j = 0; j < f.states.size(); ++j)
        s += (j ? "," : "") + std::to_string(f.states[j]);
      s += "}";
    } else {
      s += arcs(f.x_arcs);
      if (!f.y_arcs.empty()) s += " x " + arcs(f.y_arcs);
    }
  }
  return s;
}

// ---- exact evaluation -----------------------------------------------------

namespace {

bool unit_interval(const Rational& r) { return r >= Rational(0) && r < Rational(1); }

void validate_point(const SystemSpec& sys, const PointSpec& x) {
  if (x.coords.size() != sys.factors.size())
    throw DomainError("point has " + std::to_string(x.coords.size()) + " coordinates, system has " +
                      std::to_string(sys.factors.size()) + " factors");
  for (std::size_t i = 0; i < sys.factors.size(); ++i) {
    const auto& f = sys.factors[i];
    const auto& c = x.coords[i];
    if (f.kind == FactorSpec::Kind::Finite) {
      if (c.state < 0 || c.state >= f.k) throw DomainError("state outside Z_k");
    } else {
      if (!unit_interval(c.x)) throw DomainError("torus coordinate outside [0,1)");
      if (f.kind == FactorSpec::Kind::Skew && !unit_interval(c.y))
        throw DomainError("torus coordinate outside [0,1)");
    }
  }
}

void validate_arcs(const std::vector<Arc>& arcs) {
  if (arcs.empty()) throw DomainError("empty open set");
  for (const auto& a : arcs) {
    if (a.full()) continue;
    if (!unit_interval(a.lo) || a.hi <= Rational(0) || a.hi > Rational(1) || a.lo == a.hi)
      throw DomainError("arc endpoints must satisfy 0 <= lo < 1, 0 < hi <= 1, lo != hi");
  }
}

void validate_open_set(const SystemSpec& sys, const OpenSetSpec& u) {
  if (u.factors.size() != sys.factors.size())
    throw DomainError("open set does not match the system's factors");
  for (std::size_t i = 0; i < sys.factors.size(); ++i) {
    const auto& f = sys.factors[i];
    const auto& s = u.factors[i];
    if (f.kind == FactorSpec::Kind::Finite) {
      if (s.states.empty()) throw DomainError("empty open set");
      for (Index st : s.states)
        if (st < 0 || st >= f.k) throw DomainError("open set state outside Z_k");
    } else {
      validate_arcs(s.x_arcs);
      if (f.kind == FactorSpec::Kind::Skew) validate_arcs(s.y_arcs);
    }
  }
}

// v(n) = (c0 + c1*n + c2*n^2) mod den, the numerator of a circle coordinate.
struct CirclePoly {
  Index den = 1;
  Index c0 = 0, c1 = 0, c2 = 0;

  Index at(Index n) const noexcept {
    Index nm = mod(n, den);
    Index v = c0;
    v = mod(static_cast<Wide>(v) + mulmod(c1, nm, den), static_cast<Wide>(den));
    if (c2) v = mod(static_cast<Wide>(v) + mulmod(c2, mulmod(nm, nm, den), den),
                    static_cast<Wide>(den));
    return v;
  }
};

// numerator of r over den, where den is a multiple of r.den()
Index scaled(const Rational& r, Index den) { return mulmod(r.num(), den / r.den(), den); }

CirclePoly x_poly(const FactorSpec& f, const Rational& x) {
  CirclePoly p;
  p.den = lcm_checked(x.den(), f.alpha.den);
  p.c0 = scaled(x, p.den);
  p.c1 = scaled(Rational(f.alpha.num, f.alpha.den), p.den);
  return p;
}

CirclePoly y_poly(const FactorSpec& f, const Rational& x, const Rational& y) {
  CirclePoly p;
  p.den = lcm_checked(lcm_checked(x.den(), y.den()), f.alpha.den);
  p.c0 = scaled(y, p.den);
  p.c1 = mulmod(2, scaled(x, p.den), p.den);
  p.c2 = scaled(Rational(f.alpha.num, f.alpha.den), p.den);
  return p;
}

}  // namespace

ArcHit arc_position(Wide v, Wide den, const std::vector<Arc>& arcs, long double tol, bool& in) {
  in = false;
  bool near = false;
  const bool narrow = den <= std::numeric_limits<Index>::max();
  auto cmp = [&](const Rational& e) {
    if (narrow) {
      Wide l = v * e.den();
      Wide r = static_cast<Wide>(e.num()) * den;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    return compare_fractions(v, den, e.num(), e.den());
  };
  const long double x = static_cast<long double>(v) / static_cast<long double>(den);
  auto dist = [&](const Rational& e) {
    long double d = std::fabs(x - e.to_long_double());
    return std::min(d, 1.0L - d);
  };
  for (const auto& a : arcs) {
    if (a.full()) {
      in = true;
      continue;
    }
    bool inside = a.lo < a.hi ? (cmp(a.lo) > 0 && cmp(a.hi) < 0) : (cmp(a.lo) > 0 || cmp(a.hi) < 0);
    in = in || inside;
    near = near || dist(a.lo) < tol || dist(a.hi) < tol;
  }
  if (near) return ArcHit::Near;
  return in ? ArcHit::In : ArcHit::Out;
}

namespace {

// Membership of T^n x in U for all n, one factor at a time.
class Evaluator {
 public:
  Evaluator(const SystemSpec& sys, const PointSpec& x, const OpenSetSpec& u, EvalOptions opt)
      : sys_(sys), u_(u), opt_(opt) {
    validate_point(sys, x);
    validate_open_set(sys, u);
    for (std::size_t i = 0; i < sys.factors.size(); ++i) {
      const auto& f = sys.factors[i];
      Factor fe;
      if (f.kind == FactorSpec::Kind::Finite) {
        fe.state = x.coords[i].state;
        fe.member.assign(static_cast<std::size_t>(f.k), false);
        for (Index s : u.factors[i].states) fe.member[static_cast<std::size_t>(s)] = true;
      } else {
        fe.xp = x_poly(f, x.coords[i].x);
        if (f.kind == FactorSpec::Kind::Skew) fe.yp = y_poly(f, x.coords[i].x, x.coords[i].y);
      }
      factors_.push_back(std::move(fe));
    }
  }

  // Exact membership on the approximants; `ambiguous` set when some factor
  // sits within the margin of its boundary and no other factor decides.
  bool member(Index n, bool& ambiguous) const {
    bool all_in = true;
    bool near = false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const auto& f = sys_.factors[i];
      const auto& fe = factors_[i];
      if (f.kind == FactorSpec::Kind::Finite) {
        if (!fe.member[static_cast<std::size_t>(mod(fe.state + mod(n, f.k), f.k))]) {
          ambiguous = false;
          return false;
        }
        continue;
      }
      long double nl = static_cast<long double>(n);
      long double tol = opt_.boundary_margin + nl * f.alpha.precision;
      bool in = false;
      ArcHit h = arc_position(fe.xp.at(n), fe.xp.den, u_.factors[i].x_arcs, tol, in);
      if (h == ArcHit::Out) {
        ambiguous = false;
        return false;
      }
      near = near || h == ArcHit::Near;
      all_in = all_in && in;
      if (f.kind == FactorSpec::Kind::Skew) {
        long double tol_y = opt_.boundary_margin + nl * nl * f.alpha.precision;
        h = arc_position(fe.yp.at(n), fe.yp.den, u_.factors[i].y_arcs, tol_y, in);
        if (h == ArcHit::Out) {
          ambiguous = false;
          return false;
        }
        near = near || h == ArcHit::Near;
        all_in = all_in && in;
      }
    }
    ambiguous = near;
    return all_in;
  }

 private:
  struct Factor {
    Index state = 0;
    std::vector<bool> member;
    CirclePoly xp, yp;
  };
  const SystemSpec& sys_;
  const OpenSetSpec& u_;
  EvalOptions opt_;
  std::vector<Factor> factors_;
};

}  // namespace

ReturnSet return_set(const SystemSpec& sys, const PointSpec& x, const OpenSetSpec& u, Window w,
                     Index power, const EvalOptions& opt) {
  if (power < 1) throw DomainError("power must be positive");
  if (w.hi < 0) throw DomainError("negative window");
  checked_mul(power, std::max<Index>(w.hi, 1));
  Evaluator ev(sys, x, u, opt);
  ReturnSet rs;
  NatSet::Builder b(w.hi);
  for (Index n = 1; n <= w.hi; ++n) {
    bool amb = false;
    if (ev.member(n * power, amb)) b.add(n);
    if (amb) rs.ambiguous.push_back(n);
  }
  rs.set = std::move(b).finish();
  return rs;
}

PointSpec advance(const SystemSpec& sys, const PointSpec& x, Index n) {
  validate_point(sys, x);
  PointSpec out = x;
  for (std::size_t i = 0; i < sys.factors.size(); ++i) {
    const auto& f = sys.factors[i];
    auto& c = out.coords[i];
    if (f.kind == FactorSpec::Kind::Finite) {
      c.state = mod(c.state + mod(n, f.k), f.k);
      continue;
    }
    CirclePoly xp = x_poly(f, x.coords[i].x);
    c.x = Rational(xp.at(n), xp.den);
    if (f.kind == FactorSpec::Kind::Skew) {
      CirclePoly yp = y_poly(f, x.coords[i].x, x.coords[i].y);
      c.y = Rational(yp.at(n), yp.den);
    }
  }
  return out;
}

// ---- Kronecker components -------------------------------------------------

namespace {

// Combined period of the finite factors, after checking the product is minimal.
Index minimal_finite_period(const SystemSpec& sys) {
  Index period = 1;
  int continuous = 0;
  for (const auto& f : sys.factors) {
    if (f.kind == FactorSpec::Kind::Finite) {
      if (f.k < 1) throw DomainError("finite rotation needs k >= 1");
      if (gcd(period, f.k) != 1)
        throw DomainError("finite factors with non-coprime sizes: product is not minimal");
      period = checked_mul(period, f.k);
    } else {
      if (!f.alpha.irrational)
        throw DomainError("rotation number not declared irrational: minimality not certified");
      if (++continuous > 1)
        throw DomainError("more than one torus factor: minimality not certified");
    }
  }
  return period;
}

}  // namespace

Index ComponentDecomposition::component_of(const PointSpec& x) const {
  // CRT time of the finite coordinates; continuous coordinates do not matter
  // because those factors are totally minimal.
  Index t = 0, m = 1;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) {
    Index k = factor_sizes[i];
    if (k == 0) continue;
    Index s = x.coords.at(i).state;
    // t' = t + m*j with t' = s mod k
    Index j = mulmod(mod(s - t, k), modinv(mod(m, k), k), k);
    t += m * j;
    m *= k;
  }
  return mod(t, d);
}

ComponentDecomposition kronecker_components(const SystemSpec& sys, Index n) {
  if (n < 1) throw DomainError("step n must be positive");
  ComponentDecomposition cd;
  cd.n = n;
  cd.finite_period = minimal_finite_period(sys);
  cd.d = gcd(n, cd.finite_period);
  for (const auto& f : sys.factors)
    cd.factor_sizes.push_back(f.kind == FactorSpec::Kind::Finite ? f.k : 0);
  if (sys.all_finite()) {
    cd.labels.resize(static_cast<std::size_t>(cd.finite_period));
    for (Index t = 0; t < cd.finite_period; ++t) cd.labels[static_cast<std::size_t>(t)] = t % cd.d;
  }
  return cd;
}

// ---- orbit density --------------------------------------------------------

namespace {

// Whether the orbit values (numerators over den) leave no circle gap of
// length >= 2*eps. Ties within `slack` of the threshold are inconclusive.
Verdict circle_gaps_dense(std::vector<Index>& vals, Index den, const Rational& eps,
                          long double slack) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  Index gap = vals.front() + den - vals.back();
  for (std::size_t i = 1; i < vals.size(); ++i) gap = std::max(gap, vals[i] - vals[i - 1]);
  // gap/den < 2 eps  <=>  gap * eps.den < 2 * eps.num * den
  Wide l = static_cast<Wide>(gap) * eps.den();
  Wide r = static_cast<Wide>(2) * eps.num() * den;
  long double g = static_cast<long double>(gap) / static_cast<long double>(den);
  if (std::fabs(g - 2 * eps.to_long_double()) < 2 * slack) return Verdict::Inconclusive;
  return l < r ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

EpsDenseReport eps_dense_coprime_check(const SystemSpec& sys, const Rational& eps, Index modulus,
                                       Index n_range, Index step_bound,
                                       const std::vector<PointSpec>& points) {
  if (eps <= Rational(0)) throw DomainError("eps must be positive");
  if (modulus < 1 || n_range < 1 || step_bound < 0)
    throw DomainError("modulus and n_range must be positive, step_bound non-negative");
  EpsDenseReport rep;

  auto fail = [&](Index n, const PointSpec& x) {
    rep.verdict = Verdict::Fail;
    rep.counter_n = n;
    rep.counter_x = x;
  };

  if (sys.all_finite()) {
    // states as mixed-radix tuples; distance is the max circular distance
    std::vector<Index> ks;
    for (const auto& f : sys.factors) ks.push_back(f.k);
    Index total = sys.finite_state_count();
    auto decode = [&](Index code) {
      PointSpec p;
      for (Index k : ks) {
        p.coords.push_back({code % k, {}, {}});
        code /= k;
      }
      return p;
    };
    auto encode = [&](const PointSpec& p) {
      Index code = 0, mult = 1;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        code += p.coords[i].state * mult;
        mult *= ks[i];
      }
      return code;
    };
    auto close = [&](Index a, Index b) {
      for (Index k : ks) {
        Index d = mod(a % k - b % k, k);
        d = std::min(d, k - d);
        // d/k < eps
        if (!(static_cast<Wide>(d) * eps.den() < static_cast<Wide>(eps.num()) * k)) return false;
        a /= k;
        b /= k;
      }
      return true;
    };
    std::vector<PointSpec> pts = points;
    if (pts.empty())
      for (Index c = 0; c < total; ++c) pts.push_back(decode(c));
    for (const auto& p : pts) validate_point(sys, p);
    std::vector<char> seen(static_cast<std::size_t>(total));
    for (Index n = 1; n <= n_range; ++n) {
      if (gcd(n, modulus) != 1) continue;
      ++rep.n_checked;
      for (const auto& p : pts) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<Index> orbit;
        for (Index j = 0; j <= step_bound; ++j) {
          Index c = encode(advance(sys, p, checked_mul(n, j)));
          if (seen[static_cast<std::size_t>(c)]) break;  // the orbit has closed up
          seen[static_cast<std::size_t>(c)] = 1;
          orbit.push_back(c);
        }
        for (Index y = 0; y < total; ++y) {
          bool hit = std::any_of(orbit.begin(), orbit.end(), [&](Index o) { return close(o, y); });
          if (!hit) {
            fail(n, p);
            return rep;
          }
        }
      }
    }
    return rep;
  }

  if (sys.factors.size() != 1) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "mixed finite/continuous products are not supported by the density check";
    return rep;
  }

  const FactorSpec& f = sys.factors.front();
  std::vector<PointSpec> pts = points;
  if (pts.empty())
    pts.push_back(f.kind == FactorSpec::Kind::Torus ? PointSpec::torus(0)
                                                    : PointSpec::skew(0, 0));
  for (const auto& p : pts) validate_point(sys, p);

  if (f.kind == FactorSpec::Kind::Torus) {
    for (Index n = 1; n <= n_range; ++n) {
      if (gcd(n, modulus) != 1) continue;
      ++rep.n_checked;
      long double slack =
          static_cast<long double>(n) * static_cast<long double>(step_bound) * f.alpha.precision;
      for (const auto& p : pts) {
        CirclePoly xp = x_poly(f, p.coords[0].x);
        std::vector<Index> vals;
        vals.reserve(static_cast<std::size_t>(step_bound) + 1);
        for (Index j = 0; j <= step_bound; ++j) vals.push_back(xp.at(checked_mul(n, j)));
        Verdict v = circle_gaps_dense(vals, xp.den, eps, slack);
        if (v == Verdict::Fail) {
          fail(n, p);
          return rep;
        }
        if (v == Verdict::Inconclusive) rep.verdict = Verdict::Inconclusive;
      }
    }
    return rep;
  }

  // Skew product: every cell of side 1/c <= eps holding an orbit point
  // certifies eps-density in the max metric; an empty cell decides nothing.
  Wide cells_w = (static_cast<Wide>(eps.den()) + eps.num() - 1) / eps.num();
  if (cells_w > 2048) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = "eps too small for the cell-cover test";
    return rep;
  }
  const Index cells = static_cast<Index>(cells_w);
  for (Index n = 1; n <= n_range; ++n) {
    if (gcd(n, modulus) != 1) continue;
    ++rep.n_checked;
    for (const auto& p : pts) {
      CirclePoly xp = x_poly(f, p.coords[0].x);
      CirclePoly yp = y_poly(f, p.coords[0].x, p.coords[0].y);
      std::vector<char> hit(static_cast<std::size_t>(cells * cells));
      Index filled = 0;
      for (Index j = 0; j <= step_bound && filled < cells * cells; ++j) {
        Index t = checked_mul(n, j);
        auto cx = static_cast<Index>(static_cast<Wide>(xp.at(t)) * cells / xp.den);
        auto cy = static_cast<Index>(static_cast<Wide>(yp.at(t)) * cells / yp.den);
        auto& h = hit[static_cast<std::size_t>(cx * cells + cy)];
        if (!h) {
          h = 1;
          ++filled;
        }
      }
      if (filled < cells * cells) {
        rep.verdict = Verdict::Inconclusive;
        rep.counter_n = n;
        rep.counter_x = p;
        rep.note = "some cell holds no orbit point within the step bound";
        return rep;
      }
    }
  }
  return rep;
}

// ---- total visibility -----------------------------------------------------

VisibilityReport total_visibility(Index k, const std::vector<Index>& u, Index depth) {
  if (k < 1) throw DomainError("finite rotation needs k >= 1");
  if (u.empty()) throw DomainError("empty open set");
  std::vector<char> in(static_cast<std::size_t>(k));
  for (Index s : u) {
    if (s < 0 || s >= k) throw DomainError("open set state outside Z_k");
    in[static_cast<std::size_t>(s)] = 1;
  }
  VisibilityReport rep;
  rep.inf = Rational(2);
  const Index top = std::max(depth, k);
  for (Index n = 1; n <= top; ++n) {
    Index d = gcd(n, k);
    std::vector<Index> count(static_cast<std::size_t>(d));
    for (Index s = 0; s < k; ++s)
      if (in[static_cast<std::size_t>(s)]) ++count[static_cast<std::size_t>(s % d)];
    for (Index i = 0; i < d; ++i) {
      Rational v(d * count[static_cast<std::size_t>(i)], k);
      if (v < rep.inf) {
        rep.inf = v;
        rep.arg_n = n;
        rep.arg_i = i;
      }
    }
  }
  return rep;
}

// ---- diagonal orbit -------------------------------------------------------

DiagonalOrbitReport diagonal_orbit(Index k, const std::vector<Index>& m, Index state_cap) {
  if (k < 1) throw DomainError("finite rotation needs k >= 1");
  if (m.empty()) throw DomainError("need at least one exponent");
  for (Index mi : m)
    if (mi < 1) throw DomainError("exponents must be positive");
  Index states;
  if (!try_pow(k, static_cast<unsigned>(m.size()), states) || states > state_cap)
    throw DomainError("k^l exceeds the state cap");

  const std::size_t l = m.size();
  const auto S = static_cast<std::size_t>(states);
  std::vector<Index> pw(l);
  pw[0] = 1;
  for (std::size_t i = 1; i < l; ++i) pw[i] = pw[i - 1] * k;

  // successor tables: t_m = T^{m_1} x ... x T^{m_l}, t_d = Delta(T)
  std::vector<Index> t_m(S), t_d(S);
  for (Index c = 0; c < states; ++c) {
    Index nm = 0, nd = 0;
    for (std::size_t i = 0; i < l; ++i) {
      Index a = (c / pw[i]) % k;
      nm += ((a + m[i]) % k) * pw[i];
      nd += ((a + 1) % k) * pw[i];
    }
    t_m[static_cast<std::size_t>(c)] = nm;
    t_d[static_cast<std::size_t>(c)] = nd;
  }
  Index big_m = 1;
  for (Index mi : m) big_m = lcm_checked(big_m, mi);
  std::vector<Index> t_dm(S);
  for (std::size_t c = 0; c < S; ++c) {
    Index v = static_cast<Index>(c);
    for (Index r = 0; r < big_m % k; ++r) v = t_d[static_cast<std::size_t>(v)];
    t_dm[c] = v;
  }

  auto diag = [&](Index x) {
    Index c = 0;
    for (std::size_t i = 0; i < l; ++i) c += x * pw[i];
    return c;
  };
  // forward closure from seeds under the given maps
  auto closure = [&](const std::vector<Index>& seeds,
                     std::initializer_list<const std::vector<Index>*> maps) {
    std::vector<char> mark(S);
    std::deque<Index> q;
    for (Index s : seeds)
      if (!mark[static_cast<std::size_t>(s)]) {
        mark[static_cast<std::size_t>(s)] = 1;
        q.push_back(s);
      }
    while (!q.empty()) {
      Index c = q.front();
      q.pop_front();
      for (const auto* mp : maps) {
        Index nx = (*mp)[static_cast<std::size_t>(c)];
        if (!mark[static_cast<std::size_t>(nx)]) {
          mark[static_cast<std::size_t>(nx)] = 1;
          q.push_back(nx);
        }
      }
    }
    return mark;
  };
  auto members = [&](const std::vector<char>& mark) {
    std::vector<Index> v;
    for (std::size_t c = 0; c < S; ++c)
      if (mark[c]) v.push_back(static_cast<Index>(c));
    return v;
  };
  auto tuple = [&](Index c) {
    std::vector<Index> t(l);
    for (std::size_t i = 0; i < l; ++i) t[i] = (c / pw[i]) % k;
    return t;
  };

  DiagonalOrbitReport rep;
  rep.k = k;
  rep.m = m;
  rep.lcm_m = big_m;
  const Index d = gcd(big_m, k);
  rep.expected_components = d;

  std::vector<Index> all_diag;
  for (Index x = 0; x < k; ++x) all_diag.push_back(diag(x));
  const auto xdelta = closure(all_diag, {&t_m});
  const auto xdelta_members = members(xdelta);
  for (Index c : xdelta_members) rep.closure.push_back(tuple(c));

  // X^Delta_{M,j}: orbit closure of Delta(X_{M,j}) with X_{M,j} = {x = j mod d}
  std::vector<std::vector<char>> comps;
  for (Index j = 0; j < d; ++j) {
    std::vector<Index> seeds;
    for (Index x = j; x < k; x += d) seeds.push_back(diag(x));
    comps.push_back(closure(seeds, {&t_m}));
  }

  std::vector<Index> owner(S, -1);
  rep.disjoint = true;
  for (Index j = 0; j < d; ++j)
    for (std::size_t c = 0; c < S; ++c)
      if (comps[static_cast<std::size_t>(j)][c]) {
        if (owner[c] >= 0) rep.disjoint = false;
        owner[c] = j;
      }
  rep.covers = true;
  for (std::size_t c = 0; c < S; ++c)
    if (static_cast<bool>(xdelta[c]) != (owner[c] >= 0)) rep.covers = false;

  rep.cyclic = rep.invariant = rep.transitive = true;
  for (Index j = 0; j < d; ++j) {
    const auto& cj = comps[static_cast<std::size_t>(j)];
    for (std::size_t c = 0; c < S; ++c) {
      if (!cj[c]) continue;
      if (owner[static_cast<std::size_t>(t_d[c])] != (j + 1) % d) rep.cyclic = false;
      if (owner[static_cast<std::size_t>(t_dm[c])] != j || owner[static_cast<std::size_t>(t_m[c])] != j)
        rep.invariant = false;
    }
    auto cm = members(cj);
    rep.components.emplace_back();
    for (Index c : cm) rep.components.back().push_back(tuple(c));
    // the maps are permutations, so one forward orbit per component suffices
    if (cm.empty() || closure({cm.front()}, {&t_dm, &t_m}) != cj) rep.transitive = false;
  }

  // count the joint (Delta(T)^M, T^m) orbits on X^Delta independently
  std::vector<char> done(S);
  Index orbits = 0;
  for (Index c : xdelta_members) {
    if (done[static_cast<std::size_t>(c)]) continue;
    ++orbits;
    auto o = closure({c}, {&t_dm, &t_m});
    for (std::size_t i = 0; i < S; ++i)
      if (o[i]) done[i] = 1;
  }
  rep.count_matches = orbits == d;
  rep.closure_minimal =
      !xdelta_members.empty() && closure({xdelta_members.front()}, {&t_d, &t_m}) == xdelta;
  return rep;
}

// ---- multiplicative thickness on finite rotations -------------------------

std::vector<ThicknessCell> thickness_equivalence_check(
    Index k, const std::vector<std::vector<Index>>& u_family, Index n_range) {
  if (k < 1) throw DomainError("finite rotation needs k >= 1");
  if (n_range < 1) throw DomainError("n_range must be positive");
  const SystemSpec sys = SystemSpec::finite_rotation(k);
  std::vector<ThicknessCell> out;
  for (const auto& u : u_family) {
    if (u.empty()) throw DomainError("empty open set");
    std::vector<char> in(static_cast<std::size_t>(k));
    for (Index s : u) {
      if (s < 0 || s >= k) throw DomainError("open set state outside Z_k");
      in[static_cast<std::size_t>(s)] = 1;
    }
    auto in_u = [&](Index s) { return in[static_cast<std::size_t>(mod(s, k))] != 0; };
    for (Index n = 1; n <= n_range; ++n) {
      ThicknessCell cell;
      cell.u = u;
      cell.n = n;
      std::vector<Index> f(static_cast<std::size_t>(n));
      std::iota(f.begin(), f.end(), Index{1});

      // (1): R(x,U) = {m : x+m in U} is periodic mod k
      cell.cond1 = true;
      for (Index x = 0; x < k && cell.cond1; ++x) {
        std::vector<Index> res;
        for (Index s : u) res.push_back(mod(s - x, k));
        cell.cond1 = decide_thick_dilation(PeriodicSet(k, res), f, CosetSpec::full()).has_value();
      }

      // (4): every x has some m in one period with x + m*i in U for i <= n
      cell.cond4 = true;
      for (Index x = 0; x < k; ++x) {
        bool some_m = false;
        for (Index m = 1; m <= k && !some_m; ++m) {
          bool all = true;
          for (Index i = 1; i <= n && all; ++i) all = in_u(x + m * i);
          some_m = all;
        }
        if (!some_m) {
          cell.cond4 = false;
          cell.cond4_counter_x = x;
          break;
        }
      }

      // (5): F = {1..k}; l ranges over one period of the return set
      cell.cond5 = true;
      const Window w{checked_add(k, checked_mul(k, n))};
      for (Index x = 0; x < k && cell.cond5; ++x) {
        NatSet r = return_set(sys, PointSpec::finite(x), OpenSetSpec::states(u), w).set;
        for (Index l = 0; l < k && cell.cond5; ++l) {
          bool some_m = false;
          for (Index m = 1; m <= k && !some_m; ++m) {
            bool all = true;
            for (Index i = 1; i <= n && all; ++i) all = r.contains(l + m * i);
            some_m = all;
          }
          cell.cond5 = some_m;
        }
      }
      out.push_back(std::move(cell));
    }
  }
  return out;
}

// ---- translate/quotient gaps ----------------------------------------------

std::vector<GapCell> translate_quotient_syndetic_check(const SystemSpec& sys, const PointSpec& x,
                                                       const OpenSetSpec& u, Index modulus,
                                                       Index t_range, Index n_range, Window w,
                                                       Index threshold) {
  if (modulus < 1 || n_range < 1 || t_range < 0)
    throw DomainError("modulus and n_range must be positive, t_range non-negative");
  const NatSet r = return_set(sys, x, u, w).set;
  std::vector<GapCell> out;
  for (Index t = 0; t <= t_range; ++t) {
    NatSet shifted = translate(r, t);
    for (Index n = 1; n <= n_range; ++n) {
      if (gcd(n, modulus) != 1) continue;
      GapCell cell;
      cell.t = t;
      cell.n = n;
      cell.gap = gap_syndeticity(quotient(shifted, n));
      cell.flagged = !cell.gap || *cell.gap > threshold;
      out.push_back(cell);
    }
  }
  return out;
}

}  // namespace gplab
