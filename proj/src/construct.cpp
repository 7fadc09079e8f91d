#include "gplab/construct.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gplab {

// ---- thick family ---------------------------------------------------------

Example82 build_example_8_2(Window w, const std::vector<std::pair<Index, Index>>& pairs) {
  if (pairs.empty()) throw DomainError("need at least one (t, n) pair");
  for (auto [t, n] : pairs)
    if (t < 1 || n < 2) throw DomainError("pairs need t >= 1 and n >= 2");

  Example82 ex;
  ex.plan.pairs = pairs;
  const Index guard = ex.plan.guard;
  Index next = 1 + guard;  // first usable start
  bool full = false;
  for (Index p = 1; !full; ++p) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [t, n] = pairs[i];
      Index base = std::max<Index>(100, checked_mul(checked_mul(static_cast<Index>(i + 1), n), t));
      Index len = checked_mul(checked_mul(p, p), base);
      if (checked_add(next, len) - 1 > w.hi) {
        full = true;
        break;
      }
      ex.plan.blocks.push_back({i, next, len});
      next = next + len + guard;
    }
    if (!full) ex.plan.passes = p;
  }
  if (ex.plan.blocks.size() < pairs.size())
    throw DomainError("window " + std::to_string(w.hi) + " cannot hold one block per pair");

  NatSet::Builder b(w.hi);
  std::size_t bi = 0;
  for (Index m = 1; m <= w.hi; ++m) {
    while (bi < ex.plan.blocks.size() && ex.plan.blocks[bi].last() < m) ++bi;
    bool in_block = bi < ex.plan.blocks.size() && ex.plan.blocks[bi].start <= m;
    if (!in_block) {
      b.add(m);
      continue;
    }
    auto [t, n] = pairs[ex.plan.blocks[bi].pair];
    // drop n*N + t, i.e. m = t + n*j with j >= 1
    if (!(m > t && (m - t) % n == 0)) b.add(m);
  }
  ex.a = std::move(b).finish();
  return ex;
}

Example82Check check_example_8_2(const NatSet& a, const ThickFamilyPlan& plan) {
  Example82Check c;
  const Index hi = a.hi();

  // plan shape
  c.plan_ok = true;
  std::vector<std::size_t> seen(plan.pairs.size());
  for (std::size_t i = 0; i < plan.blocks.size() && c.plan_ok; ++i) {
    const auto& blk = plan.blocks[i];
    auto [t, n] = plan.pairs.at(blk.pair);
    ++seen[blk.pair];
    if (blk.start < 1 || blk.last() > hi) c.failure = "block outside the window";
    else if (i > 0 && blk.start - plan.blocks[i - 1].last() - 1 < 2)
      c.failure = "blocks closer than the guard gap";
    else if (blk.length < static_cast<Index>(blk.pair + 1) * n * t)
      c.failure = "block shorter than k*n*t";
    c.plan_ok = c.failure.empty();
  }
  if (c.plan_ok && std::find(seen.begin(), seen.end(), 0u) != seen.end()) {
    c.plan_ok = false;
    c.failure = "some pair has no block";
  }

  // A cup (A - 1) covers [1, hi - 1]
  for (Index m = 1; m < hi; ++m)
    if (!a.contains(m) && !a.contains(m + 1)) c.uncovered.push_back(m);
  c.cover_ok = c.uncovered.empty();
  if (!c.cover_ok && c.failure.empty()) c.failure = "A cup (A-1) misses " + std::to_string(c.uncovered.front());

  // each block image inside (A - t)/n holds no member
  c.blocks_ok = true;
  std::map<std::size_t, PairGap> per_pair;
  for (const auto& blk : plan.blocks) {
    auto [t, n] = plan.pairs.at(blk.pair);
    NatSet q = quotient(translate(a, t), n);
    // image: m >= 1 with blk.start <= n*m + t <= blk.last()
    Index lo = std::max<Index>(1, (blk.start - t + n - 1) / n);
    Index hi_m = (blk.last() - t) / n;
    Index run = 0, longest = 0;
    for (Index m = lo; m <= hi_m; ++m) {
      run = q.contains(m) ? 0 : run + 1;
      longest = std::max(longest, run);
    }
    if (longest < blk.length / n - 1) {
      c.blocks_ok = false;
      if (c.failure.empty()) c.failure = "block at " + std::to_string(blk.start) + " too short a gap";
    }
    auto& pg = per_pair[blk.pair];
    pg.t = t;
    pg.n = n;
    ++pg.blocks;
    pg.longest_gap = std::max(pg.longest_gap, longest);
  }
  for (auto& [i, pg] : per_pair) c.gaps.push_back(pg);
  return c;
}

// ---- IP_2-free blocks -----------------------------------------------------

Index Ip2FreePlan::shift(Index n) {
  if (n < 1) throw DomainError("block index must be positive");
  Index j = 1;
  while (j * (j + 1) < n) ++j;
  Index o = n - (j - 1) * j - 1;
  Index v = o / 2 + 1;
  return o % 2 == 0 ? v : -v;
}

std::vector<Index> Ip2FreeBlock::members() const {
  std::vector<Index> out;
  for (Index i = 1; i <= n; ++i) out.push_back(r * i + m);
  return out;
}

Example84 build_example_8_4(Window w) {
  Example84 ex;
  Index r = 3;
  Index max_abs = 0;
  for (Index n = 1;; ++n) {
    Index m = Ip2FreePlan::shift(n);
    max_abs = std::max(max_abs, m < 0 ? -m : m);
    if (n > 1) {
      Index prev_r = r;
      Index step;
      if (!try_mul(prev_r, n - 1, step)) break;
      // the extra max_abs keeps min(new block) = r + m above twice the
      // previous maximum even when |m| is the running maximum, so x + x misses B
      r = checked_add(checked_add(checked_mul(2, checked_add(step, max_abs)), max_abs), 1);
    }
    Ip2FreeBlock blk{n, r, m};
    Index first = r + m, last;
    if (!try_mul(r, n, last) || last + m > w.hi) break;
    if (first >= 1) ex.plan.blocks.push_back(blk);
  }
  if (ex.plan.blocks.size() < 2)
    throw DomainError("window " + std::to_string(w.hi) + " holds fewer than two blocks");

  std::vector<Index> bm;
  for (const auto& blk : ex.plan.blocks)
    for (Index v : blk.members()) bm.push_back(v);
  ex.b = NatSet::from_members(w.hi, bm);
  ex.a = complement(ex.b);

  // largest realized block per shift
  std::map<Index, const Ip2FreeBlock*> best;
  for (const auto& blk : ex.plan.blocks) best[blk.m] = &blk;
  for (auto [t, blk] : best) {
    TranslateViolation v;
    v.t = t;
    v.block = blk->n;
    v.fs.generators.assign(static_cast<std::size_t>(blk->n), blk->r);
    ex.witnesses.push_back(std::move(v));
  }
  return ex;
}

Example84Check check_example_8_4(const Example84& ex) {
  Example84Check c;
  const NatSet& b = ex.b;
  const Index hi = b.hi();

  // (i) no x <= y with x, y, x + y in B
  c.b_ip2_free = true;
  std::vector<Index> members = b.to_vector();
  for (std::size_t i = 0; i < members.size() && c.b_ip2_free; ++i)
    for (std::size_t j = i; j < members.size(); ++j) {
      Index s = members[i] + members[j];
      if (s > hi) break;
      if (b.contains(s)) {
        c.b_ip2_free = false;
        c.ip2_pair = std::make_pair(members[i], members[j]);
        c.failure = "B holds " + std::to_string(members[i]) + ", " + std::to_string(members[j]) +
                    " and their sum";
        break;
      }
    }

  // (ii) A meets every FS(x, y) inside the window
  c.a_ip2_star = !ip_r_star_violator(ex.a, 2).has_value();
  if (!c.a_ip2_star && c.failure.empty()) c.failure = "A is not window-IP_2*";

  // (iii) FS(r, ..., r) lies in (B_t - t) and misses A - t
  c.translates_ok = !ex.witnesses.empty();
  for (const auto& v : ex.witnesses) {
    NatSet shifted = translate(ex.a, v.t);
    NatSet fs = fs_expand(v.fs);
    bool ok = fs.max() <= shifted.hi();
    for (Index e : fs) ok = ok && !shifted.contains(e) && b.contains(e + v.t);
    if (ok) c.realized_t.push_back(v.t);
    else {
      c.translates_ok = false;
      if (c.failure.empty()) c.failure = "translate witness fails at t=" + std::to_string(v.t);
    }
  }
  std::sort(c.realized_t.begin(), c.realized_t.end());
  return c;
}

// ---- polynomial Diophantine sets ------------------------------------------

std::string DiophantinePoly::str() const {
  std::string s = scale.str() + "*(";
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j) s += " + ";
    s += coeffs[j].str() + "*n^" + std::to_string(j);
  }
  return s + ")";
}

namespace {

struct PolyEval {
  Index p, q;               // scale ~ p/q
  Index l;                  // lcm of coefficient denominators
  std::vector<Index> ints;  // coeffs * l
  long double precision;

  // numerator of {p(n)} over q*l, and |sum ints_j n^j| / l for the error bound
  Wide at(Index n, long double& magnitude) const {
    Wide s = 0;
    for (std::size_t j = ints.size(); j-- > 0;) {
      s = s * n + ints[j];
      if (s > static_cast<Wide>(1) << 100 || s < -(static_cast<Wide>(1) << 100))
        throw OverflowError("polynomial value exceeds 2^100");
    }
    magnitude = std::fabs(static_cast<long double>(s)) / static_cast<long double>(l);
    Wide r = mod(s, static_cast<Wide>(l));
    Wide quo = (s - r) / l;
    auto qm = static_cast<Index>(mod(quo, static_cast<Wide>(q)));
    Wide big = static_cast<Wide>(q) * l;
    return mod(static_cast<Wide>(mulmod(p, qm, q)) * l + static_cast<Wide>(p) * r, big);
  }
};

}  // namespace

PolySetResult poly_diophantine_set(const std::vector<DiophantinePoly>& polys,
                                   const std::vector<std::vector<Arc>>& intervals, Window w,
                                   long double boundary_margin) {
  if (polys.empty()) throw DomainError("need at least one polynomial");
  if (polys.size() != intervals.size()) throw DomainError("one interval per polynomial");
  std::vector<PolyEval> evs;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto& poly = polys[i];
    if (!poly.scale.irrational)
      throw DomainError("polynomial " + std::to_string(i + 1) +
                        " has no declared-irrational scale; its fractional parts are periodic");
    bool nonconstant = false;
    for (std::size_t j = 1; j < poly.coeffs.size(); ++j) nonconstant |= poly.coeffs[j] != Rational(0);
    if (!nonconstant || poly.scale.num == 0)
      throw DomainError("polynomial " + std::to_string(i + 1) + " is constant");
    if (intervals[i].empty()) throw DomainError("empty interval");
    for (const auto& arc : intervals[i])
      if (!arc.full() && (arc.lo < Rational(0) || arc.lo >= Rational(1) || arc.hi <= Rational(0) ||
                          arc.hi > Rational(1) || arc.lo == arc.hi))
        throw DomainError("interval endpoints must lie in [0, 1]");
    PolyEval ev{poly.scale.num, poly.scale.den, 1, {}, poly.scale.precision};
    for (const auto& c : poly.coeffs) ev.l = lcm_checked(ev.l, c.den());
    for (const auto& c : poly.coeffs) ev.ints.push_back(checked_mul(c.num(), ev.l / c.den()));
    evs.push_back(std::move(ev));
  }

  PolySetResult res;
  NatSet::Builder b(w.hi);
  for (Index n = 1; n <= w.hi; ++n) {
    // Out is only reported away from every boundary, so it settles membership
    bool out = false, near = false;
    for (std::size_t i = 0; i < evs.size() && !out; ++i) {
      long double mag = 0;
      Wide v = evs[i].at(n, mag);
      bool in = false;
      ArcHit h = arc_position(v, static_cast<Wide>(evs[i].q) * evs[i].l, intervals[i],
                              boundary_margin + mag * evs[i].precision, in);
      out = h == ArcHit::Out;
      near = near || h == ArcHit::Near;
    }
    if (out) continue;
    if (near) res.ambiguous.push_back(n);
    else b.add(n);
  }
  res.set = std::move(b).finish();
  return res;
}

}  // namespace gplab
