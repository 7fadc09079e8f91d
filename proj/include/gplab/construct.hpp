#pragma once

// Explicit counterexample sets and polynomial-Diophantine sets, each paired
// with a checker that shares no code with its builder.

#include <string>
#include <utility>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/dynsim.hpp"
#include "gplab/ipcalc.hpp"
#include "gplab/natset.hpp"

namespace gplab {

// ---- syndetic set with no syndetic (A - t)/n, n >= 2 ------------------------

struct ThickBlock {
  std::size_t pair = 0;  // index into ThickFamilyPlan::pairs
  Index start = 0;
  Index length = 0;
  Index last() const noexcept { return start + length - 1; }
};

struct ThickFamilyPlan {
  std::vector<std::pair<Index, Index>> pairs;  // (t, n)
  std::vector<ThickBlock> blocks;              // ascending, separated by guards
  Index guard = 2;
  Index passes = 0;
};

struct Example82 {
  NatSet a;
  ThickFamilyPlan plan;
};

// Round-robin passes p = 1, 2, ...; in pass p the block of pair i has length
// p^2 * max(100, (i+1)*n*t), and consecutive blocks are `guard` apart. Blocks
// stop at the first one that does not fit. A keeps the block members outside
// n*N + t and everything outside the blocks.
Example82 build_example_8_2(Window w, const std::vector<std::pair<Index, Index>>& pairs);

struct PairGap {
  Index t = 0;
  Index n = 0;
  std::size_t blocks = 0;
  Index longest_gap = 0;  // longest run of (A - t)/n misses inside one block image
};

struct Example82Check {
  bool plan_ok = false;       // disjoint, non-adjacent, long enough blocks
  bool cover_ok = false;      // A cup (A - 1) contains [1, hi - 1]
  std::vector<Index> uncovered;
  bool blocks_ok = false;     // each block image misses at least floor(len/n) - 1
  std::vector<PairGap> gaps;
  std::string failure;
  bool ok() const noexcept { return plan_ok && cover_ok && blocks_ok; }
};

Example82Check check_example_8_2(const NatSet& a, const ThickFamilyPlan& plan);

// ---- IP_2* set with no IP_0* translate --------------------------------------

struct Ip2FreeBlock {
  Index n = 0;   // block index, also its size
  Index r = 0;
  Index m = 0;   // shift
  std::vector<Index> members() const;  // r*{1..n} + m
};

struct Ip2FreePlan {
  std::vector<Ip2FreeBlock> blocks;  // blocks lying wholly in the window
  // m_n cycling 1,-1, 1,-1,2,-2, 1,-1,2,-2,3,-3, ...
  static Index shift(Index n);
};

struct TranslateViolation {
  Index t = 0;
  Index block = 0;   // n of the realizing block
  FsSpec fs;         // FS(r_n, ..., r_n), inside B_t - t and missing A - t
};

struct Example84 {
  NatSet a;
  NatSet b;
  Ip2FreePlan plan;
  std::vector<TranslateViolation> witnesses;  // one per realized t, largest block
};

// r_1 = 3 and r_{n+1} = 2 * (r_n * n + M) + M + 1 with M = max_{j <= n+1} |m_j|.
Example84 build_example_8_4(Window w);

struct Example84Check {
  bool b_ip2_free = false;
  std::optional<std::pair<Index, Index>> ip2_pair;  // (x, y) with x, y, x+y in B
  bool a_ip2_star = false;
  bool translates_ok = false;
  std::vector<Index> realized_t;
  std::string failure;
  bool ok() const noexcept { return b_ip2_free && a_ip2_star && translates_ok; }
};

Example84Check check_example_8_4(const Example84& ex);

// ---- polynomial Diophantine sets ------------------------------------------

/// p(n) = scale * sum_j coeffs[j] * n^j with a declared-irrational scale,
/// taken modulo 1 like every approximant.
struct DiophantinePoly {
  Approximant scale;
  std::vector<Rational> coeffs;  // coeffs[j] multiplies n^j
  std::string str() const;
};

struct PolySetResult {
  NatSet set;
  std::vector<Index> ambiguous;  // excluded: within the margin of some boundary
};

// {n : {p_i(n)} in I_i for all i} on the window. Intervals are unions of
// arcs, (0, 1) with lo = 0, hi = 1 meaning all of [0, 1).
PolySetResult poly_diophantine_set(const std::vector<DiophantinePoly>& polys,
                                   const std::vector<std::vector<Arc>>& intervals, Window w,
                                   long double boundary_margin = 1e-9L);

}  // namespace gplab
