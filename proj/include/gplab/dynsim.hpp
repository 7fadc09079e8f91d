#pragma once

// Concrete minimal systems and their return-time sets.
//
// A system is a product of primitive factors: finite rotations x -> x+1 mod k,
// circle rotations x -> x+alpha, and the skew product
// (x, y) -> (x+alpha, y+2x+alpha) on the 2-torus, whose n-th iterate is
// (x+n*alpha, y+2n*x+n^2*alpha). Torus coordinates are exact rationals and
// alpha is a rational approximant, so every orbit point is computed exactly
// on the approximant. Times whose orbit point lies within the boundary margin
// (plus the propagated approximant error) of the edge of U are reported as
// boundary-ambiguous alongside the set.

#include <optional>
#include <string>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/natset.hpp"
#include "gplab/verdict.hpp"

namespace gplab {

struct FactorSpec {
  enum class Kind { Finite, Torus, Skew };
  Kind kind = Kind::Finite;
  Index k = 1;          // Finite
  Approximant alpha;    // Torus, Skew
};

struct SystemSpec {
  std::vector<FactorSpec> factors;

  static SystemSpec finite_rotation(Index k);
  static SystemSpec torus_rotation(const Approximant& alpha);
  static SystemSpec skew_product(const Approximant& alpha);
  static SystemSpec product(const std::vector<SystemSpec>& parts);

  bool all_finite() const noexcept;
  // Number of states when all factors are finite.
  Index finite_state_count() const;
  std::string str() const;
};

struct FactorPoint {
  Index state = 0;  // Finite
  Rational x;       // Torus, Skew
  Rational y;       // Skew
  friend bool operator==(const FactorPoint&, const FactorPoint&) = default;
};

struct PointSpec {
  std::vector<FactorPoint> coords;

  static PointSpec finite(Index state);
  static PointSpec torus(const Rational& x);
  static PointSpec skew(const Rational& x, const Rational& y);
  static PointSpec product(const std::vector<PointSpec>& parts);
  std::string str() const;
  friend bool operator==(const PointSpec&, const PointSpec&) = default;
};

/// Open arc of the circle from lo to hi; lo > hi wraps through 0, and
/// lo = 0, hi = 1 is the whole circle.
struct Arc {
  Rational lo;
  Rational hi{1};
  bool full() const noexcept { return lo == Rational(0) && hi == Rational(1); }
};

enum class ArcHit { Out, In, Near };

// Position of v/den (0 <= v < den) relative to a union of open arcs. Near
// means within tol of some endpoint; `in` always holds the exact answer.
ArcHit arc_position(Wide v, Wide den, const std::vector<Arc>& arcs, long double tol, bool& in);

struct FactorOpenSet {
  std::vector<Index> states;  // Finite: explicit subset
  std::vector<Arc> x_arcs;    // Torus, Skew (first coordinate)
  std::vector<Arc> y_arcs;    // Skew (second coordinate)
};

/// Product of per-factor open sets.
struct OpenSetSpec {
  std::vector<FactorOpenSet> factors;

  static OpenSetSpec states(std::vector<Index> states);
  static OpenSetSpec arcs(std::vector<Arc> arcs);
  static OpenSetSpec box(std::vector<Arc> x_arcs, std::vector<Arc> y_arcs);
  static OpenSetSpec product(const std::vector<OpenSetSpec>& parts);
  std::string str() const;
};

struct EvalOptions {
  long double boundary_margin = 1e-9L;
};

struct ReturnSet {
  NatSet set;
  std::vector<Index> ambiguous;  // times within the boundary margin of U
};

// R_{T^power}(x, U) = {n : T^(power*n) x in U} on [1, w.hi].
ReturnSet return_set(const SystemSpec& sys, const PointSpec& x, const OpenSetSpec& u,
                     Window w, Index power = 1, const EvalOptions& opt = {});

// T^n x, computed exactly on the approximants.
PointSpec advance(const SystemSpec& sys, const PointSpec& x, Index n);

// Decomposition of X into d_n clopen T^n-minimal pieces cyclically permuted
// by T. Finite factors must have pairwise coprime sizes and at most one
// torus/skew factor may be present (declared irrational); otherwise the
// product is not certifiably minimal and DomainError is raised.
struct ComponentDecomposition {
  Index n = 1;
  Index d = 1;
  Index finite_period = 1;  // product of the finite factor sizes
  Index component_of(const PointSpec& x) const;
  // For all-finite systems: labels[state] with states enumerated by CRT time
  // (state index = time t in [0, finite_period) with x = T^t(0,...,0)).
  std::vector<Index> labels;
  // Size of each factor, 0 for continuous ones.
  std::vector<Index> factor_sizes;
};

ComponentDecomposition kronecker_components(const SystemSpec& sys, Index n);

struct EpsDenseReport {
  Verdict verdict = Verdict::Pass;
  Index n_checked = 0;
  std::optional<Index> counter_n;
  std::optional<PointSpec> counter_x;
  std::string note;
};

// For every n <= n_range coprime to modulus and every point (all states for
// finite systems when `points` is empty), checks that {T^(n*j) x : 0 <= j <=
// step_bound} is eps-dense. Circle distances are |a-b| mod 1, finite ones
// circular |a-b|/k, products take the max. Skew products use a cell-cover
// test that can certify density but not refute it (inconclusive).
EpsDenseReport eps_dense_coprime_check(const SystemSpec& sys, const Rational& eps,
                                       Index modulus, Index n_range, Index step_bound,
                                       const std::vector<PointSpec>& points = {});

struct VisibilityReport {
  Rational inf;          // exact infimum over all n, i of mu_{n,i}(U)
  Index arg_n = 1;
  Index arg_i = 0;
};

// mu uniform on Z_k; mu_{n,i}(U) = d_n |U cap X_{n,i}| / k. d_n = gcd(n, k),
// so the values over n <= max(depth, k) exhaust all of them.
VisibilityReport total_visibility(Index k, const std::vector<Index>& u, Index depth);

struct DiagonalOrbitReport {
  Index k = 0;
  std::vector<Index> m;
  Index lcm_m = 0;
  Index expected_components = 0;  // gcd(lcm_m, k)
  std::vector<std::vector<Index>> closure;     // X^Delta states as tuples
  std::vector<std::vector<std::vector<Index>>> components;
  bool disjoint = false;
  bool covers = false;
  bool count_matches = false;
  bool cyclic = false;       // Delta(T) maps component j onto j+1
  bool invariant = false;    // Delta(T)^M and T^m preserve each component
  bool transitive = false;   // (Delta(T)^M, T^m) jointly transitive on each
  bool closure_minimal = false;  // (Delta(T), T^m) jointly transitive on X^Delta
  bool ok() const noexcept {
    return disjoint && covers && count_matches && cyclic && invariant && transitive &&
           closure_minimal;
  }
};

DiagonalOrbitReport diagonal_orbit(Index k, const std::vector<Index>& m,
                                   Index state_cap = Index{1} << 22);

struct ThicknessCell {
  std::vector<Index> u;
  Index n = 0;
  bool cond1 = false;  // R(x,U) contains some m*{1..n}, all x
  bool cond4 = false;  // union_m intersect_i T^{-mi} U = X
  bool cond5 = false;  // finite F with l + m*{1..n} in R(x,U) for all l
  std::optional<Index> cond4_counter_x;
  bool agree() const noexcept { return cond1 == cond4 && cond4 == cond5; }
};

std::vector<ThicknessCell> thickness_equivalence_check(
    Index k, const std::vector<std::vector<Index>>& u_family, Index n_range);

struct GapCell {
  Index t = 0;
  Index n = 0;
  std::optional<Index> gap;  // nullopt: empty quotient
  bool flagged = false;
};

// gap_syndeticity((R(x,U) - t)/n) for 0 <= t <= t_range and n <= n_range
// coprime to modulus, flagging gaps above threshold or empty quotients.
std::vector<GapCell> translate_quotient_syndetic_check(
    const SystemSpec& sys, const PointSpec& x, const OpenSetSpec& u, Index modulus,
    Index t_range, Index n_range, Window w, Index threshold);

}  // namespace gplab
