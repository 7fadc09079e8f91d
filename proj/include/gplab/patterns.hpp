#pragma once

// Exhaustive searches for multiplicative and additive configurations.
//
// Every search returns the least witness in a fixed parameter order and
// re-checks the witness by direct membership before returning it. A missing
// witness only means none exists inside the searched window and bounds.

#include <optional>
#include <string>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/natset.hpp"

namespace gplab {

/// {n*m, n*m^2, ..., n*m^length}
struct GpWitness {
  Index n = 0;
  Index m = 0;
  unsigned length = 0;
  std::vector<Index> elements() const;
  friend bool operator==(const GpWitness&, const GpWitness&) = default;
};

/// {c*(a + i*d)^j : 1 <= i, j <= length}
struct GeoArithWitness {
  Index a = 0;
  Index c = 0;
  Index d = 0;
  unsigned length = 0;
  std::vector<Index> elements() const;  // row-major in (i, j), may repeat
  friend bool operator==(const GeoArithWitness&, const GeoArithWitness&) = default;
};

/// {start, start + step, ..., start + (length-1)*step}
struct ApWitness {
  Index start = 0;
  Index step = 0;
  unsigned length = 0;
  std::vector<Index> elements() const;
  friend bool operator==(const ApWitness&, const ApWitness&) = default;
};

// Order: m ascending in [2, m_bound], then n ascending, stopping each m once
// n*m^length leaves the window.
std::optional<GpWitness> find_gp(const NatSet& a, unsigned length, Index m_bound);

struct GeoArithBounds {
  Index a_max = 0;
  Index c_max = 0;
  Index d_max = 0;
};

struct GeoArithResult {
  std::optional<GeoArithWitness> witness;
  // No witness, and some in-window candidate went unexamined: either the
  // a/c/d caps excluded it or c*(a+length*d)^length overflowed an absolute
  // bound below hi. The miss is then not window-exhaustive.
  bool truncated = false;
};

// Order: a, then c, then d ascending.
GeoArithResult find_geo_arith(const NatSet& a, unsigned length,
                              const GeoArithBounds& bounds);

// Order: start ascending over members of E, then step ascending.
std::optional<ApWitness> ap_search(const NatSet& e, unsigned length);

// Calls visit(witness) on each AP of the given length in E, in ap_search
// order, until visit returns true.
template <class Visit>
void for_each_ap(const NatSet& e, unsigned length, Visit&& visit);

struct GpDensityResult {
  std::optional<GpWitness> witness;
  Index dilation = 0;           // s that produced the witness
  std::vector<Index> exponents; // {e : s*m^e in A}
  std::optional<ApWitness> exponent_ap;
};

// Dilation-then-exponent-AP reduction: for s = 1..s_bound, if
// |s*{m, ..., m^big_l} cap A| >= eps * big_l, look for an AP (e0, delta) of
// length `length` in the exponent set; it gives the GP with ratio m^delta and
// n = s*m^(e0-delta) whenever that n is an integer.
GpDensityResult gp_via_density(const NatSet& a, Index m, unsigned big_l,
                               const Rational& eps, unsigned length, Index s_bound);

template <class Visit>
void for_each_ap(const NatSet& e, unsigned length, Visit&& visit) {
  if (length == 0) throw DomainError("progression length must be positive");
  for (Index start : e) {
    if (length == 1) {
      if (visit(ApWitness{start, 1, 1})) return;
      continue;
    }
    for (Index step = 1; start + static_cast<Index>(length - 1) * step <= e.hi(); ++step) {
      bool ok = true;
      for (unsigned i = 1; i < length && ok; ++i) ok = e.contains(start + i * step);
      if (ok && visit(ApWitness{start, step, length})) return;
    }
  }
}

}  // namespace gplab
