#pragma once

// Witnesses for density transfer to translates.
//
// For N >= 1 and t in Z put g = gcd(N, t) (g = N when t = 0) and K = N/g.
// Given F inside S_K, the witness picks the largest residue class F' of F
// modulo K and integers a, b, c with
//   b * prod(F') - a * K = t / g,   gcd(c, K) = 1,
//   c * g * f - a * N = t  (mod f * N)   for every f in F'.
// Every witness is checked against these identities before it is returned.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/density.hpp"
#include "gplab/natset.hpp"

namespace gplab {

struct TranslateWitness {
  Index n_mod = 1;  // N
  Index t = 0;
  Index g = 1;      // gcd(N, t)
  Index k = 1;      // N / g
  std::vector<Index> f_prime;  // ascending
  Index f0 = 0;     // min F'
  Index product = 1;  // prod F'
  Index a = 0;
  Index b = 1;
  Index c = 1;
  std::string str() const;
};

// gcd(N, t) with the convention gcd(N, 0) = N.
Index translate_gcd(Index n_mod, Index t);

TranslateWitness solve_translate_witness(Index n_mod, Index t, std::span<const Index> f);
TranslateWitness solve_translate_witness(Index n_mod, Index t, const NatSet& f);

// Re-checks every identity of a witness; returns an empty string when all
// hold, otherwise a description of the first failure.
std::string check_translate_witness(const TranslateWitness& w);

struct DensityTransfer {
  TranslateWitness witness;
  NatSet target;             // (A + t) / g
  Index dilation = 0;        // best s = K*n + c; 0 when no s fits the window
  Index n = 0;
  Rational ratio;            // |sF cap target| / |F|
  std::string diagnostic;
};

// Scans s = K*n + c for n = 0..search_bound while s*max(F) stays inside the
// target window; keeps the largest ratio, least s on ties.
DensityTransfer verify_density_transfer(const NatSet& a, Index t, Index n_mod,
                                        std::span<const Index> f, Index search_bound);

struct BoundRow {
  Index t = 0;
  Index g = 1;
  Index k = 1;
  Rational bound;     // g / (2^(2r+2) * N)
  Rational observed;  // min over grids of the best ratio
  std::size_t grids = 0;
  bool below = false;  // observed < bound
  std::string worst_grid;
  Index worst_dilation = 0;
};

struct BoundReport {
  Index n_mod = 1;
  unsigned r = 1;
  std::vector<BoundRow> rows;
  bool any_below() const noexcept;
};

// For every |t| <= t_range, runs verify_density_transfer over the default grid
// family of S_K (fitting the target window) and compares the observed ratio
// to the bound. A grid whose witness overflows or whose dilations all leave
// the window is replaced by its longest prefix that works. Rows with no
// admissible grid are reported with 0 grids.
BoundReport iprstar_bound_check(const NatSet& a, unsigned r, Index n_mod, Index t_range,
                                Index search_bound = 64);

}  // namespace gplab
