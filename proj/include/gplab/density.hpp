#pragma once

// Additive syndeticity and multiplicative density measurements on NatSets.
//
// Only periodic inputs admit exact answers (decide_thick_dilation). The
// density profile over windowed sets is empirical: it records the finite
// family of test sets and the dilation bound it used so the numbers can be
// reproduced, and it is neither an upper nor a lower bound for the true
// multiplicative upper Banach density.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/natset.hpp"

namespace gplab {

// Largest gap between consecutive members, with 0 and hi+1 acting as virtual
// members at the window edges. nullopt for the empty set.
std::optional<Index> gap_syndeticity(const NatSet& a);

// Least s in the coset dilation()*S with s*F contained in P, or nullopt if no
// such s exists. Exact: the search covers one full period of the residues
// that decide membership. Throws OverflowError if s*max(F) would exceed the
// absolute bound before the period is exhausted.
std::optional<Index> decide_thick_dilation(const PeriodicSet& p,
                                           std::span<const Index> f,
                                           const CosetSpec& s);

/// A finite set F used to probe multiplicative density.
struct GridSpec {
  enum class Style { Power, Prime, Explicit };
  Style style = Style::Power;
  Index scale = 1;                   // every element is scale * (...)
  Index base = 2;                    // Power: {scale*base^e : 1 <= e <= length}
  unsigned length = 1;
  std::vector<Index> primes;         // Prime: scale * prod p_i^{e_i}, 1 <= e_i <= length
  std::vector<Index> explicit_set;   // Explicit

  static GridSpec power(Index base, unsigned length, Index scale = 1);
  static GridSpec prime(std::vector<Index> primes, unsigned max_exponent,
                        Index scale = 1);
  static GridSpec explicit_elements(std::vector<Index> elements);

  std::vector<Index> elements() const;  // ascending, may throw OverflowError
  std::string str() const;
};

// Power grids over the three least primes of the semigroup and prime grids
// with k = 1..4 primes of the semigroup (exponents 1..k), each scaled by the
// coset dilation, kept only when every element times s_bound fits in hi.
std::vector<GridSpec> default_grid_family(const CosetSpec& coset, Index hi,
                                          Index s_bound);

struct DensityEntry {
  GridSpec grid;
  std::vector<Index> test_set;
  Index best_dilation = 0;  // 0 when no s <= s_bound of S was admissible
  Rational ratio;           // |sF cap A| / |F| for the best s
};

struct DensityProfile {
  CosetSpec coset = CosetSpec::full();
  Index s_bound = 0;
  Window window;
  std::vector<DensityEntry> entries;
  Rational summary;  // min ratio over entries; 1 for an empty family
  static constexpr const char* kind = "empirical";
};

// For each grid F (F must lie in the coset), the largest |sF cap A|/|F| over
// s in the semigroup with s <= s_bound (least s on ties).
DensityProfile density_profile(const NatSet& a, const CosetSpec& coset,
                               const std::vector<GridSpec>& grids, Index s_bound);

// Least n on the shared window lying in strictly more than eta*k of the k
// sets, or nullopt. eta must lie in [0, 1).
std::optional<Index> pigeonhole_select(std::span<const NatSet> sets,
                                       const Rational& eta);

}  // namespace gplab
