#pragma once

// Finite-sums sets and window-relative IP_r / IP_r* checks.
//
// Generators may repeat: FS(x, x) = {x, 2x}. Every "confirmed" answer is
// relative to the window it was computed on; a violating FS set may exist
// beyond it, so window-relative ranks can underestimate true ranks.

#include <optional>
#include <string>
#include <vector>

#include "gplab/arith.hpp"
#include "gplab/natset.hpp"

namespace gplab {

/// Generators x_1 <= ... <= x_r of a finite-sums set.
struct FsSpec {
  std::vector<Index> generators;
  std::string str() const;
  friend bool operator==(const FsSpec&, const FsSpec&) = default;
};

// All non-empty subset sums, deduplicated, on the window [1, sum].
NatSet fs_expand(const FsSpec& spec);

// Least non-decreasing r-tuple with entries <= gen_bound whose expansion lies
// in A (lexicographic order), or nullopt.
std::optional<FsSpec> contains_ip_r(const NatSet& a, unsigned r, Index gen_bound);

// Least FS set of size r, fully inside A's window, that misses A; nullopt
// means A meets every such set ("confirmed" on this window).
std::optional<FsSpec> ip_r_star_violator(const NatSet& a, unsigned r);

struct RankReport {
  Window window;
  // Least r <= cap for which A is window-IP_r*; nullopt when none is.
  std::optional<unsigned> rank;
  unsigned cap = 0;
  // For rank r > 1: an FS set of size r-1 inside the window avoiding A.
  std::optional<FsSpec> witness;
};

RankReport window_rank(const NatSet& a, unsigned cap);

struct CoverReport {
  FsSpec generators;        // F = FS(generators) inside the complement of A
  NatSet f;                 // F itself
  std::vector<Index> f0;    // F cup {0}, ascending
  Index margin = 0;         // max(F0): the cover is checked on [1, hi - margin]
  std::vector<Index> uncovered;  // m in [1, hi - margin] not in A - F0
  bool covered = false;
  std::size_t translates = 0;  // |F0 + 1| = |F0|
  Index bound = 0;             // 2^s with s = |generators|
};

// Greedy maximal FS set F in the complement of A (candidates ascending,
// each candidate re-added while possible), then checks A - (F cup {0})
// covers the window up to a margin. Throws DomainError when F would need
// more than size_cap generators.
CoverReport covering_translates(const NatSet& a, unsigned size_cap = 24);

struct RankMinimizer {
  Index n = 0;
  unsigned rank = 0;
  std::vector<std::optional<unsigned>> ranks;  // ranks[n-1] = rank(A/n)
};

// Window rank of A/n for n = 1..n_bound; returns the least n attaining the
// smallest rank. Throws DomainError when no A/n has rank <= cap.
RankMinimizer rank_minimizing_n(const NatSet& a, Index n_bound, unsigned cap);

}  // namespace gplab
