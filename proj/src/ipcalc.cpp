#include "gplab/ipcalc.hpp"

#include <algorithm>

namespace gplab {

std::string FsSpec::str() const {
  std::string s = "FS(";
  for (std::size_t i = 0; i < generators.size(); ++i)
    s += (i ? "," : "") + std::to_string(generators[i]);
  return s + ")";
}

NatSet fs_expand(const FsSpec& spec) {
  if (spec.generators.empty()) throw DomainError("FS needs at least one generator");
  std::vector<Index> sums;
  Index total = 0;
  for (Index x : spec.generators) {
    if (x < 1) throw DomainError("FS generators must be positive");
    total = checked_add(total, x);
    std::size_t n = sums.size();
    for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + x);
    sums.push_back(x);
  }
  return NatSet::from_members(total, std::move(sums));
}

namespace {

// Depth-first search over non-decreasing generator tuples whose partial
// expansions stay inside `a`. A tuple's expansion contains the expansion of
// every prefix, so a failing prefix prunes its whole subtree.
class FsSearch {
 public:
  FsSearch(const NatSet& a, unsigned r, Index gen_bound)
      : a_(a), r_(r), gen_bound_(std::min(gen_bound, a.hi())), members_(a.to_vector()) {}

  std::optional<FsSpec> run() {
    if (r_ == 0) throw DomainError("IP rank must be positive");
    gens_.clear();
    sums_.clear();
    if (descend(0)) return FsSpec{gens_};
    return std::nullopt;
  }

 private:
  bool descend(std::size_t first) {
    if (gens_.size() == r_) return true;
    Index max_sum = sums_.empty() ? 0 : *std::max_element(sums_.begin(), sums_.end());
    for (std::size_t idx = first; idx < members_.size(); ++idx) {
      Index x = members_[idx];
      if (x > gen_bound_ || x + max_sum > a_.hi()) break;
      bool ok = true;
      for (Index s : sums_)
        if (!a_.contains(s + x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      std::size_t n = sums_.size();
      for (std::size_t i = 0; i < n; ++i) sums_.push_back(sums_[i] + x);
      sums_.push_back(x);
      gens_.push_back(x);
      if (descend(idx)) return true;
      gens_.pop_back();
      sums_.resize(n);
    }
    return false;
  }

  const NatSet& a_;
  unsigned r_;
  Index gen_bound_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
  std::vector<Index> sums_;
};

}  // namespace

std::optional<FsSpec> contains_ip_r(const NatSet& a, unsigned r, Index gen_bound) {
  return FsSearch(a, r, gen_bound).run();
}

std::optional<FsSpec> ip_r_star_violator(const NatSet& a, unsigned r) {
  // FS sets inside the window that miss A are exactly FS sets inside the
  // complement of A.
  return contains_ip_r(complement(a), r, a.hi());
}

RankReport window_rank(const NatSet& a, unsigned cap) {
  RankReport rep;
  rep.window = a.window();
  rep.cap = cap;
  NatSet comp = complement(a);
  std::optional<FsSpec> prev;
  for (unsigned r = 1; r <= cap; ++r) {
    auto v = contains_ip_r(comp, r, comp.hi());
    if (!v) {
      rep.rank = r;
      rep.witness = prev;
      return rep;
    }
    prev = std::move(v);
  }
  rep.witness = prev;
  return rep;
}

CoverReport covering_translates(const NatSet& a, unsigned size_cap) {
  if (a.empty()) throw DomainError("covering translates needs a non-empty set");
  const Index hi = a.hi();
  std::vector<Index> gens, sums;
  for (Index x = 1; x <= hi; ++x) {
    while (true) {
      if (a.contains(x)) break;
      bool ok = true;
      for (Index s : sums) {
        Index y = s + x;
        if (y > hi || a.contains(y)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      if (gens.size() == size_cap)
        throw DomainError("complement holds an FS set with more than " +
                          std::to_string(size_cap) +
                          " generators; the set is likely not IP_0* on this window");
      std::size_t n = sums.size();
      for (std::size_t i = 0; i < n; ++i) sums.push_back(sums[i] + x);
      sums.push_back(x);
      gens.push_back(x);
    }
  }

  CoverReport rep;
  rep.generators = FsSpec{gens};
  rep.f = gens.empty() ? NatSet::empty_on(0) : fs_expand(rep.generators);
  rep.f0.push_back(0);
  for (Index v : rep.f) rep.f0.push_back(v);
  rep.margin = rep.f0.back();
  for (Index m = 1; m + rep.margin <= hi; ++m) {
    bool hit = false;
    for (Index f : rep.f0)
      if (a.contains(m + f)) {
        hit = true;
        break;
      }
    if (!hit) rep.uncovered.push_back(m);
  }
  rep.covered = rep.uncovered.empty();
  rep.translates = rep.f0.size();
  rep.bound = Index{1} << gens.size();
  return rep;
}

RankMinimizer rank_minimizing_n(const NatSet& a, Index n_bound, unsigned cap) {
  if (n_bound < 1) throw DomainError("n_bound must be positive");
  RankMinimizer best;
  for (Index n = 1; n <= n_bound; ++n) {
    auto rep = window_rank(quotient(a, n), cap);
    best.ranks.push_back(rep.rank);
    if (rep.rank && (best.n == 0 || *rep.rank < best.rank)) {
      best.n = n;
      best.rank = *rep.rank;
    }
  }
  if (best.n == 0)
    throw DomainError("no quotient A/n with n <= " + std::to_string(n_bound) +
                      " has window rank <= " + std::to_string(cap));
  return best;
}

}  // namespace gplab
