#pragma once

// Finite sets of positive integers living in a window [1, hi].
//
// NatSet is immutable. Dense sets (at least one member per 64 window slots)
// are stored as a bitmap, sparser ones as a sorted vector; both give the same
// ascending iteration order. Every operation states the window of its result
// explicitly: nothing outside [1, hi] is ever considered a member.

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "gplab/arith.hpp"

namespace gplab {

// Truncation [1, hi] of the positive integers. hi == 0 is the empty window,
// which arises when a translate or quotient clips everything away.
struct Window {
  Index hi = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

class NatSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Index;
    using difference_type = std::ptrdiff_t;
    using pointer = const Index*;
    using reference = Index;

    const_iterator() = default;
    Index operator*() const noexcept { return value_; }
    const_iterator& operator++() noexcept;
    const_iterator operator++(int) noexcept {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
      return a.value_ == b.value_;
    }

   private:
    friend class NatSet;
    const_iterator(const NatSet* set, std::size_t pos, Index value)
        : set_(set), pos_(pos), value_(value) {}
    const NatSet* set_ = nullptr;
    std::size_t pos_ = 0;  // sparse: index into members_
    Index value_ = 0;      // 0 marks end()
  };

  // Empty set on the empty window.
  NatSet() = default;

  // Members outside [1, hi] raise DomainError; duplicates are merged.
  static NatSet from_members(Index hi, std::vector<Index> members);
  static NatSet empty_on(Index hi);
  static NatSet full(Index hi);

  template <class Pred>
  static NatSet from_predicate(Index hi, Pred&& pred) {
    Builder b(hi);
    for (Index m = 1; m <= hi; ++m)
      if (pred(m)) b.add(m);
    return std::move(b).finish();
  }

  // Incremental construction in ascending order.
  class Builder {
   public:
    explicit Builder(Index hi);
    // m must exceed every previously added member and lie in [1, hi].
    void add(Index m);
    NatSet finish() &&;

   private:
    Index hi_;
    std::vector<Index> members_;
  };

  Window window() const noexcept { return {hi_}; }
  Index hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_dense() const noexcept { return dense_; }

  bool contains(Index m) const noexcept {
    if (m < 1 || m > hi_) return false;
    if (dense_) {
      auto bit = static_cast<std::uint64_t>(m - 1);
      return (bits_[bit >> 6] >> (bit & 63)) & 1u;
    }
    return contains_sparse(m);
  }

  Index min() const;  // DomainError when empty
  Index max() const;

  const_iterator begin() const noexcept;
  const_iterator end() const noexcept { return {this, 0, 0}; }

  std::vector<Index> to_vector() const;

  // Same window and same members.
  friend bool operator==(const NatSet& a, const NatSet& b) noexcept;

  // Members as "{a,b,c}" with a trailing window, for diagnostics.
  std::string str(std::size_t max_items = 20) const;

 private:
  friend class const_iterator;
  bool contains_sparse(Index m) const noexcept;
  Index next_dense(Index after) const noexcept;
  static NatSet from_sorted_unique(Index hi, std::vector<Index> members);

  Index hi_ = 0;
  std::size_t count_ = 0;
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<Index> members_;
};

// A / n = {m : m*n in A} on the window [1, floor(hi/n)].
NatSet quotient(const NatSet& a, Index n);

// A - t = {m : m + t in A} on the window [1, hi - t]. For t < 0 the window
// grows by |t|: membership of every m <= hi - t is determined by A.
NatSet translate(const NatSet& a, Index t);

NatSet restrict_to(const NatSet& a, Index hi);
NatSet set_union(const NatSet& a, const NatSet& b);         // window max
NatSet set_intersection(const NatSet& a, const NatSet& b);  // window min
NatSet set_difference(const NatSet& a, const NatSet& b);    // window of a
NatSet complement(const NatSet& a);                         // in a's window

/// {m in N : m mod q in residues}, with no window of its own.
class PeriodicSet {
 public:
  PeriodicSet(Index modulus, std::vector<Index> residues);

  Index modulus() const noexcept { return modulus_; }
  const std::vector<Index>& residues() const noexcept { return residues_; }
  bool contains(Index m) const noexcept {
    return m >= 1 && member_[static_cast<std::size_t>(m % modulus_)];
  }
  bool has_residue(Index r) const noexcept {
    return member_[static_cast<std::size_t>(mod(r, modulus_))];
  }

 private:
  Index modulus_;
  std::vector<Index> residues_;  // sorted, unique, in [0, q)
  std::vector<bool> member_;
};

NatSet from_periodic(const PeriodicSet& p, Window w);

/// A coset n*S of one of the multiplicative subsemigroups used throughout:
/// all of N, S_N = {s : gcd(s, N) = 1}, or S_{N,1} = {s : s = 1 mod N}.
class CosetSpec {
 public:
  enum class Kind { Full, Coprime, CongruenceOne };

  static CosetSpec full(Index n = 1) { return CosetSpec(n, Kind::Full, 1); }
  static CosetSpec coprime(Index modulus, Index n = 1) {
    return CosetSpec(n, Kind::Coprime, modulus);
  }
  static CosetSpec congruence_one(Index modulus, Index n = 1) {
    return CosetSpec(n, Kind::CongruenceOne, modulus);
  }

  Index dilation() const noexcept { return n_; }
  Kind kind() const noexcept { return kind_; }
  Index modulus() const noexcept { return modulus_; }

  bool in_semigroup(Index s) const noexcept {
    if (s < 1) return false;
    switch (kind_) {
      case Kind::Full: return true;
      case Kind::Coprime: return gcd(s, modulus_) == 1;
      case Kind::CongruenceOne: return s % modulus_ == 1 % modulus_;
    }
    return false;
  }
  bool in_coset(Index x) const noexcept {
    return x >= 1 && x % n_ == 0 && in_semigroup(x / n_);
  }

  std::string str() const;

 private:
  CosetSpec(Index n, Kind kind, Index modulus);
  Index n_;
  Kind kind_;
  Index modulus_;
};

}  // namespace gplab
