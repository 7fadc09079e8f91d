#include "gplab/natset.hpp"

#include <algorithm>
#include <bit>

namespace gplab {

namespace {

// Member-count / window-size ratio at or above which the bitmap is used.
constexpr Index kDenseRatio = 64;

}  // namespace

NatSet NatSet::from_sorted_unique(Index hi, std::vector<Index> members) {
  NatSet s;
  s.hi_ = hi;
  s.count_ = members.size();
  s.dense_ = hi > 0 && static_cast<Index>(members.size()) * kDenseRatio >= hi;
  if (s.dense_) {
    s.bits_.assign(static_cast<std::size_t>((hi + 63) / 64), 0);
    for (Index m : members) {
      auto bit = static_cast<std::uint64_t>(m - 1);
      s.bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }
  } else {
    s.members_ = std::move(members);
  }
  return s;
}

NatSet NatSet::from_members(Index hi, std::vector<Index> members) {
  if (hi < 0) throw DomainError("window bound must be non-negative");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < 1 || members.back() > hi))
    throw DomainError("member outside window [1, " + std::to_string(hi) + "]");
  return from_sorted_unique(hi, std::move(members));
}

NatSet NatSet::empty_on(Index hi) { return from_members(hi, {}); }

NatSet NatSet::full(Index hi) {
  return from_predicate(hi, [](Index) { return true; });
}

NatSet::Builder::Builder(Index hi) : hi_(hi) {
  if (hi < 0) throw DomainError("window bound must be non-negative");
}

void NatSet::Builder::add(Index m) {
  if (m < 1 || m > hi_) throw DomainError("member outside window");
  if (!members_.empty() && m <= members_.back())
    throw DomainError("builder members must be strictly increasing");
  members_.push_back(m);
}

NatSet NatSet::Builder::finish() && {
  return from_sorted_unique(hi_, std::move(members_));
}

bool NatSet::contains_sparse(Index m) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Index NatSet::next_dense(Index after) const noexcept {
  // first member strictly greater than `after`, or 0
  auto bit = static_cast<std::uint64_t>(after);  // bit index of after+1
  if (after >= hi_) return 0;
  std::size_t word = bit >> 6;
  std::uint64_t w = bits_[word] & (~std::uint64_t{0} << (bit & 63));
  while (true) {
    if (w != 0) {
      Index m = static_cast<Index>(word * 64 + static_cast<std::size_t>(std::countr_zero(w))) + 1;
      return m <= hi_ ? m : 0;
    }
    if (++word >= bits_.size()) return 0;
    w = bits_[word];
  }
}

NatSet::const_iterator& NatSet::const_iterator::operator++() noexcept {
  if (set_->dense_) {
    value_ = set_->next_dense(value_);
  } else {
    ++pos_;
    value_ = pos_ < set_->members_.size() ? set_->members_[pos_] : 0;
  }
  return *this;
}

NatSet::const_iterator NatSet::begin() const noexcept {
  if (count_ == 0) return end();
  if (dense_) return {this, 0, next_dense(0)};
  return {this, 0, members_.front()};
}

Index NatSet::min() const {
  if (empty()) throw DomainError("min of empty set");
  return *begin();
}

Index NatSet::max() const {
  if (empty()) throw DomainError("max of empty set");
  if (!dense_) return members_.back();
  for (std::size_t w = bits_.size(); w-- > 0;)
    if (bits_[w] != 0)
      return static_cast<Index>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits_[w]))) + 1;
  return 0;
}

std::vector<Index> NatSet::to_vector() const {
  if (!dense_) return members_;
  std::vector<Index> out;
  out.reserve(count_);
  for (Index m : *this) out.push_back(m);
  return out;
}

bool operator==(const NatSet& a, const NatSet& b) noexcept {
  if (a.hi_ != b.hi_ || a.count_ != b.count_) return false;
  if (a.dense_ == b.dense_) return a.dense_ ? a.bits_ == b.bits_ : a.members_ == b.members_;
  return std::equal(a.begin(), a.end(), b.begin());
}

std::string NatSet::str(std::size_t max_items) const {
  std::string s = "{";
  std::size_t i = 0;
  for (Index m : *this) {
    if (i == max_items) {
      s += ",...";
      break;
    }
    if (i++) s += ",";
    s += std::to_string(m);
  }
  s += "} in [1," + std::to_string(hi_) + "]";
  return s;
}

NatSet quotient(const NatSet& a, Index n) {
  if (n < 1) throw DomainError("quotient divisor must be positive");
  NatSet::Builder b(a.hi() / n);
  if (a.is_dense()) {
    for (Index m = 1; m * n <= a.hi(); ++m)
      if (a.contains(m * n)) b.add(m);
  } else {
    for (Index x : a)
      if (x % n == 0) b.add(x / n);
  }
  return std::move(b).finish();
}

NatSet translate(const NatSet& a, Index t) {
  Index hi = std::max<Index>(0, checked_add(a.hi(), -t));
  NatSet::Builder b(hi);
  for (Index x : a) {
    Index m = x - t;
    if (m >= 1 && m <= hi) b.add(m);
  }
  return std::move(b).finish();
}

NatSet restrict_to(const NatSet& a, Index hi) {
  NatSet::Builder b(hi);
  for (Index x : a) {
    if (x > hi) break;
    b.add(x);
  }
  return std::move(b).finish();
}

NatSet set_union(const NatSet& a, const NatSet& b) {
  std::vector<Index> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return NatSet::from_members(std::max(a.hi(), b.hi()), std::move(out));
}

NatSet set_intersection(const NatSet& a, const NatSet& b) {
  const NatSet& small = a.size() <= b.size() ? a : b;
  const NatSet& large = a.size() <= b.size() ? b : a;
  NatSet::Builder out(std::min(a.hi(), b.hi()));
  for (Index x : small) {
    if (x > std::min(a.hi(), b.hi())) break;
    if (large.contains(x)) out.add(x);
  }
  return std::move(out).finish();
}

NatSet set_difference(const NatSet& a, const NatSet& b) {
  NatSet::Builder out(a.hi());
  for (Index x : a)
    if (!b.contains(x)) out.add(x);
  return std::move(out).finish();
}

NatSet complement(const NatSet& a) {
  return NatSet::from_predicate(a.hi(), [&](Index m) { return !a.contains(m); });
}

PeriodicSet::PeriodicSet(Index modulus, std::vector<Index> residues)
    : modulus_(modulus) {
  if (modulus < 1) throw DomainError("period must be positive");
  member_.assign(static_cast<std::size_t>(modulus), false);
  for (Index r : residues) {
    if (r < 0 || r >= modulus)
      throw DomainError("residue " + std::to_string(r) + " outside [0, " +
                        std::to_string(modulus) + ")");
    member_[static_cast<std::size_t>(r)] = true;
  }
  for (Index r = 0; r < modulus; ++r)
    if (member_[static_cast<std::size_t>(r)]) residues_.push_back(r);
}

NatSet from_periodic(const PeriodicSet& p, Window w) {
  return NatSet::from_predicate(w.hi, [&](Index m) { return p.contains(m); });
}

CosetSpec::CosetSpec(Index n, Kind kind, Index modulus)
    : n_(n), kind_(kind), modulus_(modulus) {
  if (n < 1) throw DomainError("coset dilation must be positive");
  if (modulus < 1) throw DomainError("semigroup modulus must be positive");
}

std::string CosetSpec::str() const {
  std::string semigroup;
  switch (kind_) {
    case Kind::Full: semigroup = "N"; break;
    case Kind::Coprime: semigroup = "S_" + std::to_string(modulus_); break;
    case Kind::CongruenceOne: semigroup = "S_{" + std::to_string(modulus_) + ",1}"; break;
  }
  return n_ == 1 ? semigroup : std::to_string(n_) + "*" + semigroup;
}

}  // namespace gplab
