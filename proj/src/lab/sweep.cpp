#include <algorithm>
#include <random>
#include <unordered_map>

#include "gplab/lab.hpp"

namespace gplab {

namespace {

struct SigEntry {
  bool seen = false;
  bool ok = false;
  Index s = 0;
  std::uint64_t count = 0;
};

bool verified(const PeriodicSet& p, const CosetSpec& coset, std::optional<Index> s,
              const std::vector<Index>& f) {
  if (!s || !coset.in_coset(*s)) return false;
  for (Index x : f)
    if (!p.contains(*s * x)) return false;
  return true;
}

std::vector<Index> subset_of(const std::vector<Index>& pool, std::uint32_t mask) {
  std::vector<Index> f;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (mask >> i & 1) f.push_back(pool[i]);
  return f;
}

}  // namespace

std::vector<Index> odd_numbers(Index max) {
  std::vector<Index> out;
  for (Index x = 1; x <= max; x += 2) out.push_back(x);
  return out;
}

ThickSweep thick_dilation_sweep(const PeriodicSet& p, const std::vector<Index>& pool,
                                const CosetSpec& coset, std::size_t samples, std::uint64_t seed) {
  if (pool.empty() || pool.size() > 30) throw DomainError("sweep pool must hold 1..30 elements");
  const Index q = p.modulus();

  // slot[i]: index of pool[i]'s residue among the distinct residues of the pool
  std::vector<Index> distinct;
  std::vector<std::size_t> slot;
  for (Index x : pool) {
    Index r = mod(x, q);
    auto it = std::find(distinct.begin(), distinct.end(), r);
    slot.push_back(static_cast<std::size_t>(it - distinct.begin()));
    if (it == distinct.end()) distinct.push_back(r);
  }
  if (distinct.size() > 30) throw DomainError("too many residue classes");

  std::vector<SigEntry> dense;
  std::unordered_map<std::uint32_t, SigEntry> sparse;
  const bool use_dense = distinct.size() <= 20;
  if (use_dense) dense.resize(std::size_t{1} << distinct.size());
  auto entry = [&](std::uint32_t sig) -> SigEntry& { return use_dense ? dense[sig] : sparse[sig]; };

  ThickSweep out;
  std::vector<std::uint32_t> counts(distinct.size(), 0);
  std::uint32_t sig = 0, mask = 0;
  const std::uint32_t total = std::uint32_t{1} << pool.size();
  for (std::uint32_t i = 1; i < total; ++i) {
    const auto bit = static_cast<std::size_t>(__builtin_ctz(i));
    const std::size_t sl = slot[bit];
    mask ^= std::uint32_t{1} << bit;
    if (mask >> bit & 1) {
      if (counts[sl]++ == 0) sig |= std::uint32_t{1} << sl;
    } else if (--counts[sl] == 0) {
      sig &= ~(std::uint32_t{1} << sl);
    }
    SigEntry& e = entry(sig);
    if (!e.seen) {
      auto f = subset_of(pool, mask);
      auto s = decide_thick_dilation(p, f, coset);
      e.seen = true;
      e.ok = verified(p, coset, s, f);
      e.s = s.value_or(0);
      ++out.signatures;
    }
    ++e.count;
    if (!e.ok && out.failures++ == 0) out.first_failure = subset_of(pool, mask);
  }
  out.subsets = total - 1;
  auto tally = [&](const SigEntry& e) {
    if (e.seen && e.ok) out.dilations[e.s] += e.count;
  };
  if (use_dense) for (const auto& e : dense) tally(e);
  else for (const auto& [k, e] : sparse) tally(e);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, total - 1);
  for (std::size_t n = 0; n < samples; ++n) {
    auto f = subset_of(pool, pick(rng));
    ++out.sampled;
    if (!verified(p, coset, decide_thick_dilation(p, f, coset), f)) ++out.sample_failures;
  }
  return out;
}

}  // namespace gplab
