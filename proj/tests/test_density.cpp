#include <doctest.h>

#include <random>

#include "gplab/density.hpp"
#include "oracles.hpp"

using namespace gplab;

namespace {

// Least s <= limit in the coset with s*F inside P, by direct membership.
std::optional<Index> brute_dilation(const PeriodicSet& p, const std::vector<Index>& f,
                                    const CosetSpec& s, Index limit) {
  for (Index x = 1; x <= limit; ++x) {
    if (!s.in_coset(x)) continue;
    bool ok = true;
    for (Index v : f) ok = ok && p.contains(x * v);
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("gap_syndeticity examples") {
  CHECK(gap_syndeticity(from_periodic(PeriodicSet(2, {1}), Window{100})) == 2);
  CHECK(gap_syndeticity(NatSet::full(100)) == 1);
  auto holed = NatSet::from_predicate(100, [](Index m) { return m < 41 || m > 60; });
  CHECK(gap_syndeticity(holed) == 21);
  CHECK_FALSE(gap_syndeticity(NatSet::empty_on(10)).has_value());
  // window edges act as members
  CHECK(gap_syndeticity(NatSet::from_members(10, {5})) == 6);
}

TEST_CASE("decide_thick_dilation examples") {
  std::vector<Index> f123{1, 2, 3};
  CHECK(decide_thick_dilation(PeriodicSet(2, {0}), f123, CosetSpec::full()) == 2);
  std::vector<Index> f12{1, 2};
  CHECK_FALSE(decide_thick_dilation(PeriodicSet(2, {1}), f12, CosetSpec::full()).has_value());
  std::vector<Index> f2135{2, 6, 10};
  CHECK(decide_thick_dilation(PeriodicSet(4, {2}), f2135, CosetSpec::coprime(2)) == 1);
  CHECK_THROWS_AS(decide_thick_dilation(PeriodicSet(2, {0}), std::vector<Index>{}, CosetSpec::full()),
                  DomainError);
}

TEST_CASE("decide_thick_dilation overflow") {
  ScopedAbsoluteBound bound(1000);
  std::vector<Index> f{999};
  CHECK_THROWS_AS(decide_thick_dilation(PeriodicSet(7, {0}), f, CosetSpec::full()), OverflowError);
}

TEST_CASE("decide_thick_dilation matches a direct search") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 3000; ++iter) {
    Index q = 1 + static_cast<Index>(rng() % 12);
    std::vector<Index> res;
    for (Index r = 0; r < q; ++r)
      if (rng() % 2) res.push_back(r);
    PeriodicSet p(q, res);
    std::vector<Index> f;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 4); i < n; ++i)
      f.push_back(1 + static_cast<Index>(rng() % 40));
    Index modulus = 1 + static_cast<Index>(rng() % 6), dil = 1 + static_cast<Index>(rng() % 3);
    CosetSpec s = (rng() % 3 == 0)   ? CosetSpec::full(dil)
                  : (rng() % 2 == 0) ? CosetSpec::coprime(modulus, dil)
                                     : CosetSpec::congruence_one(modulus, dil);
    auto got = decide_thick_dilation(p, f, s);
    // one period of u covers every case; 2 periods leaves room for certainty
    auto want = brute_dilation(p, f, s, 2 * dil * q * modulus);
    REQUIRE(got == want);
  }
}

TEST_CASE("a full coset is thick for every F inside it") {
  // P = 2N-1 with S = S_2: every F of odd numbers has s = 1
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<Index> f;
    for (int i = 0; i < 5; ++i) f.push_back(2 * static_cast<Index>(rng() % 100) + 1);
    CHECK(decide_thick_dilation(PeriodicSet(2, {1}), f, CosetSpec::coprime(2)).has_value());
  }
}

TEST_CASE("density_profile examples") {
  auto coset = CosetSpec::full();
  auto full = density_profile(NatSet::full(1000), coset, default_grid_family(coset, 1000, 4), 4);
  CHECK(full.summary == Rational(1));
  CHECK_FALSE(full.entries.empty());

  auto odds = from_periodic(PeriodicSet(2, {1}), Window{10000});
  auto prof = density_profile(odds, coset, {GridSpec::explicit_elements({1, 2, 4, 8})}, 100);
  REQUIRE(prof.entries.size() == 1);
  CHECK(prof.entries[0].ratio == Rational(1, 4));
  CHECK(prof.entries[0].best_dilation == 1);

  auto evens = from_periodic(PeriodicSet(2, {0}), Window{10000});
  auto ev = density_profile(evens, coset, {GridSpec::explicit_elements({1, 2, 3})}, 100);
  CHECK(ev.entries[0].ratio == Rational(1));
  CHECK(ev.entries[0].best_dilation == 2);
}

TEST_CASE("density_profile rejects grids outside the coset or window") {
  auto a = NatSet::full(100);
  CHECK_THROWS_AS(density_profile(a, CosetSpec::coprime(2), {GridSpec::explicit_elements({2})}, 1),
                  DomainError);
  CHECK_THROWS_AS(density_profile(a, CosetSpec::full(), {GridSpec::explicit_elements({60})}, 2),
                  DomainError);
}

TEST_CASE("density_profile dilations stay in the semigroup") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 50; ++iter) {
    Index q = 2 + static_cast<Index>(rng() % 5);
    auto coset = CosetSpec::coprime(q);
    NatSet a = NatSet::from_predicate(5000, [&](Index) { return rng() % 3 != 0; });
    auto prof = density_profile(a, coset, default_grid_family(coset, 5000, 8), 8);
    for (const auto& e : prof.entries) {
      CHECK(e.ratio >= Rational(0));
      CHECK(e.ratio <= Rational(1));
      if (e.best_dilation) CHECK(coset.in_semigroup(e.best_dilation));
      for (Index x : e.test_set) CHECK(coset.in_coset(x));
    }
  }
}

TEST_CASE("thick iff every power-grid profile is 1") {
  // For periodic P mod q, P is multiplicatively thick iff 0 is a residue:
  // s = q puts any sF in qN, and the grid {q, q^2, ...} can never meet P
  // otherwise. Power grids therefore need bases up to q.
  const Index hi = 1 << 16;
  std::mt19937_64 rng(24);
  for (Index q = 1; q <= 8; ++q)
    for (Index mask = 1; mask < (Index{1} << q); ++mask) {
      std::vector<Index> res;
      for (Index r = 0; r < q; ++r)
        if (mask >> r & 1) res.push_back(r);
      PeriodicSet p(q, res);
      const bool thick = p.has_residue(0);
      INFO("q=" << q << " mask=" << mask);
      for (int i = 0; i < 20; ++i) {
        std::vector<Index> f;
        for (int j = 0; j < 4; ++j) f.push_back(1 + static_cast<Index>(rng() % 60));
        if (thick) CHECK(decide_thick_dilation(p, f, CosetSpec::full()).has_value());
      }
      std::vector<Index> upto_q;
      for (Index x = 1; x <= q; ++x) upto_q.push_back(x);
      CHECK(decide_thick_dilation(p, upto_q, CosetSpec::full()).has_value() == thick);

      std::vector<GridSpec> grids;
      for (Index base = 2; base <= std::max<Index>(q, 2); ++base) {
        unsigned len = 0;
        for (Index v = base; v * q <= hi; v *= base) ++len;
        grids.push_back(GridSpec::power(base, len));
      }
      auto prof = density_profile(from_periodic(p, Window{hi}), CosetSpec::full(), grids, q);
      CHECK((prof.summary == Rational(1)) == thick);
    }
}

TEST_CASE("pigeonhole_select examples") {
  std::vector<NatSet> one{NatSet::from_members(7, {7})};
  CHECK(pigeonhole_select(one, Rational(0)) == 7);
  std::vector<NatSet> three{NatSet::from_members(4, {1, 2}), NatSet::from_members(4, {2, 3}),
                            NatSet::from_members(4, {2, 4})};
  CHECK(pigeonhole_select(three, Rational(9, 10)) == 2);
  std::vector<NatSet> two{NatSet::from_members(2, {1}), NatSet::from_members(2, {2})};
  CHECK_FALSE(pigeonhole_select(two, Rational(3, 5)).has_value());
  CHECK_THROWS_AS(pigeonhole_select(two, Rational(1)), DomainError);
  CHECK_THROWS_AS(pigeonhole_select(two, Rational(-1, 2)), DomainError);
}

TEST_CASE("grid specs") {
  CHECK(GridSpec::power(2, 3).elements() == std::vector<Index>{2, 4, 8});
  CHECK(GridSpec::power(3, 2, 5).elements() == std::vector<Index>{15, 45});
  CHECK(GridSpec::prime({2, 3}, 1).elements() == std::vector<Index>{6});
  CHECK(GridSpec::prime({2, 3}, 2).elements() == std::vector<Index>{6, 12, 18, 36});
  CHECK_THROWS_AS(GridSpec::power(1, 3), DomainError);
}
