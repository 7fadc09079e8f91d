#include <doctest.h>

#include <random>

#include "gplab/ipcalc.hpp"
#include "oracles.hpp"

using namespace gplab;

TEST_CASE("fs_expand examples") {
  CHECK(fs_expand({{1, 2}}).to_vector() == std::vector<Index>{1, 2, 3});
  CHECK(fs_expand({{1, 2, 4}}) == NatSet::full(7));
  CHECK(fs_expand({{2, 3}}).to_vector() == std::vector<Index>{2, 3, 5});
  CHECK(fs_expand({{5}}).to_vector() == std::vector<Index>{5});
  CHECK(fs_expand({{4, 4}}).to_vector() == std::vector<Index>{4, 8});
  CHECK_THROWS_AS(fs_expand({{}}), DomainError);
}

TEST_CASE("fs_expand size bound") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    std::vector<Index> g;
    std::size_t r = 1 + rng() % 8;
    for (std::size_t j = 0; j < r; ++j) g.push_back(1 + static_cast<Index>(rng() % 20));
    std::sort(g.begin(), g.end());
    auto e = fs_expand({g});
    CHECK(e.size() <= (std::size_t{1} << r) - 1);
    auto ref = oracle::fs(g);
    CHECK(e.to_vector() == std::vector<Index>(ref.begin(), ref.end()));
  }
}

TEST_CASE("contains_ip_r examples") {
  auto a = contains_ip_r(NatSet::from_members(5, {2, 3, 5}), 2, 5);
  REQUIRE(a);
  CHECK(a->generators == std::vector<Index>{2, 3});
  auto none = NatSet::from_members(8, {1, 3, 8});
  CHECK_FALSE(oracle::ip_r(oracle::members(none), 8, 2, 8).has_value());
  CHECK_FALSE(contains_ip_r(none, 2, 8).has_value());
  auto rep = contains_ip_r(NatSet::from_members(4, {1, 2, 4}), 2, 4);
  REQUIRE(rep);
  CHECK(rep->generators == std::vector<Index>{1, 1});
}

TEST_CASE("ip_r_star_violator examples") {
  CHECK_FALSE(ip_r_star_violator(NatSet::full(50), 1).has_value());
  auto odds = from_periodic(PeriodicSet(2, {1}), Window{50});
  auto v = ip_r_star_violator(odds, 2);
  REQUIRE(v);
  CHECK(v->generators == std::vector<Index>{2, 2});
  CHECK_FALSE(ip_r_star_violator(from_periodic(PeriodicSet(2, {0}), Window{10000}), 2).has_value());
}

TEST_CASE("IP searches agree with brute force") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 400; ++iter) {
    Index hi = 5 + static_cast<Index>(rng() % 40);
    std::bernoulli_distribution keep(0.3 + 0.5 * static_cast<double>(rng() % 10) / 10.0);
    NatSet a = NatSet::from_predicate(hi, [&](Index) { return keep(rng); });
    auto ref = oracle::members(a);
    unsigned r = 1 + static_cast<unsigned>(rng() % 3);
    auto got = contains_ip_r(a, r, hi);
    auto want = oracle::ip_r(ref, hi, r, hi);
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(got->generators == *want);
    auto vio = ip_r_star_violator(a, r);
    auto vwant = oracle::ip_r_star_violator(ref, hi, r);
    REQUIRE(vio.has_value() == vwant.has_value());
    if (vio) CHECK(vio->generators == *vwant);
  }
}

TEST_CASE("window IP_r* is monotone in r") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 200; ++iter) {
    Index hi = 10 + static_cast<Index>(rng() % 60);
    NatSet a = NatSet::from_predicate(hi, [&](Index) { return rng() % 4 != 0; });
    bool confirmed = false;
    for (unsigned r = 1; r <= 5; ++r) {
      bool now = !ip_r_star_violator(a, r).has_value();
      if (confirmed) CHECK(now);
      confirmed = now;
    }
  }
}

TEST_CASE("window_rank and its witness") {
  auto evens = from_periodic(PeriodicSet(2, {0}), Window{200});
  auto rep = window_rank(evens, 4);
  REQUIRE(rep.rank);
  CHECK(*rep.rank == 2);
  REQUIRE(rep.witness);
  CHECK(rep.witness->generators.size() == 1);
  for (Index v : fs_expand(*rep.witness)) CHECK_FALSE(evens.contains(v));
  auto full = window_rank(NatSet::full(50), 3);
  CHECK(full.rank == 1u);
  CHECK_FALSE(full.witness.has_value());
  CHECK_FALSE(window_rank(NatSet::empty_on(20), 3).rank.has_value());
}

TEST_CASE("rank does not grow under quotients") {
  std::mt19937_64 rng(44);
  for (int iter = 0; iter < 60; ++iter) {
    Index q = 2 + static_cast<Index>(rng() % 5);
    std::vector<Index> res;
    for (Index r = 0; r < q; ++r)
      if (r == 0 || rng() % 2) res.push_back(r);
    NatSet a = from_periodic(PeriodicSet(q, res), Window{120});
    auto base = window_rank(a, 6);
    if (!base.rank) continue;
    for (Index n = 2; n <= 4; ++n) {
      auto sub = window_rank(quotient(a, n), 6);
      REQUIRE(sub.rank);
      CHECK(*sub.rank <= *base.rank);
    }
  }
}

TEST_CASE("covering_translates examples") {
  auto full = covering_translates(NatSet::full(100));
  CHECK(full.generators.generators.empty());
  CHECK(full.f0 == std::vector<Index>{0});
  CHECK(full.translates == 1);
  CHECK(full.covered);

  auto evens = covering_translates(from_periodic(PeriodicSet(2, {0}), Window{200}));
  CHECK(evens.generators.generators == std::vector<Index>{1});
  CHECK(evens.f0 == std::vector<Index>{0, 1});
  CHECK(evens.covered);
  CHECK(evens.translates == 2);
  CHECK(evens.bound == 2);

  auto mod3 = covering_translates(from_periodic(PeriodicSet(3, {0, 2}), Window{300}));
  CHECK(mod3.generators.generators == std::vector<Index>{1});
  CHECK(mod3.covered);

  CHECK_THROWS_AS(covering_translates(NatSet::empty_on(5)), DomainError);
  CHECK_THROWS_AS(covering_translates(NatSet::from_members(4096, {4096}), 3), DomainError);
}

TEST_CASE("covering translates stay within 2^s and the FS set is maximal") {
  std::mt19937_64 rng(45);
  for (int iter = 0; iter < 100; ++iter) {
    Index hi = 30 + static_cast<Index>(rng() % 200);
    NatSet a = NatSet::from_predicate(hi, [&](Index) { return rng() % 3 == 0; });
    if (a.empty()) continue;
    CoverReport rep;
    try {
      rep = covering_translates(a, 24);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(rep.translates <= static_cast<std::size_t>(rep.bound));
    for (Index v : rep.f) CHECK_FALSE(a.contains(v));
    // maximality: no x extends F inside the complement and the window
    auto ref = oracle::members(a);
    for (Index x = 1; x <= hi; ++x) {
      std::vector<Index> g = rep.generators.generators;
      g.push_back(x);
      bool inside = true;
      for (Index v : oracle::fs(g)) inside = inside && v <= hi && !ref.count(v);
      CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("rank_minimizing_n examples") {
  auto full = rank_minimizing_n(NatSet::full(100), 4, 4);
  CHECK(full.n == 1);
  CHECK(full.rank == 1);
  auto evens = rank_minimizing_n(from_periodic(PeriodicSet(2, {0}), Window{200}), 4, 4);
  CHECK(evens.n == 2);
  CHECK(evens.rank == 1);
  REQUIRE(evens.ranks.size() == 4);
  CHECK(evens.ranks[0] == 2u);
  auto minus1 = rank_minimizing_n(NatSet::from_predicate(200, [](Index m) { return m != 1; }), 4, 4);
  CHECK(minus1.n == 2);
  CHECK(minus1.rank == 1);
  CHECK(minus1.ranks[0] == 2u);
  CHECK_THROWS_AS(rank_minimizing_n(NatSet::empty_on(20), 3, 2), DomainError);
}
