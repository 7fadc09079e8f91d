#include <doctest.h>

#include <random>

#include "gplab/patterns.hpp"
#include "oracles.hpp"

using namespace gplab;

namespace {

bool all_in(const NatSet& a, const std::vector<Index>& xs) {
  for (Index x : xs)
    if (!a.contains(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("find_gp examples") {
  auto w = find_gp(NatSet::from_members(10, {2, 4, 8}), 3, 10);
  REQUIRE(w);
  CHECK(w->n == 1);
  CHECK(w->m == 2);

  auto a = NatSet::from_members(50, {5, 6, 12, 24, 50});
  auto o = oracle::gp(oracle::members(a), 50, 3, 10);
  REQUIRE(o);
  CHECK(o->n == 3);
  CHECK(o->m == 2);
  auto g = find_gp(a, 3, 10);
  REQUIRE(g);
  CHECK(g->elements() == std::vector<Index>{6, 12, 24});

  auto odds = from_periodic(PeriodicSet(2, {1}), Window{100});
  auto go = find_gp(odds, 2, 10);
  REQUIRE(go);
  CHECK(go->elements() == std::vector<Index>{3, 9});

  CHECK_THROWS_AS(find_gp(odds, 0, 10), DomainError);
  CHECK_FALSE(find_gp(NatSet::from_members(10, {3, 5}), 2, 10).has_value());
}

TEST_CASE("find_geo_arith examples") {
  auto r = find_geo_arith(NatSet::full(100), 2, {5, 5, 5});
  REQUIRE(r.witness);
  CHECK(r.witness->a == 1);
  CHECK(r.witness->c == 1);
  CHECK(r.witness->d == 1);

  auto evens = from_periodic(PeriodicSet(2, {0}), Window{100});
  auto o = oracle::geo_arith(oracle::members(evens), 100, 2, 5);
  REQUIRE(o);
  CHECK(o->a == 1);
  CHECK(o->c == 2);
  CHECK(o->d == 1);
  auto e = find_geo_arith(evens, 2, {5, 5, 5});
  REQUIRE(e.witness);
  CHECK(e.witness->elements() == std::vector<Index>{4, 8, 6, 18});

  CHECK_FALSE(find_geo_arith(NatSet::from_members(1, {1}), 2, {5, 5, 5}).witness.has_value());
}

TEST_CASE("find_geo_arith reports truncation") {
  auto lonely = NatSet::from_members(1000, {997});
  auto capped = find_geo_arith(lonely, 2, {2, 2, 2});
  CHECK_FALSE(capped.witness.has_value());
  CHECK(capped.truncated);
  auto wide = find_geo_arith(lonely, 2, {1000, 1000, 1000});
  CHECK_FALSE(wide.witness.has_value());
  CHECK_FALSE(wide.truncated);
  {
    // overflow past a bound that is at least hi only skips out-of-window candidates
    ScopedAbsoluteBound bound(1000);
    CHECK_FALSE(find_geo_arith(lonely, 3, {100, 100, 100}).truncated);
  }
  {
    ScopedAbsoluteBound bound(500);
    CHECK(find_geo_arith(lonely, 3, {100, 100, 100}).truncated);
  }
}

TEST_CASE("ap_search examples") {
  auto a = ap_search(NatSet::from_members(3, {1, 2, 3}), 3);
  REQUIRE(a);
  CHECK((a->start == 1 && a->step == 1));
  auto b = ap_search(NatSet::from_members(7, {1, 3, 5, 7}), 4);
  REQUIRE(b);
  CHECK((b->start == 1 && b->step == 2));
  auto e = NatSet::from_members(8, {1, 2, 4, 8});
  CHECK_FALSE(oracle::ap(oracle::members(e), 8, 3).has_value());
  CHECK_FALSE(ap_search(e, 3).has_value());
}

TEST_CASE("gp_via_density examples") {
  NatSet::Builder b(Index{1} << 31);
  for (Index e = 1; e <= 30; ++e) b.add(Index{1} << e);
  NatSet full = std::move(b).finish();
  auto r = gp_via_density(full, 2, 30, Rational(1), 3, 1);
  REQUIRE(r.witness);
  CHECK(r.witness->m == 2);
  CHECK(all_in(full, r.witness->elements()));
  REQUIRE(r.exponent_ap);
  CHECK(r.exponent_ap->start == 1);
  CHECK(r.exponent_ap->step == 1);

  // A = {3 * 2^e : e even}
  std::vector<Index> mem;
  for (Index e = 0; e <= 10; e += 2) mem.push_back(3 * (Index{1} << e));
  NatSet even_powers = NatSet::from_members(3 << 10, mem);
  auto s = gp_via_density(even_powers, 2, 10, Rational(1, 2), 3, 3);
  REQUIRE(s.witness);
  CHECK(s.witness->m == 4);
  CHECK(s.dilation == 3);
  CHECK(all_in(even_powers, s.witness->elements()));

  CHECK_THROWS_AS(gp_via_density(full, 2, 30, Rational(0), 3, 1), DomainError);
  CHECK_THROWS_AS(gp_via_density(full, 2, 30, Rational(3, 2), 3, 1), DomainError);
}

TEST_CASE("gp_via_density on dense random subsets of a power grid") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Index> mem;
    for (Index e = 1; e <= 30; ++e)
      if (rng() % 10 != 0) mem.push_back(Index{1} << e);
    NatSet a = NatSet::from_members(Index{1} << 30, mem);
    auto r = gp_via_density(a, 2, 30, Rational(9, 10) - Rational(1, 5), 3, 1);
    // the exponent set has density about 0.9, so a 3-AP exists; the oracle confirms
    std::set<Index> exps;
    for (Index x : mem) exps.insert(__builtin_ctzll(static_cast<unsigned long long>(x)));
    bool has_ap = oracle::ap(exps, 30, 3).has_value();
    if (has_ap && a.size() >= 24) {
      REQUIRE(r.witness);
      CHECK(all_in(a, r.witness->elements()));
    }
  }
}

TEST_CASE("searches agree with brute force and re-verify") {
  std::mt19937_64 rng(32);
  for (int iter = 0; iter < 300; ++iter) {
    Index hi = 20 + static_cast<Index>(rng() % 300);
    double p = 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    std::bernoulli_distribution keep(p);
    NatSet a = NatSet::from_predicate(hi, [&](Index) { return keep(rng); });
    auto ref = oracle::members(a);
    unsigned len = 1 + static_cast<unsigned>(rng() % 4);

    auto g = find_gp(a, len, 12);
    auto go = oracle::gp(ref, hi, len, 12);
    REQUIRE(g.has_value() == go.has_value());
    if (g) {
      CHECK((g->n == go->n && g->m == go->m));
      CHECK(all_in(a, g->elements()));
      // shorter progressions exist whenever longer ones do
      for (unsigned l = 1; l < len; ++l) CHECK(find_gp(a, l, 12).has_value());
    }

    auto ap = ap_search(a, len + 1);
    auto apo = oracle::ap(ref, hi, len + 1);
    REQUIRE(ap.has_value() == apo.has_value());
    if (ap) CHECK((ap->start == apo->start && ap->step == apo->step));

    unsigned gl = 1 + static_cast<unsigned>(rng() % 2);
    auto ga = find_geo_arith(a, gl, {4, 4, 4});
    auto gao = oracle::geo_arith(ref, hi, gl, 4);
    REQUIRE(ga.witness.has_value() == gao.has_value());
    if (ga.witness) {
      CHECK((ga.witness->a == gao->a && ga.witness->c == gao->c && ga.witness->d == gao->d));
      CHECK(all_in(a, ga.witness->elements()));
      if (gl >= 2) {
        // fixing i gives a GP of ratio a + i d
        Index base = ga.witness->a + ga.witness->d;
        GpWitness gp{ga.witness->c, base, gl};
        CHECK(all_in(a, gp.elements()));
      }
    }
  }
}
