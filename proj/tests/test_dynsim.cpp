#include <doctest.h>

#include <cmath>
#include <random>

#include "gplab/dynsim.hpp"
#include "oracles.hpp"

using namespace gplab;

namespace {

long double frac(long double v) { return v - std::floor(v); }

long double alpha_value(const Approximant& a) {
  return static_cast<long double>(a.num) / static_cast<long double>(a.den);
}

bool in_arc(long double v, long double lo, long double hi) {
  return lo < hi ? (lo < v && v < hi) : (v > lo || v < hi);
}

}  // namespace

TEST_CASE("return_set examples") {
  auto r = return_set(SystemSpec::finite_rotation(4), PointSpec::finite(2), OpenSetSpec::states({0}),
                      Window{20});
  CHECK(r.set.to_vector() == std::vector<Index>{2, 6, 10, 14, 18});
  CHECK(r.ambiguous.empty());

  auto all = return_set(SystemSpec::finite_rotation(1), PointSpec::finite(0), OpenSetSpec::states({0}),
                        Window{30});
  CHECK(all.set == NatSet::full(30));

  auto golden = return_set(SystemSpec::torus_rotation(golden_conjugate()), PointSpec::torus(0),
                           OpenSetSpec::arcs({{Rational(0), Rational(1, 2)}}), Window{10});
  CHECK(golden.set.contains(2));
  CHECK_FALSE(golden.set.contains(1));
}

TEST_CASE("return_set errors") {
  auto sys = SystemSpec::finite_rotation(4);
  CHECK_THROWS_AS(return_set(sys, PointSpec::finite(0), OpenSetSpec::states({}), Window{10}), DomainError);
  CHECK_THROWS_AS(return_set(sys, PointSpec::finite(4), OpenSetSpec::states({0}), Window{10}), DomainError);
  CHECK_THROWS_AS(return_set(sys, PointSpec::product({PointSpec::finite(0), PointSpec::finite(0)}),
                             OpenSetSpec::states({0}), Window{10}),
                  DomainError);
  auto torus = SystemSpec::torus_rotation(sqrt2_minus_1());
  CHECK_THROWS_AS(return_set(torus, PointSpec::torus(0), OpenSetSpec::arcs({}), Window{10}), DomainError);
}

TEST_CASE("torus return sets match floating evaluation away from boundaries") {
  std::mt19937_64 rng(51);
  for (auto alpha : {sqrt2_minus_1(), golden_conjugate()}) {
    const long double a = alpha_value(alpha);
    for (int iter = 0; iter < 20; ++iter) {
      Rational x(static_cast<Index>(rng() % 1000), 1000);
      Rational lo(static_cast<Index>(rng() % 100), 100), hi(static_cast<Index>(rng() % 100), 100);
      if (lo == hi) continue;
      auto rs = return_set(SystemSpec::torus_rotation(alpha), PointSpec::torus(x), OpenSetSpec::arcs({{lo, hi}}),
                           Window{5000});
      std::set<Index> amb(rs.ambiguous.begin(), rs.ambiguous.end());
      for (Index n = 1; n <= 5000; ++n) {
        long double v = frac(x.to_long_double() + n * a);
        bool want = in_arc(v, lo.to_long_double(), hi.to_long_double());
        bool near = std::fabs(v - lo.to_long_double()) < 1e-6L || std::fabs(v - hi.to_long_double()) < 1e-6L;
        if (!near && !amb.count(n)) REQUIRE(rs.set.contains(n) == want);
      }
    }
  }
}

TEST_CASE("boundary-ambiguous times are flagged") {
  // with alpha = 1/4 exactly (declared rational), x = 0 lands on 1/4 at n = 1
  Approximant quarter{1, 4, 0, false};
  auto rs = return_set(SystemSpec::torus_rotation(quarter), PointSpec::torus(0),
                       OpenSetSpec::arcs({{Rational(0), Rational(1, 4)}}), Window{8});
  CHECK(std::find(rs.ambiguous.begin(), rs.ambiguous.end(), 1) != rs.ambiguous.end());
  CHECK_FALSE(rs.set.contains(1));
}

TEST_CASE("skew product return sets match floating evaluation") {
  const auto alpha = sqrt2_minus_1();
  const long double a = alpha_value(alpha);
  Rational x(1, 7), y(2, 5);
  auto u = OpenSetSpec::box({{Rational(0), Rational(1, 2)}}, {{Rational(1, 3), Rational(2, 3)}});
  auto rs = return_set(SystemSpec::skew_product(alpha), PointSpec::skew(x, y), u, Window{2000});
  std::set<Index> amb(rs.ambiguous.begin(), rs.ambiguous.end());
  std::size_t checked = 0;
  for (Index n = 1; n <= 2000; ++n) {
    long double nx = frac(x.to_long_double() + n * a);
    long double ny = frac(y.to_long_double() + 2 * n * x.to_long_double() + static_cast<long double>(n) * n * a);
    bool want = in_arc(nx, 0, 0.5L) && in_arc(ny, 1.0L / 3, 2.0L / 3);
    if (amb.count(n)) continue;
    ++checked;
    REQUIRE(rs.set.contains(n) == want);
  }
  CHECK(checked > 1900);
}

TEST_CASE("return-time identities on finite rotations") {
  for (Index k = 1; k <= 7; ++k) {
    auto sys = SystemSpec::finite_rotation(k);
    for (Index mask = 1; mask < (Index{1} << k); ++mask) {
      std::vector<Index> u;
      for (Index s = 0; s < k; ++s)
        if (mask >> s & 1) u.push_back(s);
      for (Index x = 0; x < k; ++x) {
        auto r = return_set(sys, PointSpec::finite(x), OpenSetSpec::states(u), Window{200}).set;
        for (Index n = 1; n <= 20; ++n) {
          CHECK(return_set(sys, PointSpec::finite(x), OpenSetSpec::states(u), Window{200 / n}, n).set ==
                quotient(r, n));
          CHECK(return_set(sys, advance(sys, PointSpec::finite(x), n), OpenSetSpec::states(u), Window{200 - n})
                    .set == translate(r, n));
        }
      }
    }
  }
}

TEST_CASE("advance") {
  auto sys = SystemSpec::finite_rotation(4);
  CHECK(advance(sys, PointSpec::finite(2), 3) == PointSpec::finite(1));
  auto prod = SystemSpec::product({SystemSpec::finite_rotation(2), SystemSpec::finite_rotation(3)});
  auto p = advance(prod, PointSpec::product({PointSpec::finite(0), PointSpec::finite(0)}), 5);
  CHECK(p == PointSpec::product({PointSpec::finite(1), PointSpec::finite(2)}));
  Approximant quarter{1, 4, 0, false};
  CHECK(advance(SystemSpec::torus_rotation(quarter), PointSpec::torus(Rational(1, 8)), 3) ==
        PointSpec::torus(Rational(7, 8)));
}

TEST_CASE("kronecker components examples") {
  auto c64 = kronecker_components(SystemSpec::finite_rotation(6), 4);
  CHECK(c64.d == 2);
  CHECK(c64.labels == std::vector<Index>{0, 1, 0, 1, 0, 1});
  CHECK(oracle::rotation_components(6, 4) == c64.labels);
  CHECK(kronecker_components(SystemSpec::finite_rotation(4), 2).d == 2);
  for (Index n = 1; n <= 10; ++n)
    CHECK(kronecker_components(SystemSpec::torus_rotation(sqrt2_minus_1()), n).d == 1);
}

TEST_CASE("kronecker components match the orbit oracle") {
  for (Index k = 1; k <= 12; ++k)
    for (Index n = 1; n <= 12; ++n) {
      auto c = kronecker_components(SystemSpec::finite_rotation(k), n);
      CHECK(c.labels == oracle::rotation_components(k, n));
      CHECK(n % c.d == 0);
      for (Index x = 0; x < k; ++x) {
        CHECK(c.labels[static_cast<std::size_t>((x + 1) % k)] == (c.labels[static_cast<std::size_t>(x)] + 1) % c.d);
        CHECK(c.component_of(PointSpec::finite(x)) == c.labels[static_cast<std::size_t>(x)]);
      }
    }
}

TEST_CASE("nested components satisfy (X_{N,j})_{n,i} = X_{nN, iN+j}") {
  for (Index k = 1; k <= 12; ++k) {
    auto sys = SystemSpec::finite_rotation(k);
    for (Index big_n = 1; big_n <= 12; ++big_n)
      for (Index n = 1; n <= 12; ++n) {
        auto outer = kronecker_components(sys, big_n);
        auto fine = kronecker_components(sys, n * big_n);
        for (Index j = 0; j < outer.d; ++j) {
          // points of X_{N,j} listed along the T^N orbit of j
          std::vector<Index> path;
          for (Index y = j, s = 0; s < k / outer.d; ++s, y = (y + big_n) % k) path.push_back(y);
          // T^{nN} components inside X_{N,j}, labelled so T^N shifts the label by one
          auto sub = oracle::rotation_components(static_cast<Index>(path.size()), n);
          Index sub_d = *std::max_element(sub.begin(), sub.end()) + 1;
          for (std::size_t p = 0; p < path.size(); ++p) {
            Index i = sub[p];
            REQUIRE(i < sub_d);
            CHECK(fine.labels[static_cast<std::size_t>(path[p])] == mod(i * big_n + j, fine.d));
          }
        }
      }
  }
}

TEST_CASE("product components use the CRT time") {
  auto prod = SystemSpec::product({SystemSpec::finite_rotation(4), SystemSpec::finite_rotation(3)});
  for (Index n = 1; n <= 12; ++n) {
    auto c = kronecker_components(prod, n);
    CHECK(c.d == std::gcd(n, Index{12}));
    for (Index t = 0; t < 12; ++t) {
      auto p = PointSpec::product({PointSpec::finite(t % 4), PointSpec::finite(t % 3)});
      CHECK(c.component_of(p) == t % c.d);
    }
  }
  auto with_torus = SystemSpec::product({SystemSpec::finite_rotation(3), SystemSpec::torus_rotation(sqrt2_minus_1())});
  CHECK(kronecker_components(with_torus, 6).d == 3);
}

TEST_CASE("non-minimal systems are rejected") {
  auto shared = SystemSpec::product({SystemSpec::finite_rotation(2), SystemSpec::finite_rotation(4)});
  CHECK_THROWS_AS(kronecker_components(shared, 2), DomainError);
  Approximant rational{1, 3, 0, false};
  CHECK_THROWS_AS(kronecker_components(SystemSpec::torus_rotation(rational), 2), DomainError);
  auto two_tori = SystemSpec::product(
      {SystemSpec::torus_rotation(sqrt2_minus_1()), SystemSpec::torus_rotation(golden_conjugate())});
  CHECK_THROWS_AS(kronecker_components(two_tori, 2), DomainError);
}

TEST_CASE("eps-dense coprime orbits") {
  auto r6 = eps_dense_coprime_check(SystemSpec::finite_rotation(6), Rational(1, 10), 6, 30, 6);
  CHECK(r6.verdict == Verdict::Pass);
  auto torus = eps_dense_coprime_check(SystemSpec::torus_rotation(sqrt2_minus_1()), Rational(1, 10), 1, 10, 10000);
  CHECK(torus.verdict == Verdict::Pass);
  auto r4 = eps_dense_coprime_check(SystemSpec::finite_rotation(4), Rational(1, 5), 2, 10, 4);
  CHECK(r4.verdict == Verdict::Pass);
  // with N = 1 the even step n = 2 is tested and fails
  auto bad = eps_dense_coprime_check(SystemSpec::finite_rotation(4), Rational(1, 5), 1, 10, 4);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(bad.counter_n == 2);
  REQUIRE(bad.counter_x);
  CHECK(*bad.counter_x == PointSpec::finite(0));
  // too few steps to fill the circle
  auto short_orbit = eps_dense_coprime_check(SystemSpec::torus_rotation(sqrt2_minus_1()), Rational(1, 100), 1, 3, 5);
  CHECK(short_orbit.verdict != Verdict::Pass);
  auto skew = eps_dense_coprime_check(SystemSpec::skew_product(sqrt2_minus_1()), Rational(1, 4), 1, 2, 5000);
  CHECK(skew.verdict != Verdict::Fail);
}

TEST_CASE("total visibility") {
  CHECK(total_visibility(1, {0}, 1).inf == Rational(1));
  CHECK(total_visibility(4, {0}, 4).inf == Rational(0));
  CHECK(total_visibility(4, {0, 1, 2, 3}, 4).inf == Rational(1));
  for (Index k = 1; k <= 8; ++k)
    for (Index mask = 1; mask < (Index{1} << k); ++mask) {
      std::vector<Index> u;
      for (Index s = 0; s < k; ++s)
        if (mask >> s & 1) u.push_back(s);
      auto v = total_visibility(k, u, k);
      CHECK((v.inf > Rational(0)) == (static_cast<Index>(u.size()) == k));
      // deeper search never lowers the exact value
      CHECK(total_visibility(k, u, 3 * k).inf == v.inf);
    }
}

TEST_CASE("diagonal orbit examples") {
  auto r = diagonal_orbit(6, {1, 2});
  CHECK(r.closure.size() == 36);
  REQUIRE(r.components.size() == 2);
  CHECK(r.components[0].size() == 18);
  CHECK(r.components[1].size() == 18);
  for (const auto& s : r.components[0]) CHECK(s[1] % 2 == 0);
  CHECK(r.ok());

  for (Index k = 2; k <= 8; ++k) {
    auto one = diagonal_orbit(k, {1});
    CHECK(one.closure.size() == static_cast<std::size_t>(k));
    CHECK(one.components.size() == 1);
  }

  auto r413 = diagonal_orbit(4, {1, 3});
  CHECK(r413.closure.size() == 8);
  CHECK(r413.components.size() == 1);
  for (const auto& s : r413.closure) CHECK((s[1] - s[0]) % 2 == 0);
  CHECK(r413.ok());

  CHECK_THROWS_AS(diagonal_orbit(8, {1, 2, 3, 4, 5, 6, 7, 8}, 1000), DomainError);
}

TEST_CASE("diagonal orbit matches the BFS oracle") {
  const std::vector<std::vector<Index>> vectors = {{1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {2, 4}, {3, 3}};
  for (Index k = 2; k <= 8; ++k)
    for (const auto& m : vectors) {
      auto r = diagonal_orbit(k, m);
      auto o = oracle::diagonal_oracle(k, m);
      CHECK(std::set<std::vector<Index>>(r.closure.begin(), r.closure.end()) == o.closure);
      REQUIRE(r.components.size() == o.components.size());
      for (std::size_t j = 0; j < o.components.size(); ++j)
        CHECK(std::set<std::vector<Index>>(r.components[j].begin(), r.components[j].end()) == o.components[j]);
      CHECK(r.ok());
    }
}

TEST_CASE("thickness equivalence examples") {
  auto one = thickness_equivalence_check(1, {{0}}, 4);
  for (const auto& c : one) CHECK((c.cond1 && c.cond4 && c.cond5));

  auto four = thickness_equivalence_check(4, {{0}}, 2);
  REQUIRE(four.size() == 2);
  const auto& n2 = four[1];
  CHECK(n2.n == 2);
  CHECK_FALSE(n2.cond1);
  CHECK_FALSE(n2.cond4);
  CHECK_FALSE(n2.cond5);
  CHECK(n2.cond4_counter_x == 1);

  auto two = thickness_equivalence_check(2, {{0, 1}}, 4);
  for (const auto& c : two) CHECK((c.cond1 && c.cond4 && c.cond5));
}

TEST_CASE("translate/quotient syndeticity examples") {
  auto rot4 = translate_quotient_syndetic_check(SystemSpec::finite_rotation(4), PointSpec::finite(2),
                                                OpenSetSpec::states({0}), 4, 6, 12, Window{4000}, 4);
  for (const auto& c : rot4) {
    CHECK(c.n % 2 == 1);
    REQUIRE(c.gap);
    CHECK(*c.gap <= 4);
    CHECK_FALSE(c.flagged);
  }
  auto rot1 = translate_quotient_syndetic_check(SystemSpec::finite_rotation(1), PointSpec::finite(0),
                                                OpenSetSpec::states({0}), 1, 6, 12, Window{1000}, 1);
  for (const auto& c : rot1) CHECK(c.gap == 1);
  auto torus = translate_quotient_syndetic_check(SystemSpec::torus_rotation(sqrt2_minus_1()), PointSpec::torus(0),
                                                 OpenSetSpec::arcs({{Rational(0), Rational(1, 4)}}), 1, 10, 10,
                                                 Window{100000}, 20);
  CHECK(torus.size() == 110);
  for (const auto& c : torus) {
    REQUIRE(c.gap);
    CHECK(*c.gap <= 20);
  }
  // a threshold below the true gap is flagged
  auto strict = translate_quotient_syndetic_check(SystemSpec::finite_rotation(4), PointSpec::finite(2),
                                                  OpenSetSpec::states({0}), 4, 0, 1, Window{400}, 3);
  REQUIRE(strict.size() == 1);
  CHECK(strict[0].flagged);
}
