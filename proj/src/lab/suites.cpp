#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "gplab/lab.hpp"

namespace gplab {

namespace {

using Clock = std::chrono::steady_clock;
using CheckFn = std::function<CheckRecord()>;

Verdict pass_if(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

// Wraps a check body with its id, parameters and wall time.
CheckFn make_check(std::string id, Json params, std::function<void(CheckRecord&)> body) {
  return [id = std::move(id), params = std::move(params), body = std::move(body)] {
    CheckRecord rec;
    rec.id = id;
    rec.params = params;
    auto t0 = Clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.verdict = Verdict::Fail;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rec;
  };
}

OpenSetSpec quarter_arc() { return OpenSetSpec::arcs({{Rational(0), Rational(1, 4)}}); }

// Return set with boundary-ambiguous times removed, so no verdict rests on them.
NatSet decided_returns(const ReturnSet& rs) {
  if (rs.ambiguous.empty()) return rs.set;
  return set_difference(rs.set, NatSet::from_members(rs.set.hi(), rs.ambiguous));
}

std::vector<std::vector<Index>> nonempty_subsets(Index k) {
  std::vector<std::vector<Index>> out;
  for (Index mask = 1; mask < (Index{1} << k); ++mask) {
    std::vector<Index> u;
    for (Index s = 0; s < k; ++s)
      if (mask >> s & 1) u.push_back(s);
    out.push_back(std::move(u));
  }
  return out;
}

// ---- T1.1-rotation --------------------------------------------------------

std::vector<CheckFn> suite_t11(const SuiteOptions& opt, Json& env) {
  env["windows"] = {{"rotation", 10000}, {"torus", 1000000}, {"sampled", 200000}};
  std::vector<CheckFn> v;

  v.push_back(make_check("rot4-return-set", {{"k", 4}, {"x", 2}, {"U", {0}}, {"window", 10000}},
                         [](CheckRecord& rec) {
    auto rs = return_set(SystemSpec::finite_rotation(4), PointSpec::finite(2),
                         OpenSetSpec::states({0}), Window{10000});
    NatSet expect = from_periodic(PeriodicSet(4, {2}), Window{10000});
    rec.verdict = pass_if(rs.set == expect);
    rec.witness = {{"size", rs.set.size()}, {"first", to_json(rs.set, 8)["members"]}};
  }));

  v.push_back(make_check("rot4-thick-odds",
                         {{"F", "all non-empty subsets of odd numbers <= 50"}, {"coset", "2*S_2"}},
                         [](CheckRecord& rec) {
    auto res = thick_dilation_sweep(PeriodicSet(4, {2}), odd_numbers(50), CosetSpec::coprime(2, 2),
                                    10000, 20240611);
    rec.verdict = pass_if(res.failures == 0 && res.sample_failures == 0);
    rec.witness = to_json(res);
  }));

  v.push_back(make_check("rot4-gp", {{"window", 10000}, {"length", 5}}, [](CheckRecord& rec) {
    NatSet r = from_periodic(PeriodicSet(4, {2}), Window{10000});
    auto w = find_gp(r, 5, 20);
    rec.verdict = w ? Verdict::Pass : Verdict::Inconclusive;
    if (w) rec.witness = to_json(*w);
  }));

  v.push_back(make_check("torus-gp",
                         {{"alpha", "sqrt2-1"}, {"x", "0"}, {"U", "(0,1/4)"}, {"window", 1000000},
                          {"length", 4}, {"m_bound", 20}},
                         [](CheckRecord& rec) {
    auto rs = return_set(SystemSpec::torus_rotation(sqrt2_minus_1()), PointSpec::torus(0),
                         quarter_arc(), Window{1000000});
    auto w = find_gp(decided_returns(rs), 4, 20);
    rec.verdict = w ? Verdict::Pass : Verdict::Inconclusive;
    rec.witness = {{"ambiguous", rs.ambiguous.size()}, {"returns", rs.set.size()}};
    if (w) rec.witness["gp"] = to_json(*w);
  }));

  // residual-set quantifier proxied by a seeded sample of starting points
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Index> pick(0, (Index{1} << 20) - 1);
  for (int i = 0; i < 4; ++i) {
    Rational x(pick(rng), Index{1} << 20);
    v.push_back(make_check("torus-gp-sampled-" + std::to_string(i),
                           {{"alpha", "sqrt2-1"}, {"x", x.str()}, {"U", "(0,1/4)"},
                            {"window", 200000}, {"length", 4}, {"m_bound", 20}},
                           [x](CheckRecord& rec) {
      auto rs = return_set(SystemSpec::torus_rotation(sqrt2_minus_1()), PointSpec::torus(x),
                           quarter_arc(), Window{200000});
      auto w = find_gp(decided_returns(rs), 4, 20);
      rec.verdict = w ? Verdict::Pass : Verdict::Inconclusive;
      if (w) rec.witness = to_json(*w);
    }));
  }
  return v;
}

// ---- T1.2-rotation --------------------------------------------------------

std::vector<CheckFn> suite_t12(const SuiteOptions&, Json& env) {
  env["windows"] = {{"finite", "20*k"}, {"torus", 100000}, {"density", 1000000}};
  std::vector<CheckFn> v;

  for (Index k = 1; k <= 12; ++k) {
    v.push_back(make_check("identities-finite-k" + std::to_string(k),
                           {{"k", k}, {"n_max", 20}, {"window", 20 * k}, {"U", "all"}, {"x", "all"}},
                           [k](CheckRecord& rec) {
      const auto sys = SystemSpec::finite_rotation(k);
      const Window w{20 * k};
      std::uint64_t cases = 0, bad = 0;
      Json first_bad;
      for (const auto& u_states : nonempty_subsets(k)) {
        auto u = OpenSetSpec::states(u_states);
        for (Index x = 0; x < k; ++x) {
          auto px = PointSpec::finite(x);
          NatSet r = return_set(sys, px, u, w).set;
          for (Index n = 1; n <= 20; ++n) {
            ++cases;
            bool pow_ok = return_set(sys, px, u, Window{w.hi / n}, n).set == quotient(r, n);
            bool tr_ok = return_set(sys, advance(sys, px, n), u, Window{w.hi - n}).set == translate(r, n);
            if (!(pow_ok && tr_ok)) {
              if (bad++ == 0) first_bad = {{"U", u_states}, {"x", x}, {"n", n}};
            }
          }
        }
      }
      rec.verdict = pass_if(bad == 0);
      rec.witness = {{"cases", cases}, {"failures", bad}};
      if (bad) rec.witness["first_failure"] = first_bad;
    }));
  }

  v.push_back(make_check("identities-torus",
                         {{"alpha", "sqrt2-1"}, {"x", "0"}, {"U", "(0,1/4)"}, {"window", 100000},
                          {"n_max", 10}},
                         [](CheckRecord& rec) {
    const auto sys = SystemSpec::torus_rotation(sqrt2_minus_1());
    const auto u = quarter_arc();
    const auto x = PointSpec::torus(0);
    const Window w{100000};
    auto base = return_set(sys, x, u, w);
    std::uint64_t discrepancies = 0;
    std::size_t ambiguous = base.ambiguous.size();
    for (Index n = 1; n <= 10; ++n) {
      auto pw = return_set(sys, x, u, Window{w.hi / n}, n);
      auto tr = return_set(sys, advance(sys, x, n), u, Window{w.hi - n});
      discrepancies += (pw.set == quotient(base.set, n)) ? 0 : 1;
      discrepancies += (tr.set == translate(base.set, n)) ? 0 : 1;
      ambiguous += pw.ambiguous.size() + tr.ambiguous.size();
    }
    rec.verdict = pass_if(discrepancies == 0);
    rec.witness = {{"discrepancies", discrepancies}, {"ambiguous_times", ambiguous}};
  }));

  v.push_back(make_check("torus-density",
                         {{"alpha", "sqrt2-1"}, {"x", "0"}, {"U", "(0,1/4)"}, {"window", 1000000},
                          {"s_bound", 64}},
                         [](CheckRecord& rec) {
    auto rs = return_set(SystemSpec::torus_rotation(sqrt2_minus_1()), PointSpec::torus(0),
                         quarter_arc(), Window{1000000});
    NatSet r = decided_returns(rs);
    auto coset = CosetSpec::full();
    auto prof = density_profile(r, coset, default_grid_family(coset, r.hi(), 64), 64);
    rec.verdict = prof.summary > Rational(0) ? Verdict::Pass : Verdict::Inconclusive;
    rec.witness = to_json(prof);
  }));

  v.push_back(make_check("components", {{"k_max", 12}, {"n_max", 12}}, [](CheckRecord& rec) {
    std::uint64_t cases = 0, bad = 0;
    for (Index k = 1; k <= 12; ++k) {
      const auto sys = SystemSpec::finite_rotation(k);
      for (Index n = 1; n <= 12; ++n) {
        auto cd = kronecker_components(sys, n);
        ++cases;
        bool ok = n % cd.d == 0;
        // T maps component j onto j+1; orbits of T^n are exactly the classes
        for (Index x = 0; x < k; ++x) {
          ok = ok && cd.labels[static_cast<std::size_t>((x + 1) % k)] ==
                         (cd.labels[static_cast<std::size_t>(x)] + 1) % cd.d;
          ok = ok && cd.labels[static_cast<std::size_t>((x + n) % k)] ==
                         cd.labels[static_cast<std::size_t>(x)];
        }
        std::set<Index> distinct(cd.labels.begin(), cd.labels.end());
        ok = ok && static_cast<Index>(distinct.size()) == cd.d;
        // (X_{N,j})_{n,i} = X_{nN, iN+j}
        for (Index big_n = 1; big_n <= 12 && ok; ++big_n) {
          auto outer = kronecker_components(sys, big_n);
          auto fine = kronecker_components(sys, n * big_n);
          for (Index j = 0; j < outer.d && ok; ++j)
            for (Index i = 0; i < fine.d && ok; ++i) {
              // T^(nN)-orbit of the point j + i*N inside X_{N,j}
              Index base = mod(j + i * big_n, k);
              for (Index s = 0; s < k && ok; ++s) {
                Index y = mod(base + s * n * big_n, k);
                ok = outer.labels[static_cast<std::size_t>(y)] == j % outer.d &&
                     fine.labels[static_cast<std::size_t>(y)] == mod(i * big_n + j, fine.d);
              }
            }
        }
        if (!ok) ++bad;
      }
    }
    rec.verdict = pass_if(bad == 0);
    rec.witness = {{"cases", cases}, {"failures", bad}};
  }));

  v.push_back(make_check("visibility", {{"k_max", 8}, {"U", "all"}}, [](CheckRecord& rec) {
    std::uint64_t cases = 0, bad = 0;
    for (Index k = 1; k <= 8; ++k)
      for (const auto& u : nonempty_subsets(k)) {
        ++cases;
        auto vis = total_visibility(k, u, k);
        bool whole = static_cast<Index>(u.size()) == k;
        if ((vis.inf > Rational(0)) != whole) ++bad;
      }
    rec.verdict = pass_if(bad == 0);
    rec.witness = {{"cases", cases}, {"failures", bad}};
  }));

  v.push_back(make_check("eps-dense", Json::object(), [](CheckRecord& rec) {
    auto a = eps_dense_coprime_check(SystemSpec::finite_rotation(6), Rational(1, 10), 6, 30, 6);
    auto b = eps_dense_coprime_check(SystemSpec::torus_rotation(sqrt2_minus_1()), Rational(1, 10), 1,
                                     10, 10000);
    auto c = eps_dense_coprime_check(SystemSpec::finite_rotation(4), Rational(1, 5), 2, 10, 4);
    rec.verdict = pass_if(a.verdict == Verdict::Pass && b.verdict == Verdict::Pass &&
                          c.verdict == Verdict::Pass);
    rec.witness = {{"rot6", std::string(to_string(a.verdict))},
                   {"torus", std::string(to_string(b.verdict))},
                   {"rot4_N2", std::string(to_string(c.verdict))}};
  }));
  return v;
}

// ---- L6.2-grid ------------------------------------------------------------

std::vector<CheckFn> suite_l62(const SuiteOptions&, Json& env) {
  env["grid"] = {{"N_max", 12}, {"t_abs_max", 12}, {"F_size_max", 4}, {"f_max", 30}};
  std::vector<CheckFn> v;
  for (Index big_n = 1; big_n <= 12; ++big_n) {
    v.push_back(make_check("N" + std::to_string(big_n), {{"N", big_n}}, [big_n](CheckRecord& rec) {
      std::uint64_t cases = 0, bad = 0;
      Json first_bad;
      for (Index t = -12; t <= 12; ++t) {
        const Index k = big_n / translate_gcd(big_n, t);
        std::vector<Index> pool;
        for (Index f = 1; f <= 30; ++f)
          if (gcd(f, k) == 1) pool.push_back(f);
        const std::size_t p = pool.size();
        std::array<Index, 4> f{};
        auto run = [&](std::size_t size) {
          ++cases;
          try {
            auto w = solve_translate_witness(big_n, t, std::span<const Index>(f.data(), size));
            if (!check_translate_witness(w).empty()) throw std::logic_error(check_translate_witness(w));
          } catch (const std::exception& e) {
            if (bad++ == 0)
              first_bad = {{"t", t}, {"F", std::vector<Index>(f.begin(), f.begin() + static_cast<long>(size))},
                           {"error", e.what()}};
          }
        };
        for (std::size_t a = 0; a < p; ++a) {
          f[0] = pool[a];
          run(1);
          for (std::size_t b = a + 1; b < p; ++b) {
            f[1] = pool[b];
            run(2);
            for (std::size_t c = b + 1; c < p; ++c) {
              f[2] = pool[c];
              run(3);
              for (std::size_t d = c + 1; d < p; ++d) {
                f[3] = pool[d];
                run(4);
              }
            }
          }
        }
      }
      rec.verdict = pass_if(bad == 0);
      rec.witness = {{"cases", cases}, {"failures", bad}};
      if (bad) rec.witness["first_failure"] = first_bad;
    }));
  }
  return v;
}

// ---- T7.2-bound -----------------------------------------------------------

std::vector<CheckFn> suite_t72(const SuiteOptions&, Json& env) {
  const Index rank_window = 96, bound_window = 4096;
  env["windows"] = {{"rank", rank_window}, {"bound", bound_window}};
  struct Case {
    std::string name;
    std::function<NatSet(Index)> make;
  };
  std::vector<Case> cases = {
      {"evens", [](Index hi) { return from_periodic(PeriodicSet(2, {0}), Window{hi}); }},
      {"N-minus-1", [](Index hi) { return NatSet::from_predicate(hi, [](Index m) { return m != 1; }); }},
      {"rot4-x0-U0", [](Index hi) {
         return return_set(SystemSpec::finite_rotation(4), PointSpec::finite(0),
                           OpenSetSpec::states({0}), Window{hi}).set;
       }},
  };
  std::vector<CheckFn> v;
  for (const auto& c : cases) {
    v.push_back(make_check(c.name, {{"t_abs_max", 6}, {"n_bound", 8}, {"rank_cap", 6}},
                           [c, rank_window, bound_window](CheckRecord& rec) {
      NatSet small = c.make(rank_window);
      auto rank = window_rank(small, 6);
      if (!rank.rank) {
        rec.verdict = Verdict::Inconclusive;
        rec.detail = "window rank exceeds the cap";
        return;
      }
      auto minimizer = rank_minimizing_n(small, 8, 6);
      auto rep = iprstar_bound_check(c.make(bound_window), *rank.rank, minimizer.n, 6);
      rec.verdict = pass_if(!rep.any_below());
      rec.witness = {{"rank", to_json(rank)}, {"N", minimizer.n}, {"bound", to_json(rep)}};
    }));
  }
  return v;
}

// ---- §4-diagonal ----------------------------------------------------------

std::vector<CheckFn> suite_s4(const SuiteOptions&, Json& env) {
  const std::vector<std::vector<Index>> vectors = {{1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  env["matrix"] = {{"k", {2, 8}}, {"m", vectors}};
  std::vector<CheckFn> v;
  for (Index k = 2; k <= 8; ++k)
    for (const auto& m : vectors) {
      std::string id = "k" + std::to_string(k) + "-m";
      for (Index x : m) id += std::to_string(x);
      v.push_back(make_check(id, {{"k", k}, {"m", m}}, [k, m](CheckRecord& rec) {
        auto rep = diagonal_orbit(k, m);
        rec.verdict = pass_if(rep.ok() && static_cast<Index>(rep.components.size()) == rep.expected_components);
        rec.witness = to_json(rep);
      }));
    }
  return v;
}

// ---- §8-examples ----------------------------------------------------------

std::vector<CheckFn> suite_s8(const SuiteOptions&, Json& env) {
  env["windows"] = {{"example_8_2", 100000}, {"example_8_4", 10000}};
  std::vector<CheckFn> v;
  auto ex82 = [](Index hi, std::vector<std::pair<Index, Index>> pairs, Index min_gap) {
    return [hi, pairs, min_gap](CheckRecord& rec) {
      auto ex = build_example_8_2(Window{hi}, pairs);
      auto chk = check_example_8_2(ex.a, ex.plan);
      bool gaps_ok = true;
      Json gaps = Json::array();
      for (const auto& g : chk.gaps) {
        gaps_ok = gaps_ok && g.longest_gap >= min_gap;
        gaps.push_back({{"t", g.t}, {"n", g.n}, {"blocks", g.blocks}, {"longest_gap", g.longest_gap}});
      }
      rec.verdict = pass_if(chk.ok() && gaps_ok);
      rec.detail = chk.failure;
      rec.witness = {{"blocks", ex.plan.blocks.size()}, {"passes", ex.plan.passes},
                     {"cover", chk.cover_ok}, {"gaps", gaps}};
    };
  };
  v.push_back(make_check("example-8.2", {{"window", 100000}, {"pairs", {{1, 2}, {2, 2}, {1, 3}}}, {"min_gap", 50}},
                         ex82(100000, {{1, 2}, {2, 2}, {1, 3}}, 50)));
  v.push_back(make_check("example-8.2-small", {{"window", 1000}, {"pairs", {{1, 2}}}, {"min_gap", 50}},
                         ex82(1000, {{1, 2}}, 50)));
  v.push_back(make_check("example-8.2-capacity",
                         {{"window", 10}, {"pairs", {{1, 2}, {2, 3}, {3, 4}, {4, 5}}}},
                         [](CheckRecord& rec) {
    try {
      build_example_8_2(Window{10}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
      rec.verdict = Verdict::Fail;
      rec.detail = "allocation unexpectedly succeeded";
    } catch (const DomainError& e) {
      rec.verdict = Verdict::Pass;
      rec.witness = {{"error", e.what()}};
    }
  }));
  v.push_back(make_check("example-8.4", {{"window", 10000}}, [](CheckRecord& rec) {
    auto ex = build_example_8_4(Window{10000});
    auto chk = check_example_8_4(ex);
    bool both = std::count(chk.realized_t.begin(), chk.realized_t.end(), 1) &&
                std::count(chk.realized_t.begin(), chk.realized_t.end(), -1);
    rec.verdict = pass_if(chk.ok() && both);
    rec.detail = chk.failure;
    Json blocks = Json::array();
    for (const auto& b : ex.plan.blocks) blocks.push_back({{"n", b.n}, {"r", b.r}, {"m", b.m}});
    Json wit = Json::array();
    for (const auto& w : ex.witnesses) wit.push_back({{"t", w.t}, {"fs", to_json(w.fs)}});
    rec.witness = {{"blocks", blocks}, {"B_size", ex.b.size()}, {"realized_t", chk.realized_t},
                   {"violations", wit}};
  }));
  return v;
}

// ---- §9-thickness ---------------------------------------------------------

std::vector<CheckFn> suite_s9(const SuiteOptions&, Json& env) {
  env["grid"] = {{"k_max", 6}, {"n_max", 4}, {"U", "all non-empty"}};
  std::vector<CheckFn> v;
  for (Index k = 1; k <= 6; ++k)
    v.push_back(make_check("k" + std::to_string(k), {{"k", k}, {"n_max", 4}}, [k](CheckRecord& rec) {
      auto cells = thickness_equivalence_check(k, nonempty_subsets(k), 4);
      std::size_t agree = 0, all_hold = 0;
      Json disagreements = Json::array();
      for (const auto& c : cells) {
        if (c.agree()) ++agree;
        else disagreements.push_back(to_json(c));
        if (c.cond1 && c.cond4 && c.cond5) ++all_hold;
      }
      rec.verdict = pass_if(agree == cells.size());
      rec.witness = {{"cells", cells.size()}, {"agree", agree}, {"all_hold", all_hold},
                     {"disagreements", disagreements}};
    }));
  return v;
}

// ---- L8.1-translates ------------------------------------------------------

std::vector<CheckFn> suite_l81(const SuiteOptions&, Json& env) {
  env["windows"] = {{"rotation", 4000}, {"torus", 100000}};
  struct Case {
    std::string id;
    SystemSpec sys;
    PointSpec x;
    OpenSetSpec u;
    Index modulus, t_range, n_range, window, threshold;
  };
  std::vector<Case> cases = {
      {"rot4", SystemSpec::finite_rotation(4), PointSpec::finite(2), OpenSetSpec::states({0}), 4, 6, 12, 4000, 4},
      {"rot1", SystemSpec::finite_rotation(1), PointSpec::finite(0), OpenSetSpec::states({0}), 1, 6, 12, 4000, 1},
      {"torus", SystemSpec::torus_rotation(sqrt2_minus_1()), PointSpec::torus(0), quarter_arc(), 1, 10, 10,
       100000, 20},
  };
  std::vector<CheckFn> v;
  for (const auto& c : cases)
    v.push_back(make_check(c.id,
                           {{"system", c.sys.str()}, {"N", c.modulus}, {"t_max", c.t_range},
                            {"n_max", c.n_range}, {"window", c.window}, {"threshold", c.threshold}},
                           [c](CheckRecord& rec) {
      auto cells = translate_quotient_syndetic_check(c.sys, c.x, c.u, c.modulus, c.t_range, c.n_range,
                                                     Window{c.window}, c.threshold);
      Index worst = 0;
      std::size_t flagged = 0;
      for (const auto& cell : cells) {
        if (cell.flagged) ++flagged;
        if (cell.gap) worst = std::max(worst, *cell.gap);
      }
      rec.verdict = pass_if(flagged == 0);
      rec.witness = {{"cells", cells.size()}, {"flagged", flagged}, {"max_gap", worst}};
    }));
  return v;
}

std::string canonical_id(std::string_view id) {
  std::string s(id);
  if (s.rfind("S4-", 0) == 0 || s.rfind("S8-", 0) == 0 || s.rfind("S9-", 0) == 0)
    s = "§" + s.substr(1);
  return s;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "T1.1-rotation", "T1.2-rotation", "L6.2-grid",     "T7.2-bound",
      "§4-diagonal", "§8-examples", "§9-thickness", "L8.1-translates"};
  return ids;
}

std::vector<CheckRecord> run_checks(const std::vector<CheckFn>& checks, unsigned jobs) {
  std::vector<CheckRecord> out(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) out[i] = checks[i]();
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(checks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

SuiteReport run_suite(std::string_view id, const SuiteOptions& opt) {
  const std::string cid = canonical_id(id);
  SuiteReport rep;
  rep.suite = cid;
  rep.environment = {{"seed", opt.seed}, {"absolute_bound", absolute_bound()}, {"boundary_margin", 1e-9}};
  std::vector<CheckFn> checks;
  if (cid == "T1.1-rotation") checks = suite_t11(opt, rep.environment);
  else if (cid == "T1.2-rotation") checks = suite_t12(opt, rep.environment);
  else if (cid == "L6.2-grid") checks = suite_l62(opt, rep.environment);
  else if (cid == "T7.2-bound") checks = suite_t72(opt, rep.environment);
  else if (cid == "§4-diagonal") checks = suite_s4(opt, rep.environment);
  else if (cid == "§8-examples") checks = suite_s8(opt, rep.environment);
  else if (cid == "§9-thickness") checks = suite_s9(opt, rep.environment);
  else if (cid == "L8.1-translates") checks = suite_l81(opt, rep.environment);
  else throw DomainError("unknown suite '" + std::string(id) + "'");
  auto t0 = Clock::now();
  rep.checks = run_checks(checks, opt.jobs);
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return rep;
}

}  // namespace gplab
