// gplab: generate sets, compute return times, search for witnesses and run
// the verification suites. Every subcommand prints text or JSON.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gplab/lab.hpp"
#include "gplab/setfile.hpp"
#include "gplab/specparse.hpp"

using namespace gplab;

namespace {

struct Common {
  Index window = 10000;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = SuiteOptions{}.seed;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--window", c.window, "window [1, hi] to work on")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output file (set file for gen, JSON report otherwise)");
  app->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--seed", c.seed, "seed for randomized point sampling");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

// Prints the JSON document or its text rendering, and writes it to --out.
void emit(const Common& c, const Json& doc, const std::string& text, bool out_is_json = true) {
  if (out_is_json && !c.out.empty()) write_text(c.out, doc.dump(2) + "\n");
  std::cout << (c.format == "json" ? doc.dump(2) + "\n" : text);
}

std::vector<Index> parse_list(const std::string& s) {
  std::vector<Index> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stoll(item));
  return out;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  Index modulus = 4;
  std::string residues = "2";
  std::string system = "rot k=4", point = "2", open = "states 0";
  Index power = 1;
  std::string pairs = "1:2,2:2,1:3";
  std::string scale = "sqrt2-1", coeffs = "0,0,1";
  std::string interval = "0 1/4";
};

int run_gen(const Common& c, const GenArgs& g) {
  if (c.out.empty()) throw DomainError("gen needs --out <set file>");
  const Window w{c.window};
  Json prov{{"tool", "gplab gen"}, {"kind", g.kind}, {"window", c.window}};
  NatSet set;
  if (g.kind == "periodic") {
    set = from_periodic(PeriodicSet(g.modulus, parse_list(g.residues)), w);
    prov["modulus"] = g.modulus;
    prov["residues"] = parse_list(g.residues);
  } else if (g.kind == "returns") {
    auto sys = parse_system(g.system);
    auto rs = return_set(sys, parse_point(sys, g.point), parse_open_set(sys, g.open), w, g.power);
    set = rs.set;
    prov["system"] = sys.str();
    prov["point"] = g.point;
    prov["open_set"] = g.open;
    prov["power"] = g.power;
    prov["ambiguous"] = rs.ambiguous;
  } else if (g.kind == "example-8.2") {
    std::vector<std::pair<Index, Index>> pairs;
    std::istringstream in(g.pairs);
    for (std::string item; std::getline(in, item, ',');) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw DomainError("pairs are t:n, got '" + item + "'");
      pairs.emplace_back(std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
    }
    auto ex = build_example_8_2(w, pairs);
    set = ex.a;
    prov["pairs"] = pairs;
    prov["blocks"] = ex.plan.blocks.size();
  } else if (g.kind == "example-8.4") {
    auto ex = build_example_8_4(w);
    set = ex.a;
    prov["blocks"] = ex.plan.blocks.size();
  } else if (g.kind == "poly") {
    DiophantinePoly p{parse_approximant(g.scale, true), {}};
    for (Index v : parse_list(g.coeffs)) p.coeffs.emplace_back(v);
    auto bounds = parse_open_set(parse_system("torus alpha=1/2 rational"), "interval " + g.interval);
    auto res = poly_diophantine_set({p}, {bounds.factors[0].x_arcs}, w);
    set = res.set;
    prov["polynomial"] = p.str();
    prov["interval"] = g.interval;
    prov["ambiguous_excluded"] = res.ambiguous;
  } else {
    throw DomainError("unknown generator '" + g.kind + "'");
  }
  write_set_file(c.out, set);
  prov["size"] = set.size();
  write_text(c.out + ".json", prov.dump(2) + "\n");
  std::ostringstream text;
  text << "wrote " << set.size() << " members on [1, " << set.hi() << "] to " << c.out << "\n";
  Common quiet = c;
  quiet.out.clear();
  emit(quiet, prov, text.str());
  return 0;
}

// ---- returns --------------------------------------------------------------

int run_returns(const Common& c, const GenArgs& g) {
  auto sys = parse_system(g.system);
  auto rs = return_set(sys, parse_point(sys, g.point), parse_open_set(sys, g.open), Window{c.window},
                       g.power);
  Json doc{{"system", sys.str()},
           {"point", g.point},
           {"open_set", g.open},
           {"power", g.power},
           {"returns", to_json(rs.set, 200)},
           {"ambiguous", rs.ambiguous}};
  std::ostringstream text;
  text << "R = " << rs.set.str(30) << "\n"
       << "size " << rs.set.size() << ", boundary-ambiguous times " << rs.ambiguous.size() << "\n";
  emit(c, doc, text.str());
  return 0;
}

// ---- analyze --------------------------------------------------------------

NatSet load_set(const std::string& path, Index window, bool window_given) {
  auto parsed = parse_set_file(path);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return window_given ? restrict_to(parsed.set, std::min(window, parsed.set.hi())) : parsed.set;
}

int run_analyze(const Common& c, const std::string& path, bool window_given, unsigned rank_cap) {
  NatSet a = load_set(path, c.window, window_given);
  auto gap = gap_syndeticity(a);
  auto rank = window_rank(restrict_to(a, std::min<Index>(a.hi(), 128)), rank_cap);
  auto coset = CosetSpec::full();
  auto prof = density_profile(a, coset, default_grid_family(coset, a.hi(), 16), 16);
  Json doc{{"set", to_json(a, 50)},
           {"max_gap", gap ? Json(*gap) : Json(nullptr)},
           {"rank", to_json(rank)},
           {"density", to_json(prof)}};
  std::ostringstream text;
  text << "set " << a.str(20) << "\n"
       << "size " << a.size() << " on [1, " << a.hi() << "]\n"
       << "max gap " << (gap ? std::to_string(*gap) : "none (empty)") << "\n"
       << "window IP* rank on [1, " << rank.window.hi << "]: "
       << (rank.rank ? std::to_string(*rank.rank) : "> " + std::to_string(rank_cap)) << "\n"
       << "multiplicative density profile (empirical) min ratio " << prof.summary.str() << " over "
       << prof.entries.size() << " grids\n";
  emit(c, doc, text.str());
  return 0;
}

// ---- witness --------------------------------------------------------------

struct WitnessArgs {
  std::string op, set_path, f_list = "1,3";
  unsigned length = 3;
  Index bound = 20;
  Index n_mod = 4, t = 1;
};

int run_witness(const Common& c, const WitnessArgs& wa, bool window_given) {
  Json doc{{"op", wa.op}};
  std::ostringstream text;
  Verdict verdict = Verdict::Inconclusive;
  if (wa.op == "translate") {
    auto w = solve_translate_witness(wa.n_mod, wa.t, parse_list(wa.f_list));
    doc["witness"] = to_json(w);
    verdict = check_translate_witness(w).empty() ? Verdict::Pass : Verdict::Fail;
    text << w.str() << "\n";
  } else {
    if (wa.set_path.empty()) throw DomainError("witness " + wa.op + " needs --set <file>");
    NatSet a = load_set(wa.set_path, c.window, window_given);
    if (wa.op == "gp") {
      auto w = find_gp(a, wa.length, wa.bound);
      if (w) doc["witness"] = to_json(*w), verdict = Verdict::Pass;
      text << (w ? "GP n=" + std::to_string(w->n) + " m=" + std::to_string(w->m) : "no GP in range") << "\n";
    } else if (wa.op == "geo-arith") {
      auto r = find_geo_arith(a, wa.length, {wa.bound, wa.bound, wa.bound});
      if (r.witness) doc["witness"] = to_json(*r.witness), verdict = Verdict::Pass;
      doc["truncated"] = r.truncated;
      text << (r.witness ? "a=" + std::to_string(r.witness->a) + " c=" + std::to_string(r.witness->c) +
                               " d=" + std::to_string(r.witness->d)
                         : "no configuration in range")
           << "\n";
    } else if (wa.op == "ap") {
      auto w = ap_search(a, wa.length);
      if (w) doc["witness"] = to_json(*w), verdict = Verdict::Pass;
      text << (w ? "AP start=" + std::to_string(w->start) + " step=" + std::to_string(w->step)
                 : "no AP in window")
           << "\n";
    } else if (wa.op == "ip") {
      auto w = contains_ip_r(a, wa.length, wa.bound);
      if (w) doc["witness"] = to_json(*w), verdict = Verdict::Pass;
      text << (w ? "FS" + w->str() : "no IP set in range") << "\n";
    } else if (wa.op == "ip-star") {
      auto w = ip_r_star_violator(a, wa.length);
      // a violator refutes IP_r*; its absence only confirms the window
      verdict = w ? Verdict::Fail : Verdict::Pass;
      if (w) doc["violator"] = to_json(*w);
      text << (w ? "violated by FS" + w->str() : "window IP* confirmed") << "\n";
    } else {
      throw DomainError("unknown witness op '" + wa.op + "'");
    }
  }
  doc["verdict"] = std::string(to_string(verdict));
  text << "verdict " << to_string(verdict) << "\n";
  emit(c, doc, text.str());
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  unsigned jobs = 1;
  std::string replay;
  bool timing = true;
};

int run_verify(const Common& c, const VerifyArgs& va) {
  SuiteOptions opt;
  opt.jobs = va.jobs;
  opt.seed = c.seed;
  std::vector<std::string> ids = va.suites;
  Json reference;
  if (!va.replay.empty()) {
    std::ifstream f(va.replay);
    if (!f) throw Error("cannot read '" + va.replay + "'");
    reference = Json::parse(f);
    if (auto errs = validate_report(reference); !errs.empty()) throw Error("invalid report: " + errs.front());
    ids.clear();
    for (const auto& s : reference["suites"]) {
      ids.push_back(s["suite"].get<std::string>());
      opt.seed = s["environment"]["seed"].get<std::uint64_t>();
    }
  }
  if (ids.empty()) ids = suite_ids();
  std::vector<SuiteReport> reports;
  std::ostringstream text;
  bool failed = false;
  for (const auto& id : ids) {
    auto rep = run_suite(id, opt);
    for (const auto& chk : rep.checks) {
      failed = failed || chk.verdict == Verdict::Fail;
      text << rep.suite << "/" << chk.id << ": " << to_string(chk.verdict);
      if (!chk.detail.empty()) text << " (" << chk.detail << ")";
      text << "\n";
    }
    text << rep.suite << ": " << to_string(rep.overall()) << " in " << rep.seconds << " s\n";
    reports.push_back(std::move(rep));
  }
  Json doc = make_report(reports, va.timing);
  if (!va.replay.empty()) {
    Json fresh = make_report(reports, false);
    Json old = reference;
    for (auto& s : old["suites"]) {
      s.erase("seconds");
      for (auto& chk : s["checks"]) chk.erase("seconds");
    }
    bool same = fresh == old;
    text << "replay " << (same ? "identical" : "DIFFERS") << "\n";
    failed = failed || !same;
  }
  emit(c, doc, text.str());
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gplab: return times, multiplicative patterns and verification suites"};
  app.require_subcommand(1);
  Common common;
  GenArgs gen;
  WitnessArgs wit;
  VerifyArgs ver;
  std::string set_path;
  unsigned rank_cap = 4;

  auto* g = app.add_subcommand("gen", "generate a set file with a JSON provenance sidecar");
  add_common(g, common);
  g->add_option("kind", gen.kind, "periodic | returns | example-8.2 | example-8.4 | poly")->required();
  g->add_option("--modulus", gen.modulus);
  g->add_option("--residues", gen.residues, "comma-separated residues");
  g->add_option("--system", gen.system);
  g->add_option("--point", gen.point);
  g->add_option("--open", gen.open);
  g->add_option("--power", gen.power);
  g->add_option("--pairs", gen.pairs, "t:n pairs, comma-separated");
  g->add_option("--scale", gen.scale, "irrational scale of the polynomial");
  g->add_option("--coeffs", gen.coeffs, "integer coefficients c0,c1,...");
  g->add_option("--interval", gen.interval, "target arc 'lo hi'");

  auto* r = app.add_subcommand("returns", "return-time set of a point and open set");
  add_common(r, common);
  r->add_option("--system", gen.system);
  r->add_option("--point", gen.point);
  r->add_option("--open", gen.open);
  r->add_option("--power", gen.power);

  auto* a = app.add_subcommand("analyze", "gaps, window IP* rank and density profile of a set file");
  add_common(a, common);
  a->add_option("set", set_path)->required()->check(CLI::ExistingFile);
  a->add_option("--rank-cap", rank_cap);

  auto* w = app.add_subcommand("witness", "search for a configuration and report its witness");
  add_common(w, common);
  w->add_option("op", wit.op, "gp | geo-arith | ap | ip | ip-star | translate")->required();
  w->add_option("--set", wit.set_path)->check(CLI::ExistingFile);
  w->add_option("--length", wit.length, "pattern length or r");
  w->add_option("--bound", wit.bound, "parameter bound (m, a/c/d or generators)");
  w->add_option("--N", wit.n_mod);
  w->add_option("--t", wit.t);
  w->add_option("--F", wit.f_list, "comma-separated F for translate");

  auto* v = app.add_subcommand("verify", "run verification suites; exit 1 iff a check fails");
  add_common(v, common);
  v->add_option("--suite", ver.suites, "suite id (repeatable, default all)");
  v->add_option("--jobs", ver.jobs)->check(CLI::PositiveNumber);
  v->add_option("--replay", ver.replay, "re-run a report and compare verdicts and witnesses")
      ->check(CLI::ExistingFile);
  v->add_flag("!--no-timing", ver.timing, "omit wall times from the report");
  v->add_flag_callback("--list", [] {
    for (const auto& id : suite_ids()) std::cout << id << "\n";
    std::exit(0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version are successes; malformed arguments share the error status
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*g) return run_gen(common, gen);
    if (*r) return run_returns(common, gen);
    if (*a) return run_analyze(common, set_path, a->count("--window") > 0, rank_cap);
    if (*w) return run_witness(common, wit, w->count("--window") > 0);
    if (*v) return run_verify(common, ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
