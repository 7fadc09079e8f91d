#include "gplab/specparse.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

namespace gplab {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Index parse_int(const std::string& s) {
  Index v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(1, "not an integer: '" + s + "'");
  return v;
}

Rational parse_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const Error&) {
    throw ParseError(1, "not a rational: '" + s + "'");
  }
}

}  // namespace

Approximant parse_approximant(std::string_view text, bool irrational, long double precision) {
  Approximant a;
  if (text == "sqrt2-1") a = sqrt2_minus_1();
  else if (text == "golden") a = golden_conjugate();
  else if (text.find('/') != std::string_view::npos) {
    Rational r = parse_rational(std::string(text));
    if (r < Rational(0)) throw ParseError(1, "alpha must be non-negative");
    a.num = r.num() % r.den();
    a.den = r.den();
    a.precision = 0;
  } else {
    a = Approximant::from_decimal(text, irrational, precision);
  }
  a.irrational = irrational;
  if (precision > 0) a.precision = precision;
  return a;
}

SystemSpec parse_system(std::string_view text) {
  std::vector<SystemSpec> parts;
  for (const auto& factor : split(text, '*')) {
    auto w = words(factor);
    if (w.empty()) throw ParseError(1, "empty system factor");
    if (w[0] == "rot") {
      if (w.size() != 2 || w[1].rfind("k=", 0) != 0) throw ParseError(1, "expected 'rot k=<k>'");
      parts.push_back(SystemSpec::finite_rotation(parse_int(w[1].substr(2))));
      continue;
    }
    if (w[0] != "torus" && w[0] != "skew") throw ParseError(1, "unknown system '" + w[0] + "'");
    std::string alpha;
    long double prec = 0;
    bool irrational = true;
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].rfind("alpha=", 0) == 0) alpha = w[i].substr(6);
      else if (w[i].rfind("prec=", 0) == 0) prec = parse_rational(w[i].substr(5)).to_long_double();
      else if (w[i] == "rational") irrational = false;
      else throw ParseError(1, "unknown option '" + w[i] + "'");
    }
    if (alpha.empty()) throw ParseError(1, w[0] + " needs alpha=<value>");
    Approximant a = parse_approximant(alpha, irrational, prec);
    parts.push_back(w[0] == "torus" ? SystemSpec::torus_rotation(a) : SystemSpec::skew_product(a));
  }
  return SystemSpec::product(parts);
}

PointSpec parse_point(const SystemSpec& sys, std::string_view text) {
  auto factors = split(text, '*');
  if (factors.size() != sys.factors.size())
    throw ParseError(1, "point needs one entry per system factor");
  PointSpec p;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto w = words(factors[i]);
    for (auto& s : w)
      if (auto eq = s.find('='); eq != std::string::npos) s = s.substr(eq + 1);  // x=..., y=...
    FactorPoint fp;
    switch (sys.factors[i].kind) {
      case FactorSpec::Kind::Finite:
        if (w.size() != 1) throw ParseError(1, "finite point is one state");
        fp.state = parse_int(w[0]);
        break;
      case FactorSpec::Kind::Torus:
        if (w.size() != 1) throw ParseError(1, "torus point is one rational");
        fp.x = parse_rational(w[0]);
        break;
      case FactorSpec::Kind::Skew:
        if (w.size() != 2) throw ParseError(1, "skew point is two rationals");
        fp.x = parse_rational(w[0]);
        fp.y = parse_rational(w[1]);
        break;
    }
    p.coords.push_back(fp);
  }
  return p;
}

OpenSetSpec parse_open_set(const SystemSpec& sys, std::string_view text) {
  auto factors = split(text, '*');
  if (factors.size() != sys.factors.size())
    throw ParseError(1, "open set needs one entry per system factor");
  OpenSetSpec u;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto w = words(factors[i]);
    if (w.empty()) throw ParseError(1, "empty open set factor");
    FactorOpenSet fs;
    if (w[0] == "states") {
      for (std::size_t j = 1; j < w.size(); ++j) fs.states.push_back(parse_int(w[j]));
    } else if (w[0] == "box") {
      if (w.size() != 5) throw ParseError(1, "expected 'box x0 x1 y0 y1'");
      fs.x_arcs.push_back({parse_rational(w[1]), parse_rational(w[2])});
      fs.y_arcs.push_back({parse_rational(w[3]), parse_rational(w[4])});
    } else {
      auto* target = &fs.x_arcs;
      for (std::size_t j = 0; j < w.size();) {
        if (w[j] == "|") {
          target = &fs.y_arcs;
          ++j;
        } else if (w[j] == "interval" && j + 2 < w.size()) {
          target->push_back({parse_rational(w[j + 1]), parse_rational(w[j + 2])});
          j += 3;
        } else {
          throw ParseError(1, "expected 'interval <lo> <hi>' near '" + w[j] + "'");
        }
      }
    }
    u.factors.push_back(std::move(fs));
  }
  return u;
}

}  // namespace gplab
