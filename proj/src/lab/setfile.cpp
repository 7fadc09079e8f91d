#include "gplab/setfile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace gplab {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_index(std::string_view s, Index& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

ParsedSet parse_set_text(std::string_view text) {
  ParsedSet res;
  std::vector<std::pair<Index, std::size_t>> members;  // value, line
  Index hi = -1;
  bool seen_content = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("window", 0) == 0) {
      if (seen_content) throw ParseError(line_no, "window line must precede the members");
      Index v;
      if (!parse_index(trim(line.substr(6)), v) || v < 0)
        throw ParseError(line_no, "expected 'window <hi>' with hi >= 0");
      hi = v;
      res.had_window = true;
      seen_content = true;
      continue;
    }
    seen_content = true;
    Index v;
    if (!parse_index(line, v)) throw ParseError(line_no, "not an integer: '" + std::string(line) + "'");
    if (v < 1) throw ParseError(line_no, "members must be positive");
    if (hi >= 0 && v > hi)
      throw ParseError(line_no, "member " + std::to_string(v) + " exceeds the window " + std::to_string(hi));
    members.emplace_back(v, line_no);
  }
  std::vector<Index> vals;
  vals.reserve(members.size());
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i && members[i].first == members[i - 1].first) {
      res.warnings.push_back("line " + std::to_string(members[i].second) + ": duplicate member " +
                             std::to_string(members[i].first) + " ignored");
      continue;
    }
    vals.push_back(members[i].first);
  }
  if (hi < 0) hi = vals.empty() ? 0 : vals.back();
  res.set = NatSet::from_members(hi, std::move(vals));
  return res;
}

ParsedSet parse_set_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set_text(ss.str());
}

std::string emit_set_text(const NatSet& a) {
  std::string out = "window " + std::to_string(a.hi()) + "\n";
  for (Index m : a) {
    out += std::to_string(m);
    out += '\n';
  }
  return out;
}

void write_set_file(const std::filesystem::path& path, const NatSet& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << emit_set_text(a);
}

}  // namespace gplab
