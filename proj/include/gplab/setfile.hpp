#pragma once

// Plain-text set files: one decimal integer per line, '#' starts a comment
// line, and the first non-comment line may be "window <hi>". Without a window
// line the window ends at the largest member.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gplab/natset.hpp"

namespace gplab {

struct ParsedSet {
  NatSet set;
  bool had_window = false;
  std::vector<std::string> warnings;  // e.g. duplicate members, with line numbers
};

// Throws ParseError carrying the 1-based line of the first malformed line.
ParsedSet parse_set_text(std::string_view text);
ParsedSet parse_set_file(const std::filesystem::path& path);

// Canonical form: "window <hi>" then the members ascending, one per line.
std::string emit_set_text(const NatSet& a);
void write_set_file(const std::filesystem::path& path, const NatSet& a);

}  // namespace gplab
