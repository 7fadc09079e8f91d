#pragma once

#include <string_view>

namespace gplab {

// Finite searches over statements about N can refute, confirm a finite
// instance, or run out of room; the last case is never reported as failure.
enum class Verdict { Pass, Fail, Inconclusive };

constexpr std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace gplab
