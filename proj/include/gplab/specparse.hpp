#pragma once

// Text syntax for systems, points and open sets, as used on the command line.
//
//   system:  rot k=4 | torus alpha=0.61803398874989 prec=1e-12 | skew alpha=golden
//            factors joined by '*'; "rational" marks alpha as not irrational
//   point:   2 | 1/3 | 1/3 0      one entry per factor, joined by '*'
//   open set: states 0 2 | interval 0/1 1/4 interval 1/2 3/4 | box 0 1/4 0 1/2
//            for skew factors, '|' switches from x intervals to y intervals

#include <string_view>

#include "gplab/dynsim.hpp"

namespace gplab {

// alpha values: decimal literals, p/q, or the names sqrt2-1 and golden.
Approximant parse_approximant(std::string_view text, bool irrational, long double precision = 0);

SystemSpec parse_system(std::string_view text);
PointSpec parse_point(const SystemSpec& sys, std::string_view text);
OpenSetSpec parse_open_set(const SystemSpec& sys, std::string_view text);

}  // namespace gplab
