#pragma once

// Plain SVG emitters. Output is deterministic text so it can be compared
// byte for byte against golden files.

#include <string>
#include <vector>

#include "wdsaw/asymptotics.hpp"
#include "wdsaw/oracle.hpp"

namespace wdsaw {

/// 10 px per lattice unit, a circle at the origin, the walk as one stroked
/// path. North points up.
std::string walk_svg(const Walk& w);

/// The boundary set (curve and real segments) with the roots of each set
/// overlaid, 200 px per unit.
std::string zeros_svg(const std::vector<ComplexRootSet>& roots, const BoundarySet& set);

}  // namespace wdsaw
