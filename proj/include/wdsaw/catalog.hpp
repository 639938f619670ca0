#pragma once

// Named walk classes: each pairs a generating function with the oracle
// predicate that defines the same class, so the two can be compared.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "wdsaw/model.hpp"
#include "wdsaw/oracle.hpp"
#include "wdsaw/series.hpp"

namespace wdsaw {

enum class WalkClass {
  W,          // weakly directed horizontal bridges
  Wbar,       // weakly directed walks
  Wdiag,      // diagonal bridges with partially directed irreducible bridges
  WdiagWeak,  // weakly directed diagonal bridges (oracle only)
  B,          // horizontal NES pseudo-bridges
  B0,         // diagonal ES pseudo-bridges
  B1,         // diagonal ESW pseudo-bridges
  B2,         // diagonal NES pseudo-bridges
  I,          // partially directed irreducible horizontal bridges
  Idiag,      // partially directed irreducible diagonal bridges
  T,          // NES walks
  P,          // positive NES walks
  Q,          // copositive NES walks
  Ti,         // irreducible NES walks
  Pi,         // positive irreducible NES walks
  Qi,         // copositive irreducible NES walks
};

struct WalkClassInfo {
  WalkClass cls;
  std::string_view name;
  Model model;
  bool has_series;
  std::string_view description;
};

std::span<const WalkClassInfo> walk_classes();
const WalkClassInfo& info(WalkClass c);
std::string_view to_string(WalkClass c);
/// Throws InvalidArgument for unknown names.
WalkClass parse_walk_class(std::string_view name);

/// Generating function of the class. Throws UnsupportedFamily for WdiagWeak.
TruncatedSeries class_series(WalkClass c, std::size_t order);
/// Oracle membership test for a self-avoiding walk.
bool class_member(WalkClass c, const Walk& w);
/// Step restriction and prefix pruning that keep the enumeration exact.
EnumerationOptions class_enumeration(WalkClass c, int max_n = 16);
/// Oracle counts for lengths 0..nmax.
std::vector<std::uint64_t> class_counts(WalkClass c, int nmax, int max_n = 16);

}  // namespace wdsaw
