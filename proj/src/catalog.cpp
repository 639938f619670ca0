#include "wdsaw/catalog.hpp"

#include <array>
#include <string>

#include "wdsaw/bridges.hpp"
#include "wdsaw/error.hpp"
#include "wdsaw/weakly.hpp"

namespace wdsaw {
namespace {

constexpr Model H = Model::horizontal;
constexpr Model D = Model::diagonal;

constexpr std::array<WalkClassInfo, 16> kClasses{{
    {WalkClass::W, "W", H, true, "weakly directed bridges"},
    {WalkClass::Wbar, "Wbar", H, true, "weakly directed walks"},
    {WalkClass::Wdiag, "Wdiag", D, true, "diagonal bridges with partially directed irreducible bridges"},
    {WalkClass::WdiagWeak, "WdiagWeak", D, false, "weakly directed diagonal bridges"},
    {WalkClass::B, "B", H, true, "NES pseudo-bridges"},
    {WalkClass::B0, "B0", D, true, "diagonal ES pseudo-bridges"},
    {WalkClass::B1, "B1", D, true, "diagonal ESW pseudo-bridges"},
    {WalkClass::B2, "B2", D, true, "diagonal NES pseudo-bridges"},
    {WalkClass::I, "I", H, true, "partially directed irreducible bridges"},
    {WalkClass::Idiag, "Idiag", D, true, "partially directed irreducible diagonal bridges"},
    {WalkClass::T, "T", H, true, "NES walks"},
    {WalkClass::P, "P", H, true, "positive NES walks"},
    {WalkClass::Q, "Q", H, true, "copositive NES walks"},
    {WalkClass::Ti, "Ti", H, true, "irreducible NES walks"},
    {WalkClass::Pi, "Pi", H, true, "positive irreducible NES walks"},
    {WalkClass::Qi, "Qi", H, true, "copositive irreducible NES walks"},
}};

const StepMask kNES = mask_of(Step::N) | mask_of(Step::E) | mask_of(Step::S);
const StepMask kESW = mask_of(Step::E) | mask_of(Step::S) | mask_of(Step::W);
const StepMask kES = mask_of(Step::E) | mask_of(Step::S);

bool uses_only(const Walk& w, StepMask allowed) { return (w.letters() & ~allowed) == 0; }

bool factors_partially_directed(const Walk& w, Model m) {
  for (const auto& f : factor_irreducible(w, m))
    if (!is_partially_directed(f)) return false;
  return true;
}

bool irreducible_pd_bridge(const Walk& w, Model m) {
  return is_bridge(w, m) && is_irreducible(w, m) && is_partially_directed(w);
}

}  // namespace

std::span<const WalkClassInfo> walk_classes() { return kClasses; }

const WalkClassInfo& info(WalkClass c) { return kClasses[static_cast<std::size_t>(c)]; }

std::string_view to_string(WalkClass c) { return info(c).name; }

WalkClass parse_walk_class(std::string_view name) {
  for (const auto& c : kClasses)
    if (c.name == name) return c.cls;
  std::string names;
  for (const auto& c : kClasses) names += (names.empty() ? "" : "|") + std::string(c.name);
  throw Error(ErrorCode::invalid_argument, "unknown class '" + std::string(name) + "' (expected " + names + ")");
}

TruncatedSeries class_series(WalkClass c, std::size_t order) {
  switch (c) {
    case WalkClass::W: return weakly_bridge_gf(H, order);
    case WalkClass::Wbar: return weakly_walk_gf(order);
    case WalkClass::Wdiag: return weakly_bridge_gf(D, order);
    case WalkClass::WdiagWeak:
      throw Error(ErrorCode::unsupported_family, "weakly directed diagonal bridges have no series here");
    case WalkClass::B: return bridge_sum(BridgeFamily::horizontal_nes(), order);
    case WalkClass::B0: return bridge_sum(BridgeFamily::diagonal_es(), order);
    case WalkClass::B1: return bridge_sum(BridgeFamily::diagonal_esw(), order);
    case WalkClass::B2: return bridge_sum(BridgeFamily::diagonal_nes(), order);
    case WalkClass::I: return irreducible_gf(H, order);
    case WalkClass::Idiag: return irreducible_gf(D, order);
    case WalkClass::T: return nes_walk_gfs(order).general;
    case WalkClass::P: return nes_walk_gfs(order).positive;
    case WalkClass::Q: return nes_walk_gfs(order).copositive;
    case WalkClass::Ti: return irreducible_walk_gfs(order).general;
    case WalkClass::Pi: return irreducible_walk_gfs(order).positive;
    case WalkClass::Qi: return irreducible_walk_gfs(order).copositive;
  }
  throw Error(ErrorCode::internal, "unhandled walk class");
}

bool class_member(WalkClass c, const Walk& w) {
  switch (c) {
    case WalkClass::W: return is_bridge(w, H) && is_weakly_directed(w, H);
    case WalkClass::Wbar: return is_weakly_directed(w, H);
    case WalkClass::Wdiag: return is_bridge(w, D) && factors_partially_directed(w, D);
    case WalkClass::WdiagWeak: return is_bridge(w, D) && is_weakly_directed(w, D);
    case WalkClass::B: return uses_only(w, kNES) && is_pseudo_bridge(w, H);
    case WalkClass::B0: return uses_only(w, kES) && is_pseudo_bridge(w, D);
    case WalkClass::B1: return uses_only(w, kESW) && is_pseudo_bridge(w, D);
    case WalkClass::B2: return uses_only(w, kNES) && is_pseudo_bridge(w, D);
    case WalkClass::I: return irreducible_pd_bridge(w, H);
    case WalkClass::Idiag: return irreducible_pd_bridge(w, D);
    case WalkClass::T: return uses_only(w, kNES);
    case WalkClass::P: return uses_only(w, kNES) && is_positive(w, H);
    case WalkClass::Q: return uses_only(w, kNES) && is_copositive(w, H);
    case WalkClass::Ti: return uses_only(w, kNES) && is_irreducible(w, H);
    case WalkClass::Pi: return uses_only(w, kNES) && is_irreducible(w, H) && is_positive(w, H);
    case WalkClass::Qi: return uses_only(w, kNES) && is_irreducible(w, H) && is_copositive(w, H);
  }
  return false;
}

EnumerationOptions class_enumeration(WalkClass c, int max_n) {
  EnumerationOptions o;
  o.max_n = max_n;
  auto positive_h = [](const Walk& w) { return is_positive(w, H); };
  auto positive_d = [](const Walk& w) { return is_positive(w, D); };
  switch (c) {
    case WalkClass::W:
      o.prefix_filter = [](const Walk& w) { return is_positive(w, H) && is_weakly_directed(w, H); };
      break;
    case WalkClass::Wbar: o.prefix_filter = [](const Walk& w) { return is_weakly_directed(w, H); }; break;
    case WalkClass::Wdiag:
    case WalkClass::WdiagWeak:
    case WalkClass::Idiag: o.prefix_filter = positive_d; break;
    case WalkClass::I: o.prefix_filter = positive_h; break;
    case WalkClass::B: o.allowed = kNES; o.prefix_filter = positive_h; break;
    case WalkClass::B0: o.allowed = kES; o.prefix_filter = positive_d; break;
    case WalkClass::B1: o.allowed = kESW; o.prefix_filter = positive_d; break;
    case WalkClass::B2: o.allowed = kNES; o.prefix_filter = positive_d; break;
    case WalkClass::P:
    case WalkClass::Pi: o.allowed = kNES; o.prefix_filter = positive_h; break;
    case WalkClass::T:
    case WalkClass::Q:
    case WalkClass::Ti:
    case WalkClass::Qi: o.allowed = kNES; break;
  }
  return o;
}

std::vector<std::uint64_t> class_counts(WalkClass c, int nmax, int max_n) {
  return counts_by_length(nmax, [c](const Walk& w) { return class_member(c, w); }, class_enumeration(c, max_n));
}

}  // namespace wdsaw
