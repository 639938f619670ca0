#pragma once

#include <string>
#include <string_view>

namespace wdsaw {

/// Height of (x, y): y in the horizontal model, x + y in the diagonal one.
enum class Model { horizontal, diagonal };

constexpr int height(int x, int y, Model m) noexcept { return m == Model::horizontal ? y : x + y; }

enum class StepSet { NES, ESW, ES };

/// A family of partially directed bridges with a solved generating function.
/// NSW and NEW families are reflections of these and have no entry here.
struct BridgeFamily {
  Model model;
  StepSet steps;

  static constexpr BridgeFamily horizontal_nes() { return {Model::horizontal, StepSet::NES}; }
  static constexpr BridgeFamily diagonal_esw() { return {Model::diagonal, StepSet::ESW}; }
  static constexpr BridgeFamily diagonal_nes() { return {Model::diagonal, StepSet::NES}; }
  static constexpr BridgeFamily diagonal_es() { return {Model::diagonal, StepSet::ES}; }

  bool is_solvable() const noexcept {
    if (model == Model::horizontal) return steps == StepSet::NES;
    return true;
  }

  friend constexpr bool operator==(BridgeFamily, BridgeFamily) = default;
};

std::string_view to_string(Model m) noexcept;
std::string_view to_string(StepSet s) noexcept;
std::string to_string(BridgeFamily f);

/// Parses "horizontal"/"diagonal"; throws InvalidArgument otherwise.
Model parse_model(std::string_view text);
/// Parses "horizontal", "horizontal-nes", "diagonal-esw", "diagonal-nes",
/// "diagonal-es"; throws UnsupportedFamily otherwise.
BridgeFamily parse_family(std::string_view text);

}  // namespace wdsaw
