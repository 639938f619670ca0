#include "wdsaw/model.hpp"

#include "wdsaw/error.hpp"

namespace wdsaw {

std::string_view to_string(Model m) noexcept {
  return m == Model::horizontal ? "horizontal" : "diagonal";
}

std::string_view to_string(StepSet s) noexcept {
  switch (s) {
    case StepSet::NES: return "nes";
    case StepSet::ESW: return "esw";
    case StepSet::ES: return "es";
  }
  return "?";
}

std::string to_string(BridgeFamily f) {
  return std::string(to_string(f.model)) + "-" + std::string(to_string(f.steps));
}

Model parse_model(std::string_view text) {
  if (text == "horizontal") return Model::horizontal;
  if (text == "diagonal") return Model::diagonal;
  throw Error(ErrorCode::invalid_argument, "unknown model '" + std::string(text) + "' (expected horizontal|diagonal)");
}

BridgeFamily parse_family(std::string_view text) {
  if (text == "horizontal" || text == "horizontal-nes") return BridgeFamily::horizontal_nes();
  if (text == "diagonal-esw") return BridgeFamily::diagonal_esw();
  if (text == "diagonal-nes") return BridgeFamily::diagonal_nes();
  if (text == "diagonal-es") return BridgeFamily::diagonal_es();
  throw Error(ErrorCode::unsupported_family,
              "unknown bridge family '" + std::string(text) +
                  "' (expected horizontal-nes|diagonal-esw|diagonal-nes|diagonal-es)");
}

}  // namespace wdsaw
