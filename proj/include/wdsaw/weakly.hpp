#pragma once

// Generating functions of weakly directed bridges and walks, assembled from
// the pseudo-bridge sums.

#include <cstddef>

#include "wdsaw/model.hpp"
#include "wdsaw/series.hpp"

namespace wdsaw {

/// Partially directed irreducible bridges.
/// horizontal: I = 2tB/(1 + tB) - t
/// diagonal:   I = 2tB1/(1 + tB1) + 4tB2/(1 + 2tB2) - 2tB0/(1 + tB0) - 2t
TruncatedSeries irreducible_gf(Model model, std::size_t order);

/// Bridges whose irreducible bridges are partially directed: 1/(1 - I).
/// In the horizontal model these are exactly the weakly directed bridges.
TruncatedSeries weakly_bridge_gf(Model model, std::size_t order);

struct NesWalkSeries {
  TruncatedSeries general;
  TruncatedSeries positive;
  TruncatedSeries copositive;
};

/// T = (1 + t)/(1 - 2t - t^2), P = (sqrt((1 - t^4)/(1 - 2t - t^2)) - 1 - t)/(2t^2),
/// Q = 1 + tP.
NesWalkSeries nes_walk_gfs(std::size_t order);

/// Irreducible NES walks: P_i = (P - 1)/(1 + tB), Q_i = (Q - 1)/(1 + tB),
/// T_i = T - 1 - 2 Q_i (1 + tB) P_i.
NesWalkSeries irreducible_walk_gfs(std::size_t order);

/// All weakly directed walks:
/// 1 + (2T_i - 2t) + 2(2Q_i - t) W (2P_i - t).
TruncatedSeries weakly_walk_gf(std::size_t order);

}  // namespace wdsaw
