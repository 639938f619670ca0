#pragma once

// Generating functions of partially directed pseudo-bridges of bounded
// height, their denominators G_k / F_k, the heaps-of-cycles denominators
// H_k, and bounded-height excursions.
//
// A pseudo-bridge of height k starts at height 0, ends at height k and never
// leaves the strip [0, k]. Its length series is t^k / G_k(t) for the NES
// family in the horizontal model, and analogous expressions for the three
// solved diagonal families.

#include <cstddef>
#include <vector>

#include "wdsaw/model.hpp"
#include "wdsaw/series.hpp"

namespace wdsaw {

/// Denominator polynomial of the height-k pseudo-bridge series.
///
/// horizontal NES: G_{-1} = 1, G_0 = 1 - t,
///                 G_{k+1} = (1 - t + t^2 + t^3) G_k - t^2 G_{k-1}
/// diagonal ESW and NES: G_0 = 1, G_1 = 1 - t^2,
///                 G_{k+1} = (1 + t^2) G_k - t^2 (2 - t^2) G_{k-1}
/// diagonal ES:    F_{-1} = 1, F_0 = 1, F_{k+1} = F_k - t^2 F_{k-1}
LatticePolynomial gk(BridgeFamily family, int k);

/// [G_0, ..., G_kmax] for the family.
std::vector<LatticePolynomial> gk_sequence(BridgeFamily family, int kmax);

/// Length series of pseudo-bridges of height k in the family.
TruncatedSeries pseudo_bridge_series(BridgeFamily family, int k, std::size_t order);

/// Sum of pseudo_bridge_series over k = 0..order. Every term has valuation
/// k, so the truncated sum is exact.
TruncatedSeries bridge_sum(BridgeFamily family, std::size_t order);

/// Weighted path graph on {0..k}: ascending edges i -> i+1 of weight A and
/// descending edges i -> i-h of weight descents[h]. Missing descents are zero.
struct HeapSpec {
  TruncatedSeries ascending;
  std::vector<TruncatedSeries> descents;

  /// A = t, D(v) = t / (1 - t^2 v / (1 - t v)): reproduces horizontal G_k.
  static HeapSpec horizontal_nes(std::size_t order, int hmax);
  /// A = t, D(v) = t v / (1 - t^2 v^2 / (1 - t v)): reproduces diagonal G_k.
  static HeapSpec diagonal_esw(std::size_t order, int hmax);
  /// A = t(2 - t^2)/(1 - t^2), v D(v) = t/(1 - t^2/(1 - t v)) - t/(1 - t^2).
  static HeapSpec diagonal_nes(std::size_t order, int hmax);
  /// A = t, D(v) = t v: reproduces F_k.
  static HeapSpec diagonal_es(std::size_t order, int hmax);
};

/// [H_0, ..., H_kmax] from H_k = H_{k-1} - sum_{h=0}^{k} D_h A^h H_{k-h-1},
/// H_{-1} = 1.
std::vector<TruncatedSeries> heap_denominators(const HeapSpec& spec, int kmax, std::size_t order);

/// NES pseudo-bridges of height k in the diagonal model through the heap
/// description: 1, A, and A^k / H_{k-2} for k >= 2.
TruncatedSeries diagonal_nes_heap_series(int k, std::size_t order);

/// Bounded-height excursions from the step-by-step recurrence.
///
/// horizontal NES (k >= -1): E^(k) = 1 + t E^(k) + t^2 (E^(k-1) - 1)
///                                 + t^3 (E^(k-1) - 1) E^(k),  E^(-1) = 1
/// diagonal (k >= 0):        E1^(k) = 1 + t^2 (E1^(k-1) - 1) + t^2 E1^(k-1) E1^(k),
///                           E1^(0) = 1
/// The diagonal ESW and NES families share E1.
TruncatedSeries excursion_series(BridgeFamily family, int k, std::size_t order);

/// The same excursions from the G_k closed forms:
/// (G_{k-1}/G_k - 1)/t (horizontal), (2 - t^2) G_{k-1}/G_k - 1 (diagonal).
TruncatedSeries excursion_closed_form(BridgeFamily family, int k, std::size_t order);

/// Diagonal NSW-excursions of height <= k not ending with S. k = 0 is the
/// empty walk alone; k >= 1 uses 1 + E1^(k) = (2 - t^2) D1^(k).
TruncatedSeries d1_series(int k, std::size_t order);

/// Pseudo-bridges of height k from the excursion recurrences:
/// B^(k) = (1 + t E^(k)) t B^(k-1)       (horizontal NES, B^(0) = 1/(1-t))
/// B2^(k) = (1 + E1^(k)) t B2^(k-1)      (diagonal NES,  B2^(0) = 1)
/// B1^(k) = D1^(k) t B1^(k-1)            (diagonal ESW,  B1^(0) = 1)
TruncatedSeries pseudo_bridge_by_excursions(BridgeFamily family, int k, std::size_t order);

}  // namespace wdsaw
