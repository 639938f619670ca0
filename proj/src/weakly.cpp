#include "wdsaw/weakly.hpp"

#include "wdsaw/bridges.hpp"

namespace wdsaw {
namespace {

// c t B / (1 + c t B)
TruncatedSeries irreducible_part(const TruncatedSeries& b, long c) {
  std::size_t order = b.order();
  TruncatedSeries ctb = b.shifted_up(1) * Rational(c);
  return div(ctb, TruncatedSeries::constant(1, order) + ctb);
}

}  // namespace

TruncatedSeries irreducible_gf(Model model, std::size_t order) {
  TruncatedSeries t = TruncatedSeries::monomial(1, 1, order);
  if (model == Model::horizontal)
    return irreducible_part(bridge_sum(BridgeFamily::horizontal_nes(), order), 1) * Rational(2) - t;
  TruncatedSeries b0 = bridge_sum(BridgeFamily::diagonal_es(), order);
  TruncatedSeries b1 = bridge_sum(BridgeFamily::diagonal_esw(), order);
  TruncatedSeries b2 = bridge_sum(BridgeFamily::diagonal_nes(), order);
  return irreducible_part(b1, 1) * Rational(2) + irreducible_part(b2, 2) * Rational(2) -
         irreducible_part(b0, 1) * Rational(2) - t * Rational(2);
}

TruncatedSeries weakly_bridge_gf(Model model, std::size_t order) {
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  return div(one, one - irreducible_gf(model, order));
}

NesWalkSeries nes_walk_gfs(std::size_t order) {
  const std::size_t wide = order + 2;
  const LatticePolynomial kernel{1, -2, -1};
  TruncatedSeries general = div(LatticePolynomial{1, 1}.to_series(order), kernel.to_series(order));
  TruncatedSeries root = sqrt(div(LatticePolynomial{1, 0, 0, 0, -1}.to_series(wide), kernel.to_series(wide)));
  TruncatedSeries positive = (root - LatticePolynomial{1, 1}.to_series(wide)).shifted_down(2) * Rational(1, 2);
  TruncatedSeries copositive = TruncatedSeries::constant(1, order) + positive.shifted_up(1);
  return {general, positive, copositive};
}

NesWalkSeries irreducible_walk_gfs(std::size_t order) {
  NesWalkSeries s = nes_walk_gfs(order);
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries bridges = one + bridge_sum(BridgeFamily::horizontal_nes(), order).shifted_up(1);
  TruncatedSeries pi = div(s.positive - one, bridges);
  TruncatedSeries qi = div(s.copositive - one, bridges);
  TruncatedSeries ti = s.general - one - qi * bridges * pi * Rational(2);
  return {ti, pi, qi};
}

TruncatedSeries weakly_walk_gf(std::size_t order) {
  NesWalkSeries irr = irreducible_walk_gfs(order);
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries t = TruncatedSeries::monomial(1, 1, order);
  TruncatedSeries w = weakly_bridge_gf(Model::horizontal, order);
  return one + (irr.general * Rational(2) - t * Rational(2)) +
         (irr.copositive * Rational(2) - t) * w * (irr.positive * Rational(2) - t) * Rational(2);
}

}  // namespace wdsaw
