#include "wdsaw/bridges.hpp"

#include <string>

#include "wdsaw/error.hpp"

namespace wdsaw {
namespace {

void require_solvable(BridgeFamily f) {
  if (!f.is_solvable())
    throw Error(ErrorCode::unsupported_family, "no solved generating function for family " + to_string(f));
}

int min_height(BridgeFamily f) {
  return (f.model == Model::horizontal || f.steps == StepSet::ES) ? -1 : 0;
}

// Series in v whose coefficients are series in t, all of one t-order.
using VSeries = std::vector<TruncatedSeries>;

VSeries v_mul(const VSeries& a, const VSeries& b, std::size_t vmax, std::size_t order) {
  VSeries out(vmax + 1, TruncatedSeries(order));
  for (std::size_t i = 0; i < a.size() && i <= vmax; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= vmax; ++j) out[i + j] += a[i] * b[j];
  return out;
}

VSeries v_inverse(const VSeries& a, std::size_t vmax, std::size_t order) {
  VSeries r(vmax + 1, TruncatedSeries(order));
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  r[0] = div(one, a.at(0));
  for (std::size_t j = 1; j <= vmax; ++j) {
    TruncatedSeries acc(order);
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) acc += a[i] * r[j - i];
    r[j] = -(r[0] * acc);
  }
  return r;
}

TruncatedSeries t_pow(std::size_t d, std::size_t order) { return TruncatedSeries::monomial(1, d, order); }

// 1 / (1 - t v)
VSeries inv_one_minus_tv(std::size_t vmax, std::size_t order) {
  VSeries base{TruncatedSeries::constant(1, order), -t_pow(1, order)};
  return v_inverse(base, vmax, order);
}

// 1 / (1 - x) for a v-series x.
VSeries inv_one_minus(VSeries x, std::size_t vmax, std::size_t order) {
  x.resize(vmax + 1, TruncatedSeries(order));
  for (auto& c : x) c = -c;
  x[0] += TruncatedSeries::constant(1, order);
  return v_inverse(x, vmax, order);
}

TruncatedSeries numerator_series(BridgeFamily f, int k, std::size_t order) {
  if (f == BridgeFamily::diagonal_nes()) return pow(LatticePolynomial{2, 0, -1}, static_cast<unsigned>(k)).to_series(order);
  return TruncatedSeries::constant(1, order);
}

TruncatedSeries pseudo_bridge_from(BridgeFamily f, const LatticePolynomial& g, int k, std::size_t order) {
  std::size_t sk = static_cast<std::size_t>(k);
  if (sk > order) return TruncatedSeries(order);
  std::size_t rest = order - sk;
  TruncatedSeries q = div(numerator_series(f, k, rest), g.to_series(rest));
  std::vector<Rational> c(order + 1);
  for (std::size_t i = 0; i <= rest; ++i) c[i + sk] = q[i];
  return TruncatedSeries(std::move(c));
}

}  // namespace

LatticePolynomial gk(BridgeFamily family, int k) {
  require_solvable(family);
  if (k < min_height(family))
    throw Error(ErrorCode::invalid_argument, "height " + std::to_string(k) + " out of range for " + to_string(family));
  if (k < 0) return LatticePolynomial{1};
  return gk_sequence(family, k).back();
}

std::vector<LatticePolynomial> gk_sequence(BridgeFamily family, int kmax) {
  require_solvable(family);
  if (kmax < 0) throw Error(ErrorCode::invalid_argument, "kmax must be >= 0");
  std::vector<LatticePolynomial> g;
  g.reserve(static_cast<std::size_t>(kmax) + 1);
  LatticePolynomial a, b, prev, cur;
  if (family.model == Model::horizontal) {
    a = {1, -1, 1, 1};
    b = {0, 0, 1};
    prev = {1};
    cur = {1, -1};
  } else if (family.steps == StepSet::ES) {
    a = {1};
    b = {0, 0, 1};
    prev = {1};
    cur = {1};
  } else {
    a = {1, 0, 1};
    b = {0, 0, 2, 0, -1};
    g.push_back({1});
    if (kmax == 0) return g;
    prev = {1};
    cur = {1, 0, -1};
  }
  g.push_back(cur);
  while (static_cast<int>(g.size()) <= kmax) {
    LatticePolynomial next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
    g.push_back(cur);
  }
  return g;
}

TruncatedSeries pseudo_bridge_series(BridgeFamily family, int k, std::size_t order) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  return pseudo_bridge_from(family, gk(family, k), k, order);
}

TruncatedSeries bridge_sum(BridgeFamily family, std::size_t order) {
  auto g = gk_sequence(family, static_cast<int>(order));
  TruncatedSeries sum(order);
  for (std::size_t k = 0; k <= order; ++k) sum += pseudo_bridge_from(family, g[k], static_cast<int>(k), order);
  return sum;
}

HeapSpec HeapSpec::horizontal_nes(std::size_t order, int hmax) {
  std::size_t vmax = static_cast<std::size_t>(hmax);
  VSeries x = v_mul({TruncatedSeries(order), t_pow(2, order)}, inv_one_minus_tv(vmax, order), vmax, order);
  VSeries d = v_mul({t_pow(1, order)}, inv_one_minus(x, vmax, order), vmax, order);
  return {t_pow(1, order), d};
}

HeapSpec HeapSpec::diagonal_esw(std::size_t order, int hmax) {
  std::size_t vmax = static_cast<std::size_t>(hmax);
  TruncatedSeries zero(order);
  VSeries x = v_mul({zero, zero, t_pow(2, order)}, inv_one_minus_tv(vmax, order), vmax, order);
  VSeries d = v_mul({zero, t_pow(1, order)}, inv_one_minus(x, vmax, order), vmax, order);
  return {t_pow(1, order), d};
}

HeapSpec HeapSpec::diagonal_nes(std::size_t order, int hmax) {
  std::size_t vmax = static_cast<std::size_t>(hmax) + 1;
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries t = t_pow(1, order);
  TruncatedSeries t2 = t_pow(2, order);
  VSeries y = v_mul({t2}, inv_one_minus_tv(vmax, order), vmax, order);
  VSeries vd = v_mul({t}, inv_one_minus(y, vmax, order), vmax, order);
  vd[0] -= div(t, one - t2);
  // vd[0] vanishes; D_h is the coefficient of v^(h+1).
  HeapSpec spec;
  spec.ascending = div(t * (2 * one - t2), one - t2);
  spec.descents.assign(vd.begin() + 1, vd.end());
  return spec;
}

HeapSpec HeapSpec::diagonal_es(std::size_t order, int hmax) {
  HeapSpec spec;
  spec.ascending = t_pow(1, order);
  spec.descents.assign(static_cast<std::size_t>(hmax) + 1, TruncatedSeries(order));
  if (hmax >= 1) spec.descents[1] = t_pow(1, order);
  return spec;
}

std::vector<TruncatedSeries> heap_denominators(const HeapSpec& spec, int kmax, std::size_t order) {
  if (kmax < 0) throw Error(ErrorCode::invalid_argument, "kmax must be >= 0");
  std::size_t n = static_cast<std::size_t>(kmax);
  // hs[i] = H_{i-1}
  std::vector<TruncatedSeries> hs{TruncatedSeries::constant(1, order)};
  std::vector<TruncatedSeries> apow{TruncatedSeries::constant(1, order)};
  TruncatedSeries a = spec.ascending.truncated(order);
  for (std::size_t h = 1; h <= n; ++h) apow.push_back(apow.back() * a);
  for (std::size_t k = 0; k <= n; ++k) {
    TruncatedSeries hk = hs[k];
    for (std::size_t h = 0; h <= k && h < spec.descents.size(); ++h)
      hk -= spec.descents[h].truncated(order) * apow[h] * hs[k - h];
    hs.push_back(std::move(hk));
  }
  hs.erase(hs.begin());
  return hs;
}

TruncatedSeries diagonal_nes_heap_series(int k, std::size_t order) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  HeapSpec spec = HeapSpec::diagonal_nes(order, k);
  if (k == 0) return TruncatedSeries::constant(1, order);
  if (k == 1) return spec.ascending;
  auto h = heap_denominators(spec, k - 2, order);
  TruncatedSeries ak = TruncatedSeries::constant(1, order);
  for (int i = 0; i < k; ++i) ak = ak * spec.ascending;
  return div(ak, h.back());
}

TruncatedSeries excursion_series(BridgeFamily family, int k, std::size_t order) {
  require_solvable(family);
  if (family.steps == StepSet::ES) throw Error(ErrorCode::unsupported_family, "no excursion recurrence for diagonal-es");
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries t = t_pow(1, order), t2 = t_pow(2, order), t3 = t_pow(3, order);
  if (family.model == Model::horizontal) {
    if (k < -1) throw Error(ErrorCode::invalid_argument, "height must be >= -1");
    TruncatedSeries e = one;
    for (int j = 0; j <= k; ++j) e = div(one + t2 * (e - one), one - t - t3 * (e - one));
    return e;
  }
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  TruncatedSeries e = one;
  for (int j = 1; j <= k; ++j) e = div(one + t2 * (e - one), one - t2 * e);
  return e;
}

TruncatedSeries excursion_closed_form(BridgeFamily family, int k, std::size_t order) {
  require_solvable(family);
  if (family.steps == StepSet::ES) throw Error(ErrorCode::unsupported_family, "no excursion closed form for diagonal-es");
  if (family.model == Model::horizontal) {
    if (k < -1) throw Error(ErrorCode::invalid_argument, "height must be >= -1");
    if (k == -1) return TruncatedSeries::constant(1, order);
    TruncatedSeries q = div(gk(family, k - 1).to_series(order + 1), gk(family, k).to_series(order + 1));
    return (q - TruncatedSeries::constant(1, order + 1)).shifted_down(1);
  }
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  if (k == 0) return TruncatedSeries::constant(1, order);
  LatticePolynomial num = LatticePolynomial{2, 0, -1} * gk(family, k - 1);
  return div(num.to_series(order), gk(family, k).to_series(order)) - TruncatedSeries::constant(1, order);
}

TruncatedSeries d1_series(int k, std::size_t order) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  if (k == 0) return one;
  TruncatedSeries e = excursion_series(BridgeFamily::diagonal_esw(), k, order);
  return div(one + e, LatticePolynomial{2, 0, -1}.to_series(order));
}

TruncatedSeries pseudo_bridge_by_excursions(BridgeFamily family, int k, std::size_t order) {
  require_solvable(family);
  if (k < 0) throw Error(ErrorCode::invalid_argument, "height must be >= 0");
  TruncatedSeries one = TruncatedSeries::constant(1, order);
  TruncatedSeries t = t_pow(1, order);
  if (family == BridgeFamily::horizontal_nes()) {
    TruncatedSeries b = TruncatedSeries::geometric(order);
    for (int j = 1; j <= k; ++j) b = (one + t * excursion_series(family, j, order)) * b.shifted_up(1);
    return b;
  }
  if (family == BridgeFamily::diagonal_nes()) {
    TruncatedSeries b = one;
    for (int j = 1; j <= k; ++j) b = (one + excursion_series(family, j, order)) * b.shifted_up(1);
    return b;
  }
  if (family == BridgeFamily::diagonal_esw()) {
    TruncatedSeries b = one;
    for (int j = 1; j <= k; ++j) b = d1_series(j, order) * b.shifted_up(1);
    return b;
  }
  throw Error(ErrorCode::unsupported_family, "no excursion decomposition for " + to_string(family));
}

}  // namespace wdsaw
