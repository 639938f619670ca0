#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_complex.hpp>

#include "wdsaw/asymptotics.hpp"
#include "wdsaw/bridges.hpp"
#include "wdsaw/error.hpp"

namespace wdsaw {
namespace {

namespace mp = boost::multiprecision;
using cplx = std::complex<double>;
using hp_real = mp::cpp_bin_float_100;
using hp_cplx = mp::cpp_complex_100;

// p(z) and p'(z) by Horner; c[i] is the coefficient of z^i.
template <class C, class Z>
void horner(const std::vector<C>& c, const Z& z, Z& p, Z& dp) {
  p = Z(c.back());
  dp = Z(0);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + Z(c[i]);
  }
}

// One Aberth sweep (Gauss-Seidel order); returns the largest correction.
template <class Z, class C, class AbsFn>
auto aberth_sweep(const std::vector<C>& c, std::vector<Z>& z, AbsFn abs_fn) {
  using R = decltype(abs_fn(z[0]));
  R worst = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Z p, dp;
    horner(c, z[i], p, dp);
    if (abs_fn(p) == 0) continue;
    Z ratio = p / dp;
    Z sum(0);
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) sum += Z(1) / (z[i] - z[j]);
    Z step = ratio / (Z(1) - ratio * sum);
    z[i] -= step;
    R a = abs_fn(step);
    if (a > worst) worst = a;
  }
  return worst;
}

std::vector<cplx> initial_guesses(std::size_t degree, double radius, double phase) {
  std::vector<cplx> z(degree);
  for (std::size_t j = 0; j < degree; ++j) {
    double angle = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(degree) + phase;
    z[j] = std::polar(radius, angle);
  }
  return z;
}

}  // namespace

ComplexRootSet gk_roots(int k, BridgeFamily family, double tolerance) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "gk_roots needs k >= 1");
  LatticePolynomial g = gk(family, k);
  const std::size_t degree = static_cast<std::size_t>(g.degree());
  std::vector<double> cd;
  std::vector<hp_real> ch;
  for (const auto& a : g.coefficients()) {
    cd.push_back(a.get_d());
    ch.emplace_back(a.get_str());
  }

  // Double precision Aberth, restarted from a perturbed circle on stagnation.
  std::mt19937_64 rng(static_cast<std::uint64_t>(k) * 7919u + static_cast<std::uint64_t>(family.steps));
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  std::vector<cplx> z;
  bool converged = false;
  for (int attempt = 0; attempt < 8 && !converged; ++attempt) {
    z = initial_guesses(degree, 1.0 + 0.3 * attempt, 0.4 + jitter(rng));
    double best = INFINITY;
    int stale = 0;
    for (int it = 0; it < 2000; ++it) {
      double step = aberth_sweep(cd, z, [](const cplx& x) { return std::abs(x); });
      if (!std::isfinite(step)) break;
      if (step < 1e-14) {
        converged = true;
        break;
      }
      if (step < 0.5 * best) {
        best = step;
        stale = 0;
      } else if (++stale > 200) {
        break;
      }
    }
  }

  // Polish in 100-digit arithmetic; the residual is measured there.
  std::vector<hp_cplx> zh;
  for (const auto& x : z) zh.emplace_back(x.real(), x.imag());
  auto hp_abs = [](const hp_cplx& x) { return hp_real(mp::abs(x)); };
  for (int it = 0; it < 200; ++it) {
    hp_real step = aberth_sweep(ch, zh, hp_abs);
    if (step < hp_real("1e-60")) break;
  }

  ComplexRootSet out;
  out.k = k;
  out.family = family;
  for (const auto& x : zh) {
    hp_cplx p, dp;
    horner(ch, x, p, dp);
    double r = static_cast<double>(mp::abs(p));
    // real roots come out of the polish with a vanishing imaginary part
    double im = static_cast<double>(x.imag());
    if (std::abs(im) < 1e-50) im = 0.0;
    out.roots.emplace_back(static_cast<double>(x.real()), im);
    out.residuals.push_back(r);
    out.max_residual = std::max(out.max_residual, std::isfinite(r) ? r : INFINITY);
  }
  if (!(out.max_residual < tolerance))
    throw NonConvergence("roots of G_" + std::to_string(k) + " did not converge", out.max_residual);
  // stable order: by real part, then imaginary part
  std::vector<std::size_t> idx(out.roots.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto &x = out.roots[a], &y = out.roots[b];
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  ComplexRootSet sorted = out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sorted.roots[i] = out.roots[idx[i]];
    sorted.residuals[i] = out.residuals[idx[i]];
  }
  return sorted;
}

double critical_x() {
  double a = 0.0, b = 1.0;
  for (int i = 0; i < 200; ++i) {
    double m = 0.5 * (a + b);
    (1 - m * m - 2 * m * m * m > 0 ? a : b) = m;
  }
  return 0.5 * (a + b);
}

BoundarySet boundary_curve(int npoints) {
  if (npoints < 2) throw Error(ErrorCode::invalid_argument, "boundary_curve needs npoints >= 2");
  const double xc = critical_x();
  BoundarySet set;
  set.curve.reserve(2 * static_cast<std::size_t>(npoints));
  for (int i = 0; i < npoints; ++i) {
    // denser near x_c, where the curve turns vertical
    double s = static_cast<double>(i) / (npoints - 1);
    double x = xc * (1 - (1 - s) * (1 - s));
    double y2 = (1 - x * x - 2 * x * x * x) / (1 + 2 * x);
    double y = y2 > 0 ? std::sqrt(y2) : 0.0;
    set.curve.emplace_back(x, y);
    set.curve.emplace_back(x, -y);
  }
  set.segments = {{{-std::numbers::sqrt2 - 1, -1.0}, {std::numbers::sqrt2 - 1, 1.0}}};
  return set;
}

double distance_to_boundary(std::complex<double> z, const BoundarySet& set) {
  double best = INFINITY;
  for (const auto& p : set.curve) best = std::min(best, std::abs(z - p));
  for (const auto& [a, b] : set.segments) {
    double x = std::clamp(z.real(), a, b);
    best = std::min(best, std::abs(z - cplx(x, 0.0)));
  }
  return best;
}

RootDistanceReport root_distance_report(int k, const BoundarySet& set) {
  if (k < 5) throw Error(ErrorCode::invalid_argument, "root_distance_report needs k >= 5");
  ComplexRootSet roots = gk_roots(k);
  RootDistanceReport r;
  r.k = k;
  r.max_residual = roots.max_residual;
  double sum = 0;
  for (const auto& z : roots.roots) {
    if (std::abs(z.imag()) < 1e-12) continue;
    double d = distance_to_boundary(z, set);
    ++r.nonreal;
    sum += d;
    r.max_distance = std::max(r.max_distance, d);
  }
  r.mean_distance = r.nonreal ? sum / r.nonreal : 0.0;
  return r;
}

RootDistanceReport root_distance_report(int k) { return root_distance_report(k, boundary_curve()); }

}  // namespace wdsaw
