#pragma once

// Certified numerics: the dominant pole of W = 1/(1 - I) bracketed with
// exact rational arithmetic, the growth constant and the factor moments,
// plus the complex zeros of G_k and the curve they accumulate on.

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "wdsaw/model.hpp"
#include "wdsaw/series.hpp"

namespace wdsaw {

struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool overlaps(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
  /// Decimal endpoints rounded outward to the given number of digits.
  std::pair<std::string, std::string> decimal(int digits) const;
};

/// Exactly evaluable bounds I^-(t) <= I(t) <= I^+(t) on [0, sqrt(2) - 1):
/// I^- = I_{<=n}, I^+ = I_{<=n} + c T_{>n} with c = 2 (horizontal) or 4
/// (diagonal). The same construction bounds I' and I''.
class TruncationBounds {
 public:
  /// Expands I to order n. Throws InvalidArgument if n < 1.
  TruncationBounds(Model model, int n);

  Model model() const noexcept { return model_; }
  int n() const noexcept { return n_; }
  const TruncatedSeries& irreducible() const noexcept { return derivs_[0]; }

  /// Bounds for the d-th derivative, d in {0, 1, 2}. t must be a rational
  /// in [0, sqrt(2) - 1).
  Rational lower(const Rational& t, int d = 0) const;
  Rational upper(const Rational& t, int d = 0) const;

 private:
  Model model_;
  int n_;
  long tail_factor_;
  std::array<TruncatedSeries, 3> derivs_;   // I, I', I'' truncated
  std::array<TruncatedSeries, 3> t_derivs_; // T, T', T'' truncated
};

/// Search limit for the pole: a rational just below sqrt(2) - 1.
Rational pole_search_limit();

/// [rho^-, rho^+] by bisection. Certified: I^+(lo) <= 1 and I^-(hi) >= 1.
/// Throws NoRootInRange if I^- stays below 1 up to the search limit.
RationalInterval bracket_rho(const TruncationBounds& bounds);
RationalInterval bracket_rho(Model model, int n);

/// 1 / bracket_rho.
RationalInterval growth_constant(const RationalInterval& rho);
RationalInterval growth_constant(Model model, int n);

struct FactorMoments {
  RationalInterval rho;
  RationalInterval mean;      // 1 / (rho I'(rho))
  RationalInterval variance;  // (I'' + I' - I'^2) / (rho I'^3)
};

FactorMoments factor_moments(const TruncationBounds& bounds);
FactorMoments factor_moments(Model model, int n);

struct ComplexRootSet {
  int k = 0;
  BridgeFamily family = BridgeFamily::horizontal_nes();
  /// Roots rounded to double after a high-precision polish.
  std::vector<std::complex<double>> roots;
  /// |G_k| at each polished root.
  std::vector<double> residuals;
  double max_residual = 0.0;
};

/// All complex zeros of G_k. Throws NonConvergence when some residual stays
/// above tolerance.
ComplexRootSet gk_roots(int k, BridgeFamily family = BridgeFamily::horizontal_nes(), double tolerance = 1e-10);

/// Positive root of 1 - x^2 - 2x^3.
double critical_x();

struct BoundarySet {
  /// Points x + iy of y^2 = (1 - x^2 - 2x^3)/(1 + 2x), 0 <= x <= x_c, both signs of y.
  std::vector<std::complex<double>> curve;
  /// [-sqrt 2 - 1, -1] and [sqrt 2 - 1, 1].
  std::array<std::pair<double, double>, 2> segments;
};

/// npoints samples per branch. Throws InvalidArgument if npoints < 2.
BoundarySet boundary_curve(int npoints = 1000);

double distance_to_boundary(std::complex<double> z, const BoundarySet& set);

struct RootDistanceReport {
  int k = 0;
  int nonreal = 0;
  double max_distance = 0.0;
  double mean_distance = 0.0;
  double max_residual = 0.0;
};

/// Distances of the non-real zeros of the horizontal G_k to the boundary set.
RootDistanceReport root_distance_report(int k, const BoundarySet& set);
RootDistanceReport root_distance_report(int k);

}  // namespace wdsaw
