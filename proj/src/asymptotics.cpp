#include "wdsaw/asymptotics.hpp"

#include <algorithm>

#include "wdsaw/error.hpp"
#include "wdsaw/weakly.hpp"

namespace wdsaw {
namespace {

constexpr int kMaxBisection = 200;

const Rational& bisection_width() {
  static const Rational w(1, 10000000);
  return w;
}

// T, T', T'' in closed form.
Rational t_closed(const Rational& t, int d) {
  Rational den = 1 - 2 * t - t * t;
  switch (d) {
    case 0: return (1 + t) / den;
    case 1: return (3 + 2 * t + t * t) / (den * den);
    default: return (2 + 2 * t) * (7 + 2 * t + t * t) / (den * den * den);
  }
}

void check_point(const Rational& t) {
  if (t < 0 || 1 - 2 * t - t * t <= 0)
    throw Error(ErrorCode::invalid_argument, "evaluation point must lie in [0, sqrt(2)-1)");
}

void check_order(int d) {
  if (d < 0 || d > 2) throw Error(ErrorCode::invalid_argument, "derivative order must be 0, 1 or 2");
}

Integer floor_scaled(const Rational& q, const Integer& scale) {
  Integer num = q.get_num() * scale, out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

Integer ceil_scaled(const Rational& q, const Integer& scale) {
  Integer num = q.get_num() * scale, out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

std::string fixed_point(Integer v, int digits) {
  bool negative = v < 0;
  if (negative) v = -v;
  std::string s = v.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace

std::pair<std::string, std::string> RationalInterval::decimal(int digits) const {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::max(digits, 0)));
  return {fixed_point(floor_scaled(lo, scale), digits), fixed_point(ceil_scaled(hi, scale), digits)};
}

TruncationBounds::TruncationBounds(Model model, int n) : model_(model), n_(n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "truncation order must be >= 2");
  tail_factor_ = model == Model::horizontal ? 2 : 4;
  const auto order = static_cast<std::size_t>(n);
  derivs_[0] = irreducible_gf(model, order);
  derivs_[1] = derivative(derivs_[0]);
  derivs_[2] = derivative(derivs_[1]);
  t_derivs_[0] = nes_walk_gfs(order).general;
  t_derivs_[1] = derivative(t_derivs_[0]);
  t_derivs_[2] = derivative(t_derivs_[1]);
  // The bounds rely on 0 <= [t^m] I <= c [t^m] T, which makes every
  // truncated piece monotone on the positive axis.
  for (std::size_t m = 0; m <= order; ++m)
    if (derivs_[0][m] < 0 || derivs_[0][m] > tail_factor_ * t_derivs_[0][m])
      throw Error(ErrorCode::internal, "coefficient domination 0 <= I <= cT fails at t^" + std::to_string(m));
}

Rational TruncationBounds::lower(const Rational& t, int d) const {
  check_order(d);
  check_point(t);
  return eval_real(derivs_[static_cast<std::size_t>(d)], t);
}

Rational TruncationBounds::upper(const Rational& t, int d) const {
  check_order(d);
  check_point(t);
  const auto i = static_cast<std::size_t>(d);
  Rational tail = t_closed(t, d) - eval_real(t_derivs_[i], t);
  return eval_real(derivs_[i], t) + tail_factor_ * tail;
}

Rational pole_search_limit() { return Rational(41421, 100000); }

RationalInterval bracket_rho(const TruncationBounds& bounds) {
  const Rational limit = pole_search_limit();
  if (bounds.lower(limit) < 1)
    throw Error(ErrorCode::no_root_in_range, "I^- stays below 1 on (0, " + limit.get_str() +
                                                 "); increase the truncation order (n = " +
                                                 std::to_string(bounds.n()) + ")");

  // largest certified t with I^+(t) <= 1
  Rational a = 0, b = limit;
  if (bounds.upper(b) <= 1) {
    a = b;
  } else {
    for (int it = 0; it < kMaxBisection && b - a >= bisection_width(); ++it) {
      Rational mid = (a + b) / 2;
      (bounds.upper(mid) <= 1 ? a : b) = mid;
    }
  }
  Rational lo = a;

  // smallest certified t with I^-(t) >= 1
  a = lo;
  b = limit;
  for (int it = 0; it < kMaxBisection && b - a >= bisection_width(); ++it) {
    Rational mid = (a + b) / 2;
    (bounds.lower(mid) >= 1 ? b : a) = mid;
  }
  return {lo, b};
}

RationalInterval bracket_rho(Model model, int n) { return bracket_rho(TruncationBounds(model, n)); }

RationalInterval growth_constant(const RationalInterval& rho) {
  if (rho.lo <= 0) throw Error(ErrorCode::invalid_argument, "rho interval must be positive");
  return {1 / rho.hi, 1 / rho.lo};
}

RationalInterval growth_constant(Model model, int n) { return growth_constant(bracket_rho(model, n)); }

FactorMoments factor_moments(const TruncationBounds& bounds) {
  RationalInterval rho = bracket_rho(bounds);
  // I' and I'' are increasing on the positive axis
  Rational y_lo = bounds.lower(rho.lo, 1), y_hi = bounds.upper(rho.hi, 1);
  Rational z_lo = bounds.lower(rho.lo, 2), z_hi = bounds.upper(rho.hi, 2);
  if (y_lo <= 0) throw Error(ErrorCode::internal, "I' lower bound is not positive");

  RationalInterval mean{1 / (rho.hi * y_hi), 1 / (rho.lo * y_lo)};

  // y - y^2 is a concave parabola with its top at y = 1/2
  auto f = [](const Rational& y) -> Rational { return y - y * y; };
  Rational f_min = std::min(f(y_lo), f(y_hi));
  Rational half(1, 2);
  Rational f_max = f(std::clamp(half, y_lo, y_hi));
  Rational num_lo = z_lo + f_min, num_hi = z_hi + f_max;
  Rational den_lo = rho.lo * y_lo * y_lo * y_lo, den_hi = rho.hi * y_hi * y_hi * y_hi;
  Rational v_lo = num_lo >= 0 ? num_lo / den_hi : num_lo / den_lo;
  Rational v_hi = num_hi >= 0 ? num_hi / den_lo : num_hi / den_hi;
  return {rho, mean, {v_lo, v_hi}};
}

FactorMoments factor_moments(Model model, int n) { return factor_moments(TruncationBounds(model, n)); }

}  // namespace wdsaw
