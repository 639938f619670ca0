#include <doctest.h>

#include <cmath>

#include "wdsaw/asymptotics.hpp"
#include "wdsaw/bridges.hpp"
#include "wdsaw/error.hpp"
#include "wdsaw/weakly.hpp"

using namespace wdsaw;

namespace {

const TruncationBounds& horizontal300() {
  static const TruncationBounds b(Model::horizontal, 300);
  return b;
}

const TruncationBounds& diagonal300() {
  static const TruncationBounds b(Model::diagonal, 300);
  return b;
}

Rational dec(const char* s) {
  // "0.3929" -> 3929/10000
  std::string str(s);
  auto dot = str.find('.');
  std::string digits = str.substr(0, dot) + str.substr(dot + 1);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, str.size() - dot - 1);
  Rational q(Integer(digits, 10), den);
  q.canonicalize();
  return q;
}

// [v, v + 10^-d): the values whose printed truncation is v
RationalInterval printed(const char* s) {
  Rational lo = dec(s);
  std::string str(s);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, str.size() - str.find('.') - 1);
  return {lo, lo + Rational(1) / Rational(den)};
}

}  // namespace

TEST_CASE("T derivative closed forms") {
  const std::size_t order = 40;
  auto t = nes_walk_gfs(order).general;
  auto d1 = derivative(t), d2 = derivative(d1);
  LatticePolynomial den{1, -2, -1};
  CHECK(mul(pow(den, 2).to_series(order - 1), d1) == LatticePolynomial{3, 2, 1}.to_series(order - 1));
  CHECK(mul(pow(den, 3).to_series(order - 2), d2) ==
        (LatticePolynomial{2, 2} * LatticePolynomial{7, 2, 1}).to_series(order - 2));
}

TEST_CASE("truncation bounds examples") {
  TruncationBounds b(Model::horizontal, 10);
  Rational t(3, 10);
  CHECK(b.lower(t) < b.upper(t));
  CHECK(b.lower(t) > 0);
  CHECK(b.upper(t) < 1);
  Rational tiny(1, 1000000);
  CHECK(b.lower(tiny) < Rational(1, 100000));
  CHECK(b.upper(tiny) < Rational(1, 100000));
  CHECK(b.lower(0) == 0);
  CHECK(b.upper(0) == 0);
  CHECK_THROWS_AS(b.lower(Rational(1, 2)), Error);
  for (int d = 0; d <= 2; ++d) CHECK(b.lower(t, d) <= b.upper(t, d));
}

TEST_CASE("bounds enclose a deeper expansion") {
  // I_{<=400} is a better lower bound than I_{<=60}, and must stay below I^+ of order 60
  TruncationBounds coarse(Model::horizontal, 60);
  auto fine = irreducible_gf(Model::horizontal, 200);
  for (int i = 1; i <= 9; ++i) {
    Rational t(4 * i, 100);
    Rational v = eval_real(fine, t);
    CHECK(coarse.lower(t) <= v);
    CHECK(v <= coarse.upper(t));
  }
}

TEST_CASE("bracket_rho examples") {
  RationalInterval h = bracket_rho(horizontal300());
  RationalInterval d = bracket_rho(diagonal300());
  CHECK(printed("0.3929").contains(h));
  CHECK(printed("0.3940").contains(d));
  CHECK(h.width() < Rational(1, 100000));
  // certification at the endpoints, exactly
  for (const auto* b : {&horizontal300(), &diagonal300()}) {
    RationalInterval r = bracket_rho(*b);
    CHECK(b->upper(r.lo) <= 1);
    CHECK(b->lower(r.hi) >= 1);
  }
}

TEST_CASE("brackets nest as n grows") {
  for (auto m : {Model::horizontal, Model::diagonal}) {
    RationalInterval r30 = bracket_rho(m, 30), r100 = bracket_rho(m, 100), r300 = bracket_rho(m, 300);
    CHECK(r30.contains(r100));
    CHECK(r100.contains(r300));
    CHECK(growth_constant(r30).contains(growth_constant(r100)));
    CHECK(growth_constant(r100).contains(growth_constant(r300)));
  }
}

TEST_CASE("too small a truncation has no certified pole") {
  CHECK_THROWS_AS(bracket_rho(Model::horizontal, 5), Error);
  try {
    bracket_rho(Model::horizontal, 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_root_in_range);
  }
}

TEST_CASE("growth_constant examples") {
  RationalInterval h = growth_constant(bracket_rho(horizontal300()));
  RationalInterval d = growth_constant(bracket_rho(diagonal300()));
  CHECK(printed("2.5447").contains(h));
  CHECK(h.width() <= Rational(1, 10000));
  CHECK(printed("2.5378").contains(d));
  CHECK(d.width() <= Rational(1, 1000));
  RationalInterval sane{dec("2.48"), dec("2.64")};
  CHECK(sane.contains(h));
  CHECK(sane.contains(d));
}

TEST_CASE("ratio of W coefficients agrees with mu") {
  auto w = weakly_bridge_gf(Model::horizontal, 61);
  Rational ratio = w[61] / w[60];
  RationalInterval mu = growth_constant(bracket_rho(horizontal300()));
  CHECK(mu.lo - Rational(5, 100) <= ratio);
  CHECK(ratio <= mu.hi + Rational(5, 100));
}

TEST_CASE("factor_moments examples") {
  FactorMoments h = factor_moments(horizontal300());
  CHECK(printed("0.318").contains(h.mean));
  CHECK(printed("0.7").contains(h.variance));
  FactorMoments d = factor_moments(diagonal300());
  CHECK(d.mean.contains(dec("0.395")));
  CHECK(d.variance.overlaps({dec("0.998"), dec("1.002")}));
  for (const auto* fm : {&h, &d}) {
    CHECK(fm->mean.lo > 0);
    CHECK(fm->mean.hi < 1);
    CHECK(fm->variance.lo <= fm->variance.hi);
  }
}

TEST_CASE("decimal rendering rounds outward") {
  RationalInterval r{Rational(1, 3), Rational(2, 3)};
  auto [lo, hi] = r.decimal(3);
  CHECK(lo == "0.333");
  CHECK(hi == "0.667");
  RationalInterval neg{Rational(-1, 3), Rational(5)};
  CHECK(neg.decimal(2).first == "-0.34");
  CHECK(neg.decimal(2).second == "5.00");
  CHECK(neg.decimal(0).first == "-1");
}

TEST_CASE("gk_roots") {
  SUBCASE("k = 1 by residual") {
    auto r = gk_roots(1);
    CHECK(r.roots.size() == 4);
    CHECK(r.max_residual < 1e-10);
    for (auto z : r.roots) CHECK(std::abs(gk(BridgeFamily::horizontal_nes(), 1).evaluate(z)) < 1e-9);
  }
  SUBCASE("root count equals degree") {
    for (int k : {2, 7, 20}) CHECK(static_cast<int>(gk_roots(k).roots.size()) == 3 * k + 1);
    CHECK(static_cast<int>(gk_roots(6, BridgeFamily::diagonal_esw()).roots.size()) ==
          gk(BridgeFamily::diagonal_esw(), 6).degree());
  }
  SUBCASE("residuals for k <= 40") {
    for (int k : {5, 10, 20, 30, 40}) CHECK(gk_roots(k).max_residual < 1e-10);
  }
  SUBCASE("non-real roots avoid the boundary set") {
    BoundarySet set = boundary_curve();
    for (auto z : gk_roots(20).roots)
      if (std::abs(z.imag()) > 1e-12) CHECK(distance_to_boundary(z, set) > 0);
  }
  SUBCASE("impossible tolerance reports the worst residual") {
    try {
      gk_roots(10, BridgeFamily::horizontal_nes(), 0.0);
      FAIL("expected NonConvergence");
    } catch (const NonConvergence& e) {
      CHECK(e.code() == ErrorCode::non_convergence);
      CHECK(e.worst_residual() >= 0.0);
    }
  }
  CHECK_THROWS_AS(gk_roots(0), Error);
}

TEST_CASE("boundary curve") {
  double xc = critical_x();
  CHECK(xc == doctest::Approx(0.6572981).epsilon(1e-6));
  CHECK(1 - xc * xc - 2 * xc * xc * xc == doctest::Approx(0.0).epsilon(1e-12));
  BoundarySet set = boundary_curve(1000);
  CHECK(set.curve.size() == 2000);
  CHECK(std::abs(set.curve[0] - std::complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(set.curve[1] - std::complex<double>(0, -1)) < 1e-15);
  CHECK(std::abs(set.curve.back() - std::complex<double>(xc, 0)) < 1e-6);
  CHECK(distance_to_boundary({std::sqrt(2.0) - 1, 0}, set) == 0.0);
  CHECK(distance_to_boundary({-2.0, 0}, set) == 0.0);
  double y = std::sqrt((1 - 0.09 - 2 * 0.027) / 1.6);
  CHECK(distance_to_boundary({0.3, y}, set) < 2e-3);
  CHECK(distance_to_boundary({0, 3}, set) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(boundary_curve(1), Error);
}

TEST_CASE("root distance report") {
  BoundarySet set = boundary_curve();
  auto r5 = root_distance_report(5, set);
  CHECK(r5.nonreal > 0);
  auto r20 = root_distance_report(20, set);
  auto r40 = root_distance_report(40, set);
  CHECK(r20.max_distance < 0.15);
  CHECK(r40.max_distance < r20.max_distance);
  CHECK(r40.mean_distance < r20.mean_distance);
  CHECK_THROWS_AS(root_distance_report(4, set), Error);
}
