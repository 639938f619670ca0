#include <doctest.h>

#include <random>

#include "wdsaw/error.hpp"
#include "wdsaw/series.hpp"

using namespace wdsaw;

namespace {

TruncatedSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c(order + 1);
  for (auto& q : c) {
    q = Rational(num(rng), den(rng));
    q.canonicalize();
  }
  if (unit_constant) c[0] = 1;
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("mul examples") {
  CHECK(mul(TruncatedSeries{1, 1, 0}, TruncatedSeries{1, 1, 0}) == TruncatedSeries{1, 2, 1});
  CHECK(mul(TruncatedSeries{1, 1, 1, 1}, TruncatedSeries{1, -1, 0, 0}) == TruncatedSeries{1, 0, 0, 0});
  LatticePolynomial g0{1, -1}, g1{1, -2, 1, 0, -1};
  CHECK(g0 * g1 == LatticePolynomial{1, -3, 3, -1, -1, 1});
  CHECK(mul(g0.to_series(5), g1.to_series(5)) == TruncatedSeries{1, -3, 3, -1, -1, 1});
}

TEST_CASE("mul truncates at the smaller order") {
  auto p = mul(TruncatedSeries{1, 1, 1, 1, 1}, TruncatedSeries{1, 1});
  CHECK(p.order() == 1);
  CHECK(p == TruncatedSeries{1, 2});
}

TEST_CASE("div examples") {
  CHECK(div(TruncatedSeries::constant(1, 6), TruncatedSeries{1, -1, 0, 0, 0, 0, 0}) == TruncatedSeries::geometric(6));
  auto b1 = div(TruncatedSeries::monomial(1, 1, 6), LatticePolynomial{1, -2, 1, 0, -1}.to_series(6));
  CHECK(b1 == TruncatedSeries{0, 1, 2, 3, 4, 6, 10});
  auto w = div(TruncatedSeries::constant(1, 2), TruncatedSeries{1, -1, -2});
  CHECK(w == TruncatedSeries{1, 1, 3});
  CHECK_THROWS_AS(div(TruncatedSeries{1, 1}, TruncatedSeries{0, 1}), Error);
  try {
    div(TruncatedSeries{1, 1}, TruncatedSeries{0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_constant_term);
  }
}

TEST_CASE("div with rational constant term") {
  auto q = div(TruncatedSeries{1, 0, 0}, TruncatedSeries{2, 1, 0});
  CHECK(q[0] == Rational(1, 2));
  CHECK(q[1] == Rational(-1, 4));
  CHECK(q[2] == Rational(1, 8));
}

TEST_CASE("sqrt examples") {
  CHECK(sqrt(TruncatedSeries::constant(1, 4)) == TruncatedSeries::constant(1, 4));
  CHECK(sqrt(TruncatedSeries{1, 2, 1, 0}) == TruncatedSeries{1, 1, 0, 0});
  auto r = sqrt(div(TruncatedSeries{1, 0, 0, 0, -1, 0, 0}, TruncatedSeries{1, -2, -1, 0, 0, 0, 0}));
  CHECK(r[0] == 1);
  CHECK(r[1] == 1);
  CHECK(r[2] == 2);
  // P = (r - 1 - t) / (2 t^2)
  auto p = (r - TruncatedSeries{1, 1, 0, 0, 0, 0, 0}).shifted_down(2) * Rational(1, 2);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK_THROWS_AS(sqrt(TruncatedSeries{4, 1}), Error);
  CHECK_THROWS_AS(sqrt(TruncatedSeries{0, 1}), Error);
}

TEST_CASE("eval_real examples") {
  CHECK(eval_real(LatticePolynomial{1, -1}, Rational(1, 2)) == Rational(1, 2));
  CHECK(eval_real(TruncatedSeries{1, 3, 7, 17}, Rational(1, 10)) == Rational(1387, 1000));
  CHECK(eval_real(TruncatedSeries{0}, Rational(3, 7)) == 0);
}

TEST_CASE("derivative examples") {
  CHECK(derivative(TruncatedSeries{1, 1, 3}) == TruncatedSeries{1, 6});
  CHECK(derivative(TruncatedSeries{1, 0}) == TruncatedSeries{0});
  CHECK_THROWS_AS(derivative(TruncatedSeries{1}), Error);
}

TEST_CASE("shifts and valuation") {
  TruncatedSeries a{0, 0, 3, 4};
  CHECK(a.valuation() == 2);
  CHECK(a.shifted_down(2) == TruncatedSeries{3, 4});
  CHECK(a.shifted_up(1) == TruncatedSeries{0, 0, 0, 3});
  CHECK_THROWS_AS(a.shifted_down(3), Error);
  CHECK(TruncatedSeries(3).valuation() == 4);
}

TEST_CASE("polynomial canonical form") {
  LatticePolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(pow(LatticePolynomial{1, 1}, 3) == LatticePolynomial{1, 3, 3, 1});
  CHECK(pow(LatticePolynomial{2, 0, -1}, 0) == LatticePolynomial{1});
}

TEST_CASE("property: ring laws up to truncation") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t na = rng() % 12, nb = rng() % 12, nc = rng() % 12;
    auto a = random_series(rng, na, false);
    auto b = random_series(rng, nb, false);
    auto c = random_series(rng, nc, false);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    auto u = random_series(rng, nb, true);
    CHECK(mul(div(a, u), u) == a.truncated(std::min(na, nb)));
  }
}

TEST_CASE("property: sqrt squares back") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_series(rng, rng() % 31, true);
    auto s = sqrt(a);
    CHECK(s[0] == 1);
    CHECK(mul(s, s) == a);
  }
}

TEST_CASE("property: eval_real is multiplicative on polynomials") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Integer> ca(rng() % 8 + 1), cb(rng() % 8 + 1);
    for (auto& c : ca) c = coef(rng);
    for (auto& c : cb) c = coef(rng);
    LatticePolynomial a(ca), b(cb);
    Rational x(coef(rng), 7);
    x.canonicalize();
    CHECK(eval_real(a * b, x) == eval_real(a, x) * eval_real(b, x));
    std::size_t order = static_cast<std::size_t>(std::max(0, (a * b).degree()));
    CHECK(eval_real(mul(a.to_series(order), b.to_series(order)), x) == eval_real(a, x) * eval_real(b, x));
  }
}

TEST_CASE("double evaluation agrees with exact") {
  LatticePolynomial g{1, -3, 3, -1, -1, 1};
  CHECK(g.evaluate(0.3) == doctest::Approx(eval_real(g, Rational(3, 10)).get_d()).epsilon(1e-14));
  CHECK(eval_double(TruncatedSeries{1, 3, 7, 17}, 0.1) == doctest::Approx(1.387).epsilon(1e-14));
}
