#include <doctest.h>

#include "wdsaw/catalog.hpp"
#include "wdsaw/weakly.hpp"

using namespace wdsaw;

namespace {

void check_prefix(const TruncatedSeries& s, std::initializer_list<long> expected) {
  std::size_t i = 0;
  for (long e : expected) CHECK(s[i++] == e);
}

void check_matches_oracle(WalkClass c, int nmax) {
  CAPTURE(to_string(c));
  auto series = class_series(c, static_cast<std::size_t>(nmax));
  auto counts = class_counts(c, nmax);
  for (int n = 0; n <= nmax; ++n) {
    CAPTURE(n);
    CHECK(series[static_cast<std::size_t>(n)] == Rational(Integer(std::to_string(counts[static_cast<std::size_t>(n)]))));
  }
}

}  // namespace

TEST_CASE("irreducible_gf examples") {
  CHECK(irreducible_gf(Model::horizontal, 2) == TruncatedSeries{0, 1, 2});
  CHECK(irreducible_gf(Model::horizontal, 0) == TruncatedSeries{0});
  CHECK(irreducible_gf(Model::diagonal, 1) == TruncatedSeries{0, 2});
  check_prefix(irreducible_gf(Model::horizontal, 9), {0, 1, 2, 2, 2, 2, 4, 10, 22, 44});
  check_prefix(irreducible_gf(Model::diagonal, 9), {0, 2, 0, 0, 4, 0, 4, 20, 4, 56});
}

TEST_CASE("weakly_bridge_gf examples") {
  check_prefix(weakly_bridge_gf(Model::horizontal, 9), {1, 1, 3, 7, 17, 41, 101, 251, 627, 1571});
  auto w = weakly_bridge_gf(Model::horizontal, 61);
  Rational ratio = w[60] / w[59];
  CHECK(ratio > Rational(252, 100));
  CHECK(ratio < Rational(256, 100));
  check_prefix(weakly_bridge_gf(Model::diagonal, 11), {1, 2, 4, 8, 20, 48, 116, 292, 724, 1816, 4570, 11496});
}

TEST_CASE("nes_walk_gfs examples") {
  auto s = nes_walk_gfs(10);
  check_prefix(s.general, {1, 3, 7, 17});
  check_prefix(s.positive, {1, 2});
  CHECK(s.copositive[0] == 1);
  CHECK(s.copositive - TruncatedSeries::constant(1, 10) - s.positive.shifted_up(1) == TruncatedSeries(10));
}

TEST_CASE("irreducible_walk_gfs examples") {
  auto s = irreducible_walk_gfs(10);
  check_prefix(s.positive, {0, 2});
  check_prefix(s.copositive, {0, 1, 1});
  CHECK(s.general[2] == 3);
}

TEST_CASE("weakly_walk_gf examples") {
  auto w = weakly_walk_gf(10);
  check_prefix(w, {1, 4, 12});
}

TEST_CASE("coefficients are nonnegative integers up to order 60") {
  const std::size_t order = 60;
  std::vector<TruncatedSeries> all{irreducible_gf(Model::horizontal, order), irreducible_gf(Model::diagonal, order),
                                   weakly_bridge_gf(Model::horizontal, order),
                                   weakly_bridge_gf(Model::diagonal, order), weakly_walk_gf(order)};
  auto nes = nes_walk_gfs(order);
  auto irr = irreducible_walk_gfs(order);
  for (auto* s : {&nes.general, &nes.positive, &nes.copositive, &irr.general, &irr.positive, &irr.copositive})
    all.push_back(*s);
  for (const auto& s : all) {
    CHECK(s.order() == order);
    CHECK(s.has_integer_coefficients());
    CHECK(s.is_nonnegative());
  }
}

TEST_CASE("W (1 - I) = 1") {
  for (auto m : {Model::horizontal, Model::diagonal}) {
    auto one = TruncatedSeries::constant(1, 60);
    CHECK(weakly_bridge_gf(m, 60) * (one - irreducible_gf(m, 60)) == one);
  }
}

TEST_CASE("ratio of consecutive coefficients of W") {
  auto w = weakly_bridge_gf(Model::horizontal, 81);
  for (std::size_t n = 40; n <= 80; ++n) {
    Rational r = w[n + 1] / w[n];
    CHECK(r > Rational(5, 2));
    CHECK(r < Rational(26, 10));
  }
}

TEST_CASE("series match the oracle") {
  check_matches_oracle(WalkClass::W, 14);
  check_matches_oracle(WalkClass::Wbar, 12);
  check_matches_oracle(WalkClass::Wdiag, 12);
  for (auto c : {WalkClass::B, WalkClass::B0, WalkClass::B1, WalkClass::B2, WalkClass::I, WalkClass::Idiag,
                 WalkClass::T, WalkClass::P, WalkClass::Q, WalkClass::Ti, WalkClass::Pi, WalkClass::Qi})
    check_matches_oracle(c, 12);
}

TEST_CASE("weakly directed diagonal bridges strictly include Wdiag") {
  auto weak = class_counts(WalkClass::WdiagWeak, 12);
  auto series = class_series(WalkClass::Wdiag, 12);
  bool exceeds = false;
  for (int n = 0; n <= 12; ++n) {
    CHECK(Rational(Integer(std::to_string(weak[n]))) >= series[n]);
    if (Rational(Integer(std::to_string(weak[n]))) > series[n]) exceeds = true;
  }
  CHECK(exceeds);
}

TEST_CASE("catalog names round trip") {
  for (const auto& c : walk_classes()) CHECK(parse_walk_class(c.name) == c.cls);
  CHECK_THROWS(parse_walk_class("nope"));
  CHECK_THROWS(class_series(WalkClass::WdiagWeak, 3));
}
