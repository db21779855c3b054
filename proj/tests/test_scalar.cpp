#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "frobskein/scalar.hpp"

using frobskein::Poly;
using frobskein::Rational;
using frobskein::RatFunc;
using frobskein::UnitMode;

namespace {

RatFunc a() { return RatFunc::alpha(); }

// Uniform random rational function p/q with small degrees and coefficients.
RatFunc random_ratfunc(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-6, 6);
  auto poly = [&] {
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return Poly(std::move(c));
  };
  for (;;) {
    Poly num = poly(), den = poly();
    if (den.is_zero()) continue;
    RatFunc f(num, den);
    if (!nonzero || !f.is_zero()) return f;
  }
}

}  // namespace

TEST_CASE("field arithmetic matches pinned values", "[scalar]") {
  CHECK(a() / a() == RatFunc(1));
  CHECK(RatFunc(Rational(1, 2)) * (RatFunc(1) / (RatFunc(2) * a())) ==
        RatFunc(1) / (RatFunc(4) * a()));
  CHECK((a() - RatFunc(1)) + (a() + RatFunc(1)) == RatFunc(2) * a());
  CHECK((a() * a() - RatFunc(1)) / (a() + RatFunc(1)) == a() - RatFunc(1));
}

TEST_CASE("canonical form: monic denominator, reduced", "[scalar]") {
  // (2a^2+2a)/(4a) must reduce to (a+1)/2 = 1/2*a + 1/2 with denominator 1.
  RatFunc f(Poly(std::vector<Rational>{0, 2, 2}), Poly(std::vector<Rational>{0, 4}));
  CHECK(f.den() == Poly(Rational(1)));
  CHECK(f.num() == Poly(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  RatFunc g = RatFunc(1) / (RatFunc(2) * a());  // canonical (1/2)/a
  CHECK(g.den() == Poly::monomial(1, 1));
  CHECK(g.num() == Poly(Rational(1, 2)));
}

TEST_CASE("field laws on random elements", "[scalar]") {
  std::mt19937 rng(20260814);
  for (int i = 0; i < 200; ++i) {
    RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng), z = random_ratfunc(rng);
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    RatFunc w = random_ratfunc(rng, /*nonzero=*/true);
    CHECK(w * w.inv() == RatFunc(1));
    CHECK((x / w) * w == x);
  }
}

TEST_CASE("laurent unit detection", "[scalar]") {
  CHECK(is_unit(RatFunc::laurent(Rational(3, 4), -2), UnitMode::kLaurent));
  CHECK(is_unit(a(), UnitMode::kLaurent));
  CHECK(is_unit(RatFunc(7), UnitMode::kLaurent));
  CHECK_FALSE(is_unit(a() + RatFunc(1), UnitMode::kLaurent));
  CHECK_FALSE(is_unit(RatFunc(0), UnitMode::kLaurent));
  CHECK_FALSE(is_unit(RatFunc(1) / (a() + RatFunc(1)), UnitMode::kLaurent));

  CHECK(is_unit(a() + RatFunc(1), UnitMode::kField));
  CHECK_FALSE(is_unit(RatFunc(0), UnitMode::kField));

  auto parts = RatFunc::laurent(Rational(3, 4), -2).laurent_parts();
  REQUIRE(parts.has_value());
  CHECK(parts->first == Rational(3, 4));
  CHECK(parts->second == -2);
}

TEST_CASE("text rendering follows the grammar", "[scalar]") {
  CHECK(RatFunc(0).render() == "0");
  CHECK(RatFunc(1).render() == "1");
  CHECK(RatFunc(Rational(-5, 3)).render() == "-5/3");
  CHECK((RatFunc::laurent(Rational(3, 4), -2) + RatFunc(1)).render() == "3/4*a^-2 + 1");
  CHECK((RatFunc(2) * a()).render() == "2*a^1");
  CHECK((RatFunc(1) / (RatFunc(2) * a())).render() == "1/2*a^-1");
  CHECK((a() - RatFunc(1)).render() == "-1 + 1*a^1");
  CHECK((RatFunc(1) / (a() + RatFunc(1))).render() == "(1)/(1 + 1*a^1)");
  CHECK((a() / (a() + RatFunc(1)) - RatFunc(1)).render() == "(-1)/(1 + 1*a^1)");
}

TEST_CASE("parse accepts the grammar and inverts render", "[scalar]") {
  CHECK(RatFunc::parse("3/4*a^-2 + 1") == RatFunc::laurent(Rational(3, 4), -2) + RatFunc(1));
  CHECK(RatFunc::parse("0") == RatFunc(0));
  CHECK(RatFunc::parse("-2*a^3 - 1/2") == RatFunc::laurent(-2, 3) - RatFunc(Rational(1, 2)));
  CHECK(RatFunc::parse("(1)/(1 + 1*a^1)") == RatFunc(1) / (a() + RatFunc(1)));
  CHECK(RatFunc::parse("1+1*a^1") == a() + RatFunc(1));  // whitespace optional

  CHECK_THROWS_AS(RatFunc::parse("a^2"), frobskein::ScalarParseError);
  CHECK_THROWS_AS(RatFunc::parse("1 +"), frobskein::ScalarParseError);
  CHECK_THROWS_AS(RatFunc::parse("1/0"), frobskein::ScalarParseError);
  CHECK_THROWS_AS(RatFunc::parse(""), frobskein::ScalarParseError);

  std::mt19937 rng(424242);
  for (int i = 0; i < 200; ++i) {
    RatFunc x = random_ratfunc(rng);
    CHECK(RatFunc::parse(x.render()) == x);
  }
}

TEST_CASE("pretty display form", "[scalar]") {
  CHECK(RatFunc(Rational(1, 2)).render_pretty() == "1/2");
  CHECK((RatFunc(1) / (RatFunc(2) * a())).render_pretty() == "1/(2*a)");
  CHECK(RatFunc(Rational(6, 16)).render_pretty() == "3/8");
  CHECK((RatFunc(6) / (RatFunc(16) * a() * a())).render_pretty() == "3/(8*a^2)");
  CHECK((RatFunc(-2) / (RatFunc(16) * a())).render_pretty() == "-1/(8*a)");
  CHECK((RatFunc(2) * a()).render_pretty() == "2*a");
  CHECK(a().pow(2).render_pretty() == "a^2");
  CHECK((a() + RatFunc(1)).render_pretty() == "a + 1");

  auto [neg, abs] = (RatFunc(-2) / (RatFunc(16) * a())).render_pretty_signed();
  CHECK(neg);
  CHECK(abs == "1/(8*a)");
}
