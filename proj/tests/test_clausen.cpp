#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "apery/clausen.hpp"

using namespace apery;

namespace {

// Brute-force Fourier oracle for Cl3: plain partial sum, tail below
// 1/(2N^2) ~ 1.25e-9 at N = 2e4.
double cl3_fourier(double theta, long terms = 20000) {
  double s = 0;
  for (long n = terms; n >= 1; --n)
    s += std::cos(n * theta) / (static_cast<double>(n) * n * n);
  return s;
}

// Fourier oracle for Cl2: the plain partial sum has an O(1/N) oscillating
// tail, so average the partial sums over one full period of the phase.
double cl2_fourier(const RationalAngle& angle, long base_terms = 20000) {
  double theta = M_PI * angle.p() / angle.q();
  long period = 2 * angle.q();
  double s = 0;
  for (long n = 1; n < base_terms; ++n)
    s += std::sin(n * theta) / (static_cast<double>(n) * n);
  double avg = 0;
  for (long n = base_terms; n < base_terms + period; ++n) {
    avg += s;
    s += std::sin(n * theta) / (static_cast<double>(n) * n);
  }
  return avg / period;
}

double to_double(const BigReal& x) { return static_cast<double>(x); }

}  // namespace

TEST_CASE("cl2 vanishes at 0, pi, 2pi") {
  PrecisionContext ctx(40);
  CHECK(cl2({0, 1}, ctx) == 0);
  CHECK(cl2({1, 1}, ctx) == 0);
  CHECK(cl2({2, 1}, ctx) == 0);
}

TEST_CASE("cl2 at pi/2 is Catalan's constant") {
  // Oracle: sum sin(n pi/2)/n^2 = sum (-1)^j/(2j+1)^2, summed in adjacent
  // pairs (1/(4k+1)^2 - 1/(4k+3)^2), smallest terms first; tail < 3e-13.
  long double oracle = 0;
  for (long k = 1000000; k >= 0; --k) {
    long double a = 4.0L * k + 1, b = 4.0L * k + 3;
    oracle += 1.0L / (a * a) - 1.0L / (b * b);
  }
  PrecisionContext ctx(40);
  BigReal v = cl2({1, 2}, ctx);
  CHECK(std::abs(to_double(v) - static_cast<double>(oracle)) < 1e-12);
  CHECK(to_decimal_string(v, 16) == "9.159655941772190e-01");
}

TEST_CASE("cl3 special values") {
  PrecisionContext ctx(40);
  BigReal z3 = zeta3(ctx);
  BigReal eps = pow10(ctx, -40);
  CHECK(abs(cl3({0, 1}, ctx) - z3) < eps);
  CHECK(abs(cl3({2, 1}, ctx) - z3) < eps);
  CHECK(abs(cl3({1, 1}, ctx) + Rational(3, 4) * z3) < eps);
  CHECK(abs(cl3({1, 2}, ctx) + Rational(3, 32) * z3) < eps);
  // Cl3(pi/3) = zeta(3)/3, from the r=3 odd distribution relation plus the
  // Cl3(pi) value.
  CHECK(abs(cl3({1, 3}, ctx) - z3 / 3) < eps);
}

TEST_CASE("symbolic special values") {
  PrecisionContext ctx(30);
  BigReal z3 = zeta3(ctx);
  CHECK(abs(special_value_cl3({0, 1}).eval(ctx) - z3) < pow10(ctx, -29));
  CHECK(abs(special_value_cl3({1, 2}).eval(ctx) + Rational(3, 32) * z3) <
        pow10(ctx, -29));
  CHECK(abs(special_value_cl3({1, 1}).eval(ctx) + Rational(3, 4) * z3) <
        pow10(ctx, -29));
  CHECK_THROWS_AS(special_value_cl3({1, 3}), DomainError);
}

TEST_CASE("log-sine expansions agree with Fourier oracles") {
  PrecisionContext ctx(30);
  for (auto [p, q] : {std::pair{1L, 6L}, {1L, 4L}, {1L, 3L}, {1L, 2L},
                      {2L, 3L}}) {
    RationalAngle a(p, q);
    double theta = M_PI * p / q;
    CHECK(std::abs(to_double(cl3(a, ctx)) - cl3_fourier(theta)) < 1e-8);
    CHECK(std::abs(to_double(cl2(a, ctx)) - cl2_fourier(a)) < 1e-7);
  }
}

TEST_CASE("distribution relations") {
  PrecisionContext ctx(40);
  BigReal z3 = zeta3(ctx);
  BigReal eps = pow10(ctx, -40);
  for (long r = 1; r <= 12; ++r)
    CHECK(abs(distribution_sum_odd(r, ctx) + Rational(3, 4 * r * r) * z3) <
          eps);
  for (long r = 2; r <= 12; ++r)
    CHECK(abs(distribution_sum_even(r, ctx) +
              Rational(r * r - 1, r * r) * z3) < eps);
  CHECK_THROWS_AS(distribution_sum_odd(0, ctx), DomainError);
  CHECK_THROWS_AS(distribution_sum_even(1, ctx), DomainError);
}

TEST_CASE("distribution relation spot values") {
  PrecisionContext ctx(40);
  BigReal z3 = zeta3(ctx);
  BigReal eps = pow10(ctx, -40);
  CHECK(abs(distribution_sum_odd(1, ctx) + Rational(3, 4) * z3) < eps);
  CHECK(abs(distribution_sum_odd(4, ctx) + Rational(3, 64) * z3) < eps);
  CHECK(abs(distribution_sum_odd(5, ctx) + Rational(3, 100) * z3) < eps);
  CHECK(abs(distribution_sum_even(2, ctx) + Rational(3, 4) * z3) < eps);
  CHECK(abs(distribution_sum_even(5, ctx) + Rational(24, 25) * z3) < eps);
  // r=3 even: 2*Cl3(2pi/3) = -(8/9) zeta3; cross-check the Fourier oracle.
  BigReal even3 = distribution_sum_even(3, ctx);
  CHECK(abs(even3 + Rational(8, 9) * z3) < eps);
  CHECK(std::abs(to_double(even3) - 2 * cl3_fourier(2 * M_PI / 3)) < 1e-8);
}

TEST_CASE("pair combinations") {
  PrecisionContext ctx(40);
  BigReal z3 = zeta3(ctx);
  BigReal eps = pow10(ctx, -40);
  auto pair_sum = [&](long p1, long q1, long p2, long q2) {
    return cl3({p1, q1}, ctx) + cl3({p2, q2}, ctx);
  };
  CHECK(abs(pair_sum(1, 4, 3, 4) + Rational(3, 128) * z3) < eps);
  CHECK(abs(pair_sum(1, 5, 3, 5) - Rational(9, 25) * z3) < eps);
  CHECK(abs(pair_sum(1, 6, 5, 6) - Rational(1, 12) * z3) < eps);
  CHECK(abs(pair_sum(2, 5, 4, 5) + Rational(12, 25) * z3) < eps);
}

TEST_CASE("reflection symmetry") {
  PrecisionContext ctx(40);
  BigReal eps = pow10(ctx, -40);
  for (auto [p, q] : {std::pair{1L, 5L}, {3L, 7L}, {5L, 6L}, {7L, 9L}}) {
    RationalAngle a(p, q);
    CHECK(abs(cl2(a, ctx) + cl2(a.reflected(), ctx)) < eps);
    CHECK(abs(cl3(a, ctx) - cl3(a.reflected(), ctx)) < eps);
  }
}

TEST_CASE("rational angle normalization") {
  CHECK(RationalAngle(2, 4) == RationalAngle(1, 2));
  CHECK(RationalAngle(3, 5).supplement() == RationalAngle(2, 5));
  CHECK(RationalAngle(1, 4).reflected() == RationalAngle(7, 4));
  CHECK_THROWS_AS(RationalAngle(5, 2), DomainError);
  CHECK_THROWS_AS(RationalAngle(1, 0), DomainError);
}
