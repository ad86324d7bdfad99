#include <catch2/catch_amalgamated.hpp>

#include "apery/sequences.hpp"

using namespace apery;

namespace {

BigInt factorial(long n) {
  BigInt f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("lucas_v base cases and recurrence") {
  CHECK(lucas_v({3, 1}, 0) == 2);
  CHECK(lucas_v({5, 5}, 1) == 5);
  CHECK(lucas_v({3, 1}, 2) == 7);  // 3*3 - 1*2
  CHECK_THROWS_AS(lucas_v({3, 1}, -1), DomainError);
}

TEST_CASE("lucas numbers") {
  CHECK(lucas_number(0) == 2);
  CHECK(lucas_number(1) == 1);
  CHECK(lucas_number(6) == 18);  // 2,1,3,4,7,11,18
  CHECK_THROWS_AS(lucas_number(-2), DomainError);
}

TEST_CASE("v_n(3,1) = L_{2n}") {
  for (long n = 0; n <= 30; ++n)
    CHECK(lucas_v({3, 1}, n) == lucas_number(2 * n));
}

TEST_CASE("v_n = alpha^n + beta^n for the paper instances") {
  PrecisionContext ctx(30);
  ScopedPrecision scope(ctx);
  for (LucasParams p : {LucasParams{3, 1}, LucasParams{4, 1}, LucasParams{4, 2},
                        LucasParams{5, 5}}) {
    BigReal disc = sqrt(make_real(ctx, p.A * p.A - 4 * p.B));
    BigReal alpha = (p.A + disc) / 2, beta = (p.A - disc) / 2;
    for (long n = 0; n <= 30; ++n) {
      BigReal closed = pow(alpha, static_cast<int>(n)) +
                       pow(beta, static_cast<int>(n));
      CHECK(abs(to_real(lucas_v(p, n), ctx) - closed) < pow10(ctx, -28));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(3) == Rational(11, 6));
  CHECK_THROWS_AS(harmonic(-1), DomainError);
}

TEST_CASE("harmonic recombination identity, exact") {
  // H_{2n} - H_{n-1} = H_{2n-1} - H_{n-1} + 1/(2n)
  for (long n = 1; n <= 200; ++n)
    CHECK(harmonic(2 * n) - harmonic(n - 1) ==
          harmonic(2 * n - 1) - harmonic(n - 1) + Rational(1, 2 * n));
}

TEST_CASE("harmonic accumulator matches direct evaluation") {
  HarmonicAccumulator acc;
  for (long n : {1L, 2L, 7L, 40L, 41L, 100L}) {
    acc.advance_to(n);
    CHECK(acc.value() == harmonic(n));
  }
}

TEST_CASE("central binomial against factorial oracle") {
  CHECK(central_binomial(0) == 1);
  CHECK(central_binomial(3) == 20);
  CHECK(central_binomial(5) == 252);
  for (long n = 0; n <= 40; ++n)
    CHECK(central_binomial(n) ==
          factorial(2 * n) / (factorial(n) * factorial(n)));
}

TEST_CASE("central binomial lower bound 4^n/(2n+1)") {
  BigInt four_n = 1;
  for (long n = 0; n <= 60; ++n) {
    CHECK(central_binomial(n) * (2 * n + 1) >= four_n);
    four_n *= 4;
  }
}
