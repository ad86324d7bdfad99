#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "apery/pslq.hpp"

using namespace apery;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

ConstExpr pi2_log(const QuadraticSurd& s) {
  return ConstExpr::power(ConstExpr::pi(), 2) * ConstExpr::log(s);
}

}  // namespace

TEST_CASE("find_relation on [x, 2x]") {
  PrecisionContext ctx(40);
  ScopedPrecision scope(ctx);
  BigReal x = const_pi(ctx);
  auto r = find_relation({x, 2 * x}, ctx, 3);
  REQUIRE(r.coefficients);
  CHECK(*r.coefficients == ints({2, -1}));
  CHECK(r.residual < pow10(ctx, -35));
  CHECK(r.confidence > 0.5);
}

TEST_CASE("rediscover the Fibonacci-flavoured coefficients") {
  PrecisionContext ctx(80);
  auto r = rediscover("sun-L2n",
                      {ConstExpr::zeta3(),
                       pi2_log(QuadraticSurd::golden_ratio())},
                      ctx, 3);
  REQUIRE(r.coefficients);
  CHECK(*r.coefficients == ints({25, -41, -4}));
  CHECK(r.residual < pow10(ctx, -60));
}

TEST_CASE("rediscover the v_n(4,1) coefficients") {
  PrecisionContext ctx(80);
  auto r = rediscover("sun-v41",
                      {ConstExpr::zeta3(), pi2_log(QuadraticSurd{2, 1, 3})},
                      ctx, 3);
  REQUIRE(r.coefficients);
  CHECK(*r.coefficients == ints({12, -23, -2}));
  CHECK(r.residual < pow10(ctx, -60));
}

TEST_CASE("no false relation between 1 and pi") {
  PrecisionContext ctx(50);
  ScopedPrecision scope(ctx);
  auto r = find_relation({make_real(ctx, 1), const_pi(ctx)}, ctx, 3);
  CHECK_FALSE(r.coefficients);
  // The reported exclusion bound must at least clear the coefficient budget.
  CHECK(r.exclusion_bound > pow10(ctx, 3));
}

TEST_CASE("recovers random planted relations") {
  PrecisionContext ctx(80);
  ScopedPrecision scope(ctx);
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<long> coeff(-999, 999);
  std::uniform_real_distribution<double> val(0.1, 10.0);
  int recovered = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> m(4);
    do {
      for (auto& c : m) c = coeff(rng);
    } while (m[3] == 0);
    std::vector<BigReal> x(4);
    BigReal acc = make_real(ctx);
    for (int i = 0; i < 3; ++i) {
      // Full-precision random values: a double seed plus a tiny tail so the
      // inputs are not exactly representable in 53 bits.
      x[i] = BigReal(val(rng)) + pow10(ctx, -25) * BigReal(val(rng));
      acc += m[i] * x[i];
    }
    x[3] = -acc / m[3];
    // 4-digit budget: the planted vector can have 2-norm up to ~2000, past
    // the 10^3 exclusion threshold.
    auto r = find_relation(x, ctx, 4);
    REQUIRE(r.coefficients);
    std::vector<BigInt> want(m.begin(), m.end());
    detail::normalize_relation(want);
    // PSLQ may land on the planted relation or (rarely) an equivalent one if
    // the planted coefficients share a factor; after normalization they must
    // coincide.
    if (*r.coefficients == want) ++recovered;
    // Whatever was found must be a genuine relation.
    BigReal res = make_real(ctx);
    for (int i = 0; i < 4; ++i) res += to_real((*r.coefficients)[i], ctx) * x[i];
    CHECK(abs(res) < pow10(ctx, -50));
  }
  CHECK(recovered >= 38);
}

TEST_CASE("reported residual is honest") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  BigReal z3 = zeta3(ctx), pi = const_pi(ctx);
  std::vector<BigReal> x{7 * z3 - 3 * pi, z3, pi};
  auto r = find_relation(x, ctx, 3);
  REQUIRE(r.coefficients);
  CHECK(*r.coefficients == ints({1, -7, 3}));
  BigReal fresh = make_real(ctx);
  for (std::size_t i = 0; i < x.size(); ++i)
    fresh += to_real((*r.coefficients)[i], ctx) * x[i];
  CHECK(r.residual == abs(fresh));
}

TEST_CASE("scale invariance") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  BigReal z3 = zeta3(ctx), pi = const_pi(ctx);
  std::vector<BigReal> x{12 * z3 + 5 * pi, z3, pi};
  std::vector<BigReal> y = x;
  BigReal k = to_real(Rational(7, 3), ctx);
  for (auto& v : y) v *= k;
  auto a = find_relation(x, ctx, 3);
  auto b = find_relation(y, ctx, 3);
  REQUIRE(a.coefficients);
  REQUIRE(b.coefficients);
  CHECK(*a.coefficients == *b.coefficients);
}

TEST_CASE("refuses to run without enough working digits") {
  PrecisionContext ctx(10);  // 27 working digits < 15 + 3*(6+2)
  ScopedPrecision scope(ctx);
  std::vector<BigReal> x{make_real(ctx, 1), const_pi(ctx), zeta3(ctx)};
  CHECK_THROWS_AS(find_relation(x, ctx), InsufficientPrecision);
  CHECK_THROWS_AS(find_relation({const_pi(ctx)}, ctx), DomainError);
}

TEST_CASE("the Fibonacci sum is not a rational multiple of zeta(3)") {
  PrecisionContext ctx(60);
  auto r = rediscover("sun-L2n", {ConstExpr::zeta3()}, ctx, 4);
  CHECK_FALSE(r.coefficients);

  // Exhaustive oracle over the same budget: no p/q with |p|, q <= 10^4
  // matches the ratio LHS / zeta(3) even to double accuracy.
  ScopedPrecision scope(ctx);
  auto spec = find_identity("sun-L2n");
  BigReal lhs =
      std::visit(detail::LhsEvaluator{ctx, kDefaultMaxTerms}, spec->lhs).value;
  double ratio = static_cast<double>(lhs / zeta3(ctx));
  for (long q = 1; q <= 10000; ++q) {
    double p = std::round(ratio * q);
    if (std::abs(p) > 10000) continue;
    CHECK(std::abs(ratio - p / q) > 1e-12);
  }
}
