#pragma once

// Clausen functions Cl2 and Cl3 at rational multiples of pi.
//
// Evaluation uses the log-sine power series obtained by integrating
//   log(2 sin(t/2)) = log t - sum_{m>=1} zeta(2m)/m (t/2pi)^(2m)
// once and twice:
//   Cl2(t) = t - t log t + t sum_{m>=1} zeta(2m)/(m(2m+1)) (t/2pi)^(2m)
//   Cl3(t) = zeta(3) - (3/4) t^2 + (t^2/2) log t
//            - t^2 sum_{m>=1} zeta(2m)/(m(2m+1)(2m+2)) (t/2pi)^(2m)
// After reduction to [0,pi] the term ratio is (t/2pi)^2 <= 1/4.  The tests
// validate both expansions against brute-force Fourier partial sums.

#include "apery/expr.hpp"
#include "apery/types.hpp"
#include "apery/zeta.hpp"

namespace apery {
namespace detail {

// Shared tail machinery for the two expansions.  `extra(m)` is the extra
// denominator factor beyond m(2m+1): 1 for Cl2, (2m+2) for Cl3.
template <typename ExtraFactor>
BigReal log_sine_tail_sum(const RationalAngle& theta, const PrecisionContext& ctx,
                          ExtraFactor extra) {
  // y = (theta/2)^2 so that zeta(2m) (theta/2pi)^(2m) = q_m y^m with
  // q_m = zeta(2m)/pi^(2m) exact rational.
  BigReal t = theta.radians(ctx);
  BigReal y = t * t / 4;
  BigReal ratio = y / (const_pi(ctx) * const_pi(ctx));  // = (theta/2pi)^2 <= 1/4
  BigReal eps = pow10(ctx, -(ctx.work_digits() + 2));

  std::size_t capacity = 64;
  auto q = zeta_even_rationals(capacity);
  BigReal sum = make_real(ctx);
  BigReal ypow = make_real(ctx, 1);
  for (std::size_t m = 1;; ++m) {
    if (m >= q.size()) {
      capacity *= 2;
      q = zeta_even_rationals(capacity);
    }
    ypow *= y;
    BigReal term = to_real(q[m], ctx) * ypow /
                   (static_cast<long>(m) * (2 * static_cast<long>(m) + 1) *
                    extra(static_cast<long>(m)));
    sum += term;
    if (term * ratio / (1 - ratio) < eps) break;
  }
  return sum;
}

}  // namespace detail

// Per-evaluation certified error budget for a Clausen value.
inline BigReal clausen_eval_error(const PrecisionContext& ctx) {
  return pow10(ctx, -(ctx.work_digits() - 3));
}

inline BigReal cl2(const RationalAngle& theta, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (theta.is_zero() || theta.is_pi() || theta.p() == 2 * theta.q())
    return make_real(ctx);
  if (theta.above_pi()) return -cl2(theta.reflected(), ctx);
  BigReal t = theta.radians(ctx);
  BigReal tail = detail::log_sine_tail_sum(theta, ctx, [](long) { return 1; });
  return t - t * log(t) + t * tail;
}

inline BigReal cl3(const RationalAngle& theta, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (theta.is_zero() || theta.p() == 2 * theta.q()) return zeta3(ctx);
  if (theta.above_pi()) return cl3(theta.reflected(), ctx);
  BigReal t = theta.radians(ctx);
  BigReal t2 = t * t;
  BigReal tail =
      detail::log_sine_tail_sum(theta, ctx, [](long m) { return 2 * m + 2; });
  return zeta3(ctx) - 3 * t2 / 4 + t2 / 2 * log(t) - t2 * tail;
}

// Exact closed forms at the three arguments the zeta reflection gives:
// Cl3(0) = zeta(3), Cl3(pi/2) = -(3/32) zeta(3), Cl3(pi) = -(3/4) zeta(3).
inline ConstExpr special_value_cl3(const RationalAngle& point) {
  if (point.is_zero() || point.p() == 2 * point.q()) return ConstExpr::zeta3();
  if (point == RationalAngle(1, 2))
    return ConstExpr::rat(-3, 32) * ConstExpr::zeta3();
  if (point.is_pi()) return ConstExpr::rat(-3, 4) * ConstExpr::zeta3();
  throw DomainError("special_value_cl3: no closed form at theta = " +
                    point.str() + " pi");
}

// sum_{j=0}^{r-1} Cl3((2j+1) pi / r); equals -(3/(4r^2)) zeta(3).
inline BigReal distribution_sum_odd(long r, const PrecisionContext& ctx) {
  if (r < 1) throw DomainError("distribution_sum_odd: r must be >= 1");
  ScopedPrecision scope(ctx);
  BigReal s = make_real(ctx);
  for (long j = 0; j < r; ++j) s += cl3(RationalAngle(2 * j + 1, r), ctx);
  return s;
}

// sum_{j=1}^{r-1} Cl3(2j pi / r); equals -(1 - 1/r^2) zeta(3).
inline BigReal distribution_sum_even(long r, const PrecisionContext& ctx) {
  if (r < 2) throw DomainError("distribution_sum_even: r must be >= 2");
  ScopedPrecision scope(ctx);
  BigReal s = make_real(ctx);
  for (long j = 1; j < r; ++j) s += cl3(RationalAngle(2 * j, r), ctx);
  return s;
}

}  // namespace apery
