#pragma once

// Zeta constants: zeta(3) by the alternating central-binomial series and
// zeta(2k) as an exact rational multiple of pi^(2k).

#include <mutex>
#include <vector>

#include "apery/sequences.hpp"
#include "apery/types.hpp"

namespace apery {
namespace detail {

// q_k = zeta(2k) / pi^(2k), from q_1 = 1/6 and the Euler convolution
// (k + 1/2) q_k = sum_{j=1}^{k-1} q_j q_{k-j}.  Cached; extended on demand.
inline std::vector<Rational> zeta_even_rationals(std::size_t count) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(0), Rational(1, 6)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= count) {
    std::size_t k = cache.size();
    Rational s = 0;
    for (std::size_t j = 1; j < k; ++j) s += cache[j] * cache[k - j];
    cache.push_back(s * Rational(2, 2 * static_cast<long>(k) + 1));
  }
  return std::vector<Rational>(cache.begin(), cache.begin() + count + 1);
}

}  // namespace detail

// zeta(2k) for k >= 1.
inline BigReal zeta_even(long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("zeta_even: k must be >= 1");
  ScopedPrecision scope(ctx);
  BigReal pi = const_pi(ctx);
  if (k == 1) return pi * pi / 6;
  if (k == 2) {
    BigReal pi2 = pi * pi;
    return pi2 * pi2 / 90;
  }
  Rational q = detail::zeta_even_rationals(static_cast<std::size_t>(k))[k];
  return to_real(q, ctx) * pow(pi, static_cast<int>(2 * k));
}

// zeta(3) = (5/2) * sum_{n>=1} (-1)^(n-1) / (n^3 C(2n,n)).
// Alternating with term ratio < 1/4, so the truncation error is below the
// first omitted term.
inline BigReal zeta3(const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  BigReal eps = pow10(ctx, -(ctx.work_digits() + 2));
  BigReal sum = make_real(ctx);
  BigReal core = make_real(ctx, 1) / 2;  // 1 / C(2n,n) at n = 1
  long n = 1;
  int sign = 1;
  while (true) {
    BigReal term = core / (static_cast<long>(n) * n * n);
    if (term < eps) break;
    sum += sign * term;
    // C(2n,n) -> C(2n+2,n+1) multiplies by 2(2n+1)/(n+1)
    core = core * (n + 1) / (2 * (2 * n + 1));
    ++n;
    sign = -sign;
  }
  return sum * 5 / 2;
}

}  // namespace apery
