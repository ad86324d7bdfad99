#pragma once

// Exact combinatorial sequences: Lucas sequences v_n(A,B), Lucas numbers L_n,
// harmonic numbers H_n, and central binomial coefficients C(2n,n).

#include <vector>

#include "apery/types.hpp"

namespace apery {

// v_0 = 2, v_1 = A, v_{n+1} = A v_n - B v_{n-1}.
inline BigInt lucas_v(const LucasParams& params, long n) {
  if (n < 0) throw DomainError("lucas_v: n must be nonnegative");
  BigInt prev = 2, cur = params.A;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    BigInt next = params.A * cur - params.B * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// L_0 = 2, L_1 = 1, L_{n+1} = L_n + L_{n-1}.
inline BigInt lucas_number(long n) {
  if (n < 0) throw DomainError("lucas_number: n must be nonnegative");
  BigInt prev = 2, cur = 1;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    BigInt next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// H_n = sum_{k=1..n} 1/k, exact; H_0 = 0.
inline Rational harmonic(long n) {
  if (n < 0) throw DomainError("harmonic: n must be nonnegative");
  Rational h = 0;
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

// C(2n,n) via the incremental ratio C(2n+2,n+1)/C(2n,n) = 2(2n+1)/(n+1).
inline BigInt central_binomial(long n) {
  if (n < 0) throw DomainError("central_binomial: n must be nonnegative");
  BigInt c = 1;
  for (long k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= k + 1;
  }
  return c;
}

// O(1)-per-step harmonic accumulator for summation runs.
class HarmonicAccumulator {
 public:
  // current value H_n
  const Rational& value() const { return h_; }
  long index() const { return n_; }
  void advance_to(long n) {
    while (n_ < n) {
      ++n_;
      h_ += Rational(1, n_);
    }
  }

 private:
  Rational h_ = 0;
  long n_ = 0;
};

}  // namespace apery
