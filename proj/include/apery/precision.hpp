#pragma once

// Precision policy and the arbitrary-precision real type used everywhere.
//
// BigReal is an MPFR-backed floating point number with per-value precision.
// A PrecisionContext fixes the working precision for one computation:
// work_digits = target_digits + guard_digits.  All intermediate arithmetic
// runs at work_digits; only final reports round to target_digits.

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace apery {

using BigReal = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientPrecision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PrecisionContext {
 public:
  // Default guard follows 10 + ceil(log10(max term count)) with the engine's
  // default budget of 2e6 terms, rounded up to 17.
  explicit PrecisionContext(int target_digits, int guard_digits = 17)
      : target_(target_digits), guard_(guard_digits) {
    if (target_digits < 1) throw DomainError("target_digits must be positive");
    if (guard_digits < 10) throw DomainError("guard_digits must be >= 10");
  }

  int target_digits() const { return target_; }
  int guard_digits() const { return guard_; }
  int work_digits() const { return target_ + guard_; }

 private:
  int target_;
  int guard_;
};

// Sets the thread-local default precision for the lifetime of the scope, so
// that temporaries created inside public operations inherit work_digits.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx)
      : saved_(BigReal::default_precision()) {
    BigReal::default_precision(static_cast<unsigned>(ctx.work_digits()));
  }
  ~ScopedPrecision() { BigReal::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

inline BigReal make_real(const PrecisionContext& ctx, long v = 0) {
  return BigReal(v, static_cast<unsigned>(ctx.work_digits()));
}

inline BigReal const_pi(const PrecisionContext& ctx) {
  BigReal p = make_real(ctx);
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

// 10^e at ctx precision; e may be negative.
inline BigReal pow10(const PrecisionContext& ctx, long e) {
  BigReal r = make_real(ctx, 10);
  return boost::multiprecision::pow(r, static_cast<int>(e));
}

// Decimal rendering at exactly `digits` significant digits. The backend's
// str(n, scientific) emits n digits after the point, i.e. n + 1 significant.
inline std::string to_decimal_string(const BigReal& x, int digits) {
  return x.str(static_cast<std::size_t>(std::max(digits - 1, 1)),
               std::ios_base::scientific);
}

}  // namespace apery
