#pragma once

// Exact scalar types shared across modules: big integers, rationals,
// quadratic surds a + b*sqrt(d), rational multiples of pi, and Lucas
// sequence parameters.

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <optional>
#include <string>

#include "apery/precision.hpp"

namespace apery {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigReal to_real(const Rational& r, const PrecisionContext& ctx) {
  BigReal num = make_real(ctx);
  mpfr_set_z(num.backend().data(), numerator(r).backend().data(), MPFR_RNDN);
  BigReal den = make_real(ctx);
  mpfr_set_z(den.backend().data(), denominator(r).backend().data(), MPFR_RNDN);
  return num / den;
}

inline BigReal to_real(const BigInt& z, const PrecisionContext& ctx) {
  BigReal x = make_real(ctx);
  mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
  return x;
}

// a + b*sqrt(d), d a positive squarefree integer.  d = 1 degenerates to the
// rational a + b, which is convenient for log arguments like 2 or 5.
struct QuadraticSurd {
  Rational a;
  Rational b;
  long d = 1;

  BigReal eval(const PrecisionContext& ctx) const {
    BigReal v = to_real(a, ctx);
    if (b != 0) v += to_real(b, ctx) * sqrt(make_real(ctx, d));
    return v;
  }

  static QuadraticSurd rational(const Rational& r) { return {r, 0, 1}; }
  // phi = 1/2 + (1/2) sqrt(5)
  static QuadraticSurd golden_ratio() {
    return {Rational(1, 2), Rational(1, 2), 5};
  }

  bool operator==(const QuadraticSurd&) const = default;
};

// theta = (p/q) * pi with 0 <= p/q <= 2, reduced.
class RationalAngle {
 public:
  RationalAngle(long p, long q) : p_(p), q_(q) {
    if (q <= 0) throw DomainError("RationalAngle: q must be positive");
    if (p < 0) throw DomainError("RationalAngle: p must be nonnegative");
    long g = std::gcd(p_, q_);
    if (g > 1) { p_ /= g; q_ /= g; }
    if (p_ > 2 * q_) throw DomainError("RationalAngle: p/q must be <= 2");
  }

  long p() const { return p_; }
  long q() const { return q_; }

  bool is_zero() const { return p_ == 0; }
  bool is_pi() const { return p_ == q_; }
  bool above_pi() const { return p_ > q_; }

  // 2*pi - theta, the reflection used by the Clausen symmetries.
  RationalAngle reflected() const { return RationalAngle(2 * q_ - p_, q_); }
  // pi - theta; requires theta <= pi.
  RationalAngle supplement() const {
    if (above_pi()) throw DomainError("supplement: angle above pi");
    return RationalAngle(q_ - p_, q_);
  }

  BigReal radians(const PrecisionContext& ctx) const {
    return const_pi(ctx) * p_ / q_;
  }

  bool operator==(const RationalAngle&) const = default;

  std::string str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
  }

 private:
  long p_;
  long q_;
};

struct LucasParams {
  long A = 0;
  long B = 0;
  bool operator==(const LucasParams&) const = default;
};

}  // namespace apery
