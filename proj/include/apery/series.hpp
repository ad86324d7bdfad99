#pragma once

// The four central-binomial series and their Davydychev-Kalmykov closed
// forms, with certified-error direct summation and the exact u <-> theta
// catalog (u = 4 sin^2(theta/2)).

#include <optional>
#include <vector>

#include "apery/clausen.hpp"
#include "apery/sequences.hpp"
#include "apery/types.hpp"

namespace apery {

enum class SeriesKind { S1, S2, S3, F };
// S1 = sum u^n / (n^3 C(2n,n))
// S2 = sum H_{n-1} u^n / (n^2 C(2n,n))
// S3 = sum H_{2n-1} u^n / (n^2 C(2n,n))
// F  = sum (H_{2n} - H_{n-1}) u^n / (n^2 C(2n,n))

inline const char* series_kind_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::S1: return "S1";
    case SeriesKind::S2: return "S2";
    case SeriesKind::S3: return "S3";
    case SeriesKind::F: return "F";
  }
  return "?";
}

inline std::optional<SeriesKind> series_kind_from_name(const std::string& s) {
  if (s == "S1" || s == "s1") return SeriesKind::S1;
  if (s == "S2" || s == "s2") return SeriesKind::S2;
  if (s == "S3" || s == "s3") return SeriesKind::S3;
  if (s == "F" || s == "f") return SeriesKind::F;
  return std::nullopt;
}

struct ThetaPoint {
  RationalAngle theta;
  std::optional<QuadraticSurd> surd_form;  // exact u when known

  BigReal u(const PrecisionContext& ctx) const {
    if (surd_form) return surd_form->eval(ctx);
    BigReal s = sin(theta.radians(ctx) / 2);
    return 4 * s * s;
  }
};

struct SumResult {
  BigReal value;
  BigReal tail_bound;
  BigReal roundoff_bound;
  long terms_used = 0;

  BigReal certified_error() const { return tail_bound + roundoff_bound; }
};

struct CatalogEntry {
  LucasParams params;
  ThetaPoint plus_branch;   // larger u (= alpha)
  ThetaPoint minus_branch;  // smaller u (= beta)
};

// The paper's table of exact u values and angles.  For each (A,B) the two u
// branches are the roots of x^2 - Ax + B.
inline std::vector<CatalogEntry> angle_catalog() {
  const Rational half(1, 2);
  return {
      // v_n(3,1) = L_{2n}: u = phi^2 = (3+sqrt5)/2 at 3pi/5, phi^-2 at pi/5
      {{3, 1},
       {RationalAngle(3, 5), QuadraticSurd{Rational(3, 2), half, 5}},
       {RationalAngle(1, 5), QuadraticSurd{Rational(3, 2), -half, 5}}},
      // v_n(5,5): u = (5 +- sqrt5)/2 at 4pi/5, 2pi/5
      {{5, 5},
       {RationalAngle(4, 5), QuadraticSurd{Rational(5, 2), half, 5}},
       {RationalAngle(2, 5), QuadraticSurd{Rational(5, 2), -half, 5}}},
      // v_n(4,1): u = 2 +- sqrt3 at 5pi/6, pi/6
      {{4, 1},
       {RationalAngle(5, 6), QuadraticSurd{2, 1, 3}},
       {RationalAngle(1, 6), QuadraticSurd{2, -1, 3}}},
      // v_n(4,2): u = 2 +- sqrt2 at 3pi/4, pi/4
      {{4, 2},
       {RationalAngle(3, 4), QuadraticSurd{2, 1, 2}},
       {RationalAngle(1, 4), QuadraticSurd{2, -1, 2}}},
  };
}

inline std::optional<CatalogEntry> catalog_lookup(const LucasParams& params) {
  for (const auto& e : angle_catalog())
    if (e.params == params) return e;
  return std::nullopt;
}

// Inverts u = 4 sin^2(theta/2) on [0,pi].
inline BigReal theta_from_u(const BigReal& u, const PrecisionContext& ctx) {
  if (u < 0 || u > 4) throw DomainError("theta_from_u: u must be in [0,4]");
  ScopedPrecision scope(ctx);
  return 2 * asin(sqrt(BigReal(u)) / 2);
}

constexpr long kDefaultMaxTerms = 2'000'000;

namespace detail {

// All four kinds have positive terms for u in (0,4) with ratio t_{n+1}/t_n
// below (u/4)(1 + 1/n) for n >= 2: the binomial/power part contributes a
// factor < u/4 and the harmonic weights grow by at most (1 + 1/n).  The
// bound needs n >= 2 (S2's first term is zero).
inline SumResult sum_impl(SeriesKind kind, const BigReal& u,
                          const PrecisionContext& ctx, long max_terms,
                          bool stop_at_eps) {
  if (u < 0 || u >= 4) throw DomainError("sum_direct: u must be in [0,4)");
  ScopedPrecision scope(ctx);
  BigReal eps = pow10(ctx, -ctx.work_digits());
  SumResult res{make_real(ctx), make_real(ctx), make_real(ctx), 0};
  if (u == 0) return res;

  BigReal core = u / 2;  // u^n / C(2n,n) at n = 1
  HarmonicAccumulator h_low;   // tracks H_{n-1}
  HarmonicAccumulator h_high;  // tracks H_{2n} (H_{2n-1} = H_{2n} - 1/(2n))
  BigReal quarter_u = u / 4;

  for (long n = 1; n <= max_terms; ++n) {
    h_low.advance_to(n - 1);
    h_high.advance_to(2 * n);
    BigReal term;
    switch (kind) {
      case SeriesKind::S1:
        term = core / (static_cast<long>(n) * n * n);
        break;
      case SeriesKind::S2:
        term = core * to_real(h_low.value(), ctx) / (n * n);
        break;
      case SeriesKind::S3:
        term = core * to_real(h_high.value() - Rational(1, 2 * n), ctx) /
               (n * n);
        break;
      case SeriesKind::F:
        term = core * (to_real(h_high.value() - h_low.value(), ctx)) / (n * n);
        break;
    }
    res.value += term;
    res.terms_used = n;

    BigReal ratio = quarter_u * (n + 1) / n;
    if (n >= 2 && ratio < 1) {
      BigReal tail = term * ratio / (1 - ratio);
      if (!stop_at_eps || tail < eps) {
        res.tail_bound = tail;
        res.roundoff_bound =
            res.terms_used * abs(res.value) * pow10(ctx, -ctx.work_digits());
        if (stop_at_eps || n == max_terms) return res;
      }
    }
    core = core * u * (n + 1) / (2 * (2 * n + 1));
  }
  throw NotConverged("sum_direct: tail bound not reached within max_terms");
}

}  // namespace detail

// Direct summation with a certified geometric tail bound, run until the
// bound drops below 10^(-work_digits).
inline SumResult sum_direct(SeriesKind kind, const BigReal& u,
                            const PrecisionContext& ctx,
                            long max_terms = kDefaultMaxTerms) {
  return detail::sum_impl(kind, u, ctx, max_terms, true);
}

// Partial sum after exactly `terms` terms, with the tail bound as of the
// last term.  Diagnostic surface for the tail-bound soundness tests;
// requires terms large enough that (u/4)(1+1/terms) < 1.
inline SumResult sum_truncated(SeriesKind kind, const BigReal& u,
                               const PrecisionContext& ctx, long terms) {
  return detail::sum_impl(kind, u, ctx, terms, false);
}

// Davydychev-Kalmykov closed forms; theta in (0,pi], theta = pi allowed for
// every kind (the series itself diverges too slowly at u = 4 for S2/S3/F,
// but the formulas remain defined).
inline BigReal closed_form(SeriesKind kind, const ThetaPoint& point,
                           const PrecisionContext& ctx) {
  const RationalAngle& th = point.theta;
  if (th.is_zero()) throw DomainError("closed_form: theta = 0 (sum is 0)");
  if (th.above_pi()) throw DomainError("closed_form: theta must be in (0,pi]");
  ScopedPrecision scope(ctx);
  BigReal t = th.radians(ctx);
  BigReal z3 = zeta3(ctx);
  RationalAngle sup = th.supplement();
  BigReal log_chord = log(2 * sin(t / 2));
  switch (kind) {
    case SeriesKind::S1:
      return 2 * cl3(th, ctx) + 2 * t * cl2(th, ctx) - 2 * z3 +
             t * t * log_chord;
    case SeriesKind::S2:
      return 4 * cl3(sup, ctx) - 2 * t * cl2(sup, ctx) + 3 * z3;
    case SeriesKind::S3:
      return -2 * cl3(th, ctx) + 4 * cl3(sup, ctx) - 2 * t * cl2(sup, ctx) -
             t * cl2(th, ctx) + 5 * z3;
    case SeriesKind::F:
      return z3 - cl3(th, ctx) + t * t / 2 * log_chord;
  }
  throw DomainError("closed_form: bad kind");
}

// S3 - S2 + S1/2 - F evaluated through the closed forms; an algebraic
// identity, so the result is numerically zero.
inline BigReal combined_identity_residual(const ThetaPoint& point,
                                          const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return closed_form(SeriesKind::S3, point, ctx) -
         closed_form(SeriesKind::S2, point, ctx) +
         closed_form(SeriesKind::S1, point, ctx) / 2 -
         closed_form(SeriesKind::F, point, ctx);
}

}  // namespace apery
