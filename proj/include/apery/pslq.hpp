#pragma once

// PSLQ integer relation detection, used to rediscover the rational
// coefficients of the registry identities from raw numerics.

#include <optional>
#include <vector>

#include "apery/identities.hpp"
#include "apery/types.hpp"

namespace apery {

struct RelationResult {
  // Normalized: gcd of nonzero entries 1, first nonzero entry positive.
  std::optional<std::vector<BigInt>> coefficients;
  BigReal residual;         // |sum m_i x_i| re-evaluated at work precision
  long iterations = 0;
  double confidence = 0;    // fraction of working digits the residual clears
  BigReal exclusion_bound;  // no relation with 2-norm below this was missed
};

namespace detail {

inline BigInt round_to_int(const BigReal& x) {
  BigReal r = boost::multiprecision::round(x);
  BigInt z;
  mpfr_get_z(z.backend().data(), r.backend().data(), MPFR_RNDN);
  return z;
}

inline void normalize_relation(std::vector<BigInt>& m) {
  BigInt g = 0;
  for (const auto& c : m) g = gcd(g, c);
  if (g > 1)
    for (auto& c : m) c /= g;
  for (const auto& c : m) {
    if (c != 0) {
      if (c < 0)
        for (auto& e : m) e = -e;
      break;
    }
  }
}

}  // namespace detail

inline RelationResult find_relation(const std::vector<BigReal>& values,
                                    const PrecisionContext& ctx,
                                    int max_coeff_digits = 6) {
  const std::size_t n = values.size();
  if (n < 2) throw DomainError("find_relation: need at least 2 values");
  for (const auto& v : values)
    if (!boost::multiprecision::isfinite(v))
      throw DomainError("find_relation: values must be finite");
  if (ctx.work_digits() <
      15 + static_cast<int>(n) * (max_coeff_digits + 2))
    throw InsufficientPrecision(
        "find_relation: need >= 15 + n*(max_coeff_digits+2) working digits");

  ScopedPrecision scope(ctx);
  const BigReal gamma = sqrt(make_real(ctx, 4) / 3);
  const BigReal detect_eps =
      pow10(ctx, -(ctx.work_digits() -
                   static_cast<long>(n) * max_coeff_digits));
  const BigReal coeff_limit = pow10(ctx, max_coeff_digits);

  // Initialization (Bailey's standard PSLQ, 0-based indices).
  std::vector<BigReal> y(n), s(n);
  std::vector<std::vector<BigReal>> H(n, std::vector<BigReal>(n - 1));
  std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n, 0)),
      B(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = B[i][i] = 1;

  {
    BigReal acc = make_real(ctx);
    for (std::size_t k = n; k-- > 0;) {
      acc += values[k] * values[k];
      s[k] = sqrt(acc);
    }
    BigReal s0 = s[0];
    for (std::size_t k = 0; k < n; ++k) {
      y[k] = values[k] / s0;
      s[k] /= s0;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      H[j][j] = s[j + 1] / s[j];
      for (std::size_t i = j + 1; i < n; ++i)
        H[i][j] = -y[i] * y[j] / (s[j] * s[j + 1]);
    }
  }

  auto reduce_row = [&](std::size_t i, std::size_t j_start) {
    for (std::size_t j = j_start + 1; j-- > 0;) {
      if (H[j][j] == 0) continue;
      BigInt t = detail::round_to_int(H[i][j] / H[j][j]);
      if (t == 0) continue;
      BigReal tr = to_real(t, ctx);
      y[j] += tr * y[i];
      for (std::size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
      for (std::size_t k = 0; k < n; ++k) {
        A[i][k] -= t * A[j][k];
        B[k][j] += t * B[k][i];
      }
    }
  };
  for (std::size_t i = 1; i < n; ++i) reduce_row(i, i - 1);

  auto finish = [&](std::size_t col, long iters) {
    std::vector<BigInt> m(n);
    for (std::size_t k = 0; k < n; ++k) m[k] = B[k][col];
    bool nonzero = false;
    for (const auto& c : m) nonzero = nonzero || c != 0;
    RelationResult r;
    r.iterations = iters;
    r.exclusion_bound = make_real(ctx);
    if (!nonzero) return r;
    detail::normalize_relation(m);
    BigReal res = make_real(ctx);
    for (std::size_t k = 0; k < n; ++k) res += to_real(m[k], ctx) * values[k];
    r.residual = abs(res);
    BigReal scale = make_real(ctx, 1);
    for (const auto& v : values) scale = (std::max)(scale, abs(v));
    if (r.residual > detect_eps * scale) return r;  // spurious; report none
    r.coefficients = std::move(m);
    double digits_cleared =
        r.residual == 0
            ? ctx.work_digits()
            : static_cast<double>(-boost::multiprecision::log10(r.residual /
                                                               scale));
    r.confidence =
        (std::min)(1.0, (std::max)(0.0, digits_cleared / ctx.work_digits()));
    return r;
  };

  const long max_iters = 200L * static_cast<long>(n) * ctx.work_digits();
  for (long iter = 1; iter <= max_iters; ++iter) {
    // Detection: a y entry collapsing to zero exposes a relation in B.
    {
      std::size_t best = 0;
      for (std::size_t i = 1; i < n; ++i)
        if (abs(y[i]) < abs(y[best])) best = i;
      if (abs(y[best]) < detect_eps) {
        RelationResult r = finish(best, iter);
        if (r.coefficients) return r;
      }
    }

    // Row choice: maximize gamma^i |H_ii|.
    std::size_t m = 0;
    {
      BigReal best = make_real(ctx, -1), g = make_real(ctx, 1);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        g *= gamma;
        BigReal v = g * abs(H[i][i]);
        if (v > best) {
          best = v;
          m = i;
        }
      }
    }

    std::swap(y[m], y[m + 1]);
    std::swap(A[m], A[m + 1]);
    std::swap(H[m], H[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m + 2 < n) {
      BigReal t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
      if (t0 != 0) {
        BigReal c = H[m][m] / t0, d = H[m][m + 1] / t0;
        for (std::size_t i = m; i < n; ++i) {
          BigReal a = H[i][m], b = H[i][m + 1];
          H[i][m] = c * a + d * b;
          H[i][m + 1] = -d * a + c * b;
        }
      }
    }

    for (std::size_t i = m + 1; i < n; ++i)
      reduce_row(i, (std::min)(i - 1, m + 1));

    // Exclusion bound: no relation with norm below 1/max|H_jj| exists.
    BigReal hmax = make_real(ctx);
    for (std::size_t j = 0; j + 1 < n; ++j)
      hmax = (std::max)(hmax, abs(H[j][j]));
    BigReal bound = hmax == 0 ? make_real(ctx) : 1 / hmax;

    // Give up once the exclusion bound clears the coefficient budget, or
    // the transform matrix has eaten the working precision.
    BigInt amax = 0;
    for (const auto& row : A)
      for (const auto& e : row) amax = (std::max)(amax, BigInt(abs(e)));
    if (bound > coeff_limit ||
        to_real(amax, ctx) > pow10(ctx, ctx.work_digits() - 10)) {
      RelationResult r;
      r.iterations = iter;
      r.exclusion_bound = bound;
      return r;
    }
  }
  RelationResult r;
  r.iterations = max_iters;
  BigReal hmax = make_real(ctx);
  for (std::size_t j = 0; j + 1 < n; ++j)
    hmax = (std::max)(hmax, abs(H[j][j]));
  r.exclusion_bound = hmax == 0 ? make_real(ctx) : 1 / hmax;
  return r;
}

// Runs find_relation on [LHS of the identity, basis constants...].
inline RelationResult rediscover(const std::string& identity_id,
                                 const std::vector<ConstExpr>& basis,
                                 const PrecisionContext& ctx,
                                 int max_coeff_digits = 6,
                                 long max_terms = kDefaultMaxTerms) {
  if (basis.empty()) throw DomainError("rediscover: basis must be nonempty");
  auto spec = find_identity(identity_id);
  if (!spec) throw DomainError("rediscover: unknown identity " + identity_id);
  ScopedPrecision scope(ctx);
  std::vector<BigReal> values;
  values.push_back(
      std::visit(detail::LhsEvaluator{ctx, max_terms}, spec->lhs).value);
  for (const auto& e : basis) values.push_back(e.eval(ctx));
  return find_relation(values, ctx, max_coeff_digits);
}

}  // namespace apery
