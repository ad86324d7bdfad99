#pragma once

// The identity registry and verification engine.  Every equation the tool
// checks is data: a left-hand side evaluated numerically and a ConstExpr
// right-hand side, compared under an explicit error budget.

#include <chrono>
#include <string>
#include <variant>
#include <vector>

#include "apery/expr.hpp"
#include "apery/series.hpp"

namespace apery {

// --- left-hand-side forms ---------------------------------------------------

// sum_n v_n(A,B) w_n = F(u_plus) + F(u_minus), the conjugate-branch split.
struct LucasSumLhs {
  LucasParams params;
};
// One series summed directly at u(theta).
struct SeriesAtThetaLhs {
  SeriesKind kind;
  ThetaPoint point;
};
// sum_i coeff_i * Cl_order(theta_i).
struct ClausenComboLhs {
  int order = 3;
  std::vector<RationalAngle> angles;
  std::vector<Rational> coeffs;
};
// The distribution relation sums over equally spaced angles.
struct DistributionSumLhs {
  bool odd = true;
  long r = 1;
};
// sum_direct(kind, u(theta)) minus the matching closed form; RHS is 0.
struct SeriesClosedFormGapLhs {
  SeriesKind kind;
  ThetaPoint point;
};
// S3 - S2 + S1/2 - F through the closed forms; RHS is 0.
struct CombinedResidualLhs {
  ThetaPoint point;
};

using LhsSpec = std::variant<LucasSumLhs, SeriesAtThetaLhs, ClausenComboLhs,
                             DistributionSumLhs, SeriesClosedFormGapLhs,
                             CombinedResidualLhs>;

struct IdentitySpec {
  std::string id;
  LhsSpec lhs;
  ConstExpr rhs;
  std::string source;
};

enum class Verdict { Verified, Inconclusive, Failed };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Failed: return "Failed";
  }
  return "?";
}

struct VerificationReport {
  std::string identity_id;
  int target_digits = 0;
  BigReal lhs_value;
  BigReal rhs_value;
  BigReal abs_gap;
  BigReal certified_error;
  int matched_digits = 0;
  long terms_used = 0;
  double elapsed_seconds = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::string note;
};

// --- evaluation -------------------------------------------------------------

inline BigReal eval_const(const ConstExpr& expr, const PrecisionContext& ctx) {
  return expr.eval(ctx);
}

namespace detail {

struct LhsValue {
  BigReal value;
  BigReal error;
  long terms = 0;
};

struct LhsEvaluator {
  const PrecisionContext& ctx;
  long max_terms;

  LhsValue operator()(const LucasSumLhs& l) const {
    auto entry = catalog_lookup(l.params);
    if (!entry)
      throw DomainError("LucasSum: no catalog entry for (A,B) = (" +
                        std::to_string(l.params.A) + "," +
                        std::to_string(l.params.B) + ")");
    SumResult plus =
        sum_direct(SeriesKind::F, entry->plus_branch.u(ctx), ctx, max_terms);
    SumResult minus =
        sum_direct(SeriesKind::F, entry->minus_branch.u(ctx), ctx, max_terms);
    return {plus.value + minus.value,
            plus.certified_error() + minus.certified_error(),
            plus.terms_used + minus.terms_used};
  }
  LhsValue operator()(const SeriesAtThetaLhs& l) const {
    SumResult r = sum_direct(l.kind, l.point.u(ctx), ctx, max_terms);
    return {r.value, r.certified_error(), r.terms_used};
  }
  LhsValue operator()(const ClausenComboLhs& l) const {
    if (l.angles.size() != l.coeffs.size())
      throw DomainError("ClausenCombo: angle/coefficient count mismatch");
    BigReal v = make_real(ctx);
    BigReal err = make_real(ctx);
    for (std::size_t i = 0; i < l.angles.size(); ++i) {
      BigReal c = to_real(l.coeffs[i], ctx);
      v += c * (l.order == 2 ? cl2(l.angles[i], ctx) : cl3(l.angles[i], ctx));
      err += abs(c) * clausen_eval_error(ctx);
    }
    return {v, err, 0};
  }
  LhsValue operator()(const DistributionSumLhs& l) const {
    BigReal v = l.odd ? distribution_sum_odd(l.r, ctx)
                      : distribution_sum_even(l.r, ctx);
    return {v, l.r * clausen_eval_error(ctx), 0};
  }
  LhsValue operator()(const SeriesClosedFormGapLhs& l) const {
    SumResult r = sum_direct(l.kind, l.point.u(ctx), ctx, max_terms);
    BigReal cf = closed_form(l.kind, l.point, ctx);
    return {r.value - cf, r.certified_error() + 8 * clausen_eval_error(ctx),
            r.terms_used};
  }
  LhsValue operator()(const CombinedResidualLhs& l) const {
    return {combined_identity_residual(l.point, ctx),
            24 * clausen_eval_error(ctx), 0};
  }
};

inline int matched_digits_of(const BigReal& gap, const BigReal& scale,
                             int target) {
  if (gap == 0) return target;
  double lg = static_cast<double>(
      boost::multiprecision::log10(gap / (std::max)(scale, BigReal(1))));
  int d = static_cast<int>(-lg);
  return std::clamp(d, 0, target);
}

}  // namespace detail

inline VerificationReport verify(const IdentitySpec& spec,
                                 const PrecisionContext& ctx,
                                 long max_terms = kDefaultMaxTerms) {
  ScopedPrecision scope(ctx);
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.identity_id = spec.id;
  rep.target_digits = ctx.target_digits();
  try {
    detail::LhsValue lhs =
        std::visit(detail::LhsEvaluator{ctx, max_terms}, spec.lhs);
    rep.lhs_value = lhs.value;
    rep.rhs_value = eval_const(spec.rhs, ctx);
    rep.abs_gap = abs(rep.lhs_value - rep.rhs_value);
    rep.certified_error = lhs.error;
    rep.terms_used = lhs.terms;
    BigReal threshold =
        (std::max)(rep.certified_error, pow10(ctx, -ctx.target_digits()));
    if (rep.abs_gap <= threshold) {
      rep.verdict = Verdict::Verified;
    } else if (rep.abs_gap > 1000 * threshold) {
      rep.verdict = Verdict::Failed;
    } else {
      rep.verdict = Verdict::Inconclusive;
    }
    BigReal scale = (std::max)(abs(rep.lhs_value), abs(rep.rhs_value));
    rep.matched_digits =
        detail::matched_digits_of(rep.abs_gap, scale, ctx.target_digits());
  } catch (const NotConverged& e) {
    rep.verdict = Verdict::Inconclusive;
    rep.note = e.what();
  }
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

// --- the built-in registry --------------------------------------------------

namespace detail {

inline std::string angle_tag(const RationalAngle& a) {
  if (a.is_zero()) return "0";
  std::string s = a.p() == 1 ? "pi" : std::to_string(a.p()) + "pi";
  if (a.q() != 1) s += std::to_string(a.q());
  return s;
}

inline ConstExpr pi_squared() {
  return ConstExpr::power(ConstExpr::pi(), 2);
}

}  // namespace detail

inline std::vector<IdentitySpec> builtin_registry() {
  using CE = ConstExpr;
  const CE z3 = CE::zeta3();
  const CE pi2 = detail::pi_squared();
  const QuadraticSurd phi = QuadraticSurd::golden_ratio();
  std::vector<IdentitySpec> reg;

  // Sun's four conjectural identities.
  reg.push_back({"sun-L2n", LucasSumLhs{{3, 1}},
                 CE::rat(1, 25) *
                     (CE::rat(41) * z3 + CE::rat(4) * pi2 * CE::log(phi)),
                 "Sun, Conjecture 10.62"});
  reg.push_back(
      {"sun-v55", LucasSumLhs{{5, 5}},
       CE::rat(1, 50) *
           (CE::rat(124) * z3 +
            pi2 * (CE::rat(5) * CE::log(QuadraticSurd::rational(5)) +
                   CE::rat(6) * CE::log(phi))),
       "Sun, Conjecture 10.63"});
  reg.push_back({"sun-v41", LucasSumLhs{{4, 1}},
                 CE::rat(1, 12) *
                     (CE::rat(23) * z3 +
                      CE::rat(2) * pi2 * CE::log(QuadraticSurd{2, 1, 3})),
                 "Sun 2022, conjectured identity for v_n(4,1)"});
  // The log(2) coefficient is 5, not the 4 sometimes quoted: the two
  // chord-log terms combine to (pi^2/64) log((2+sqrt2)^9 (2-sqrt2)) and
  // (2+sqrt2)^9 (2-sqrt2) = 2^5 (1+sqrt2)^8 exactly.
  reg.push_back(
      {"sun-v42", LucasSumLhs{{4, 2}},
       CE::rat(1, 128) *
           (CE::rat(259) * z3 +
            CE::rat(2) * pi2 *
                (CE::rat(5) * CE::log(QuadraticSurd::rational(2)) +
                 CE::rat(8) * CE::log(QuadraticSurd{1, 1, 2}))),
       "Sun 2022, conjectured identity for v_n(4,2)"});
  // Same value, reduced coefficients; must evaluate identically to sun-v42.
  reg.push_back(
      {"sun-v42-simplified", LucasSumLhs{{4, 2}},
       CE::rat(259, 128) * z3 +
           CE::rat(1, 64) * pi2 *
               (CE::rat(5) * CE::log(QuadraticSurd::rational(2)) +
                CE::rat(8) * CE::log(QuadraticSurd{1, 1, 2})),
       "Sun 2022, reduced form"});

  // The four Cl3 pair combinations.
  auto combo = [&](const std::string& id, RationalAngle a, RationalAngle b,
                   Rational coeff) {
    reg.push_back({id, ClausenComboLhs{3, {a, b}, {1, 1}},
                   CE::rat(coeff) * z3, "Lewin, Eq. (6.51) specializations"});
  };
  combo("cl3-combo-pi4", {1, 4}, {3, 4}, Rational(-3, 128));
  combo("cl3-combo-pi5", {1, 5}, {3, 5}, Rational(9, 25));
  combo("cl3-combo-pi6", {1, 6}, {5, 6}, Rational(1, 12));
  combo("cl3-combo-2pi5", {2, 5}, {4, 5}, Rational(-12, 25));

  // Distribution relations.
  for (long r = 1; r <= 12; ++r)
    reg.push_back({"dist-odd-r" + std::to_string(r), DistributionSumLhs{true, r},
                   CE::rat(Rational(-3, 4 * r * r)) * z3,
                   "Lewin, Eq. (6.51)"});
  for (long r = 2; r <= 12; ++r)
    reg.push_back({"dist-even-r" + std::to_string(r),
                   DistributionSumLhs{false, r},
                   CE::rat(Rational(-(r * r - 1), r * r)) * z3,
                   "Lewin, Eq. (6.51)"});

  // Special values of Cl3.
  reg.push_back({"cl3-special-0", ClausenComboLhs{3, {{0, 1}}, {1}},
                 special_value_cl3({0, 1}), "zeta reflection values"});
  reg.push_back({"cl3-special-pi2", ClausenComboLhs{3, {{1, 2}}, {1}},
                 special_value_cl3({1, 2}), "zeta reflection values"});
  reg.push_back({"cl3-special-pi", ClausenComboLhs{3, {{1, 1}}, {1}},
                 special_value_cl3({1, 1}), "zeta reflection values"});

  // Direct sum vs closed form at every catalog angle, all four kinds.
  for (const auto& entry : angle_catalog()) {
    for (const ThetaPoint& pt : {entry.plus_branch, entry.minus_branch}) {
      for (SeriesKind kind : {SeriesKind::S1, SeriesKind::S2, SeriesKind::S3,
                              SeriesKind::F}) {
        std::string kn = series_kind_name(kind);
        for (auto& c : kn) c = static_cast<char>(std::tolower(c));
        reg.push_back({"dk-" + kn + "-" + detail::angle_tag(pt.theta),
                       SeriesClosedFormGapLhs{kind, pt}, CE::rat(0),
                       "Davydychev-Kalmykov closed forms"});
      }
    }
  }

  // The combined F = S3 - S2 + S1/2 decomposition.
  reg.push_back({"comb-decomposition",
                 CombinedResidualLhs{ThetaPoint{{1, 3}, std::nullopt}},
                 CE::rat(0), "harmonic-number recombination"});

  return reg;
}

inline std::optional<IdentitySpec> find_identity(const std::string& id) {
  for (auto& s : builtin_registry())
    if (s.id == id) return s;
  return std::nullopt;
}

}  // namespace apery
