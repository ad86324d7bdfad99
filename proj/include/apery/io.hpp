#pragma once

// JSON schemas for reports and user identity files, plus the parallel
// batch verifier.  All numerics are decimal strings; key order is fixed so
// emitted JSON is byte-stable.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "apery/identities.hpp"

namespace apery {

inline RationalAngle parse_angle(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return RationalAngle(std::stol(s), 1);
  return RationalAngle(std::stol(s.substr(0, slash)),
                       std::stol(s.substr(slash + 1)));
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["target_digits"] = r.target_digits;
  j["lhs_value"] = to_decimal_string(r.lhs_value, r.target_digits);
  j["rhs_value"] = to_decimal_string(r.rhs_value, r.target_digits);
  j["abs_gap"] = to_decimal_string(r.abs_gap, 3);
  j["certified_error"] = to_decimal_string(r.certified_error, 3);
  j["matched_digits"] = r.matched_digits;
  j["terms_used"] = r.terms_used;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["verdict"] = verdict_name(r.verdict);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.identity_id << ": " << verdict_name(r.verdict)
     << "  (gap " << to_decimal_string(r.abs_gap, 3)
     << ", budget " << to_decimal_string(r.certified_error, 3)
     << ", " << r.matched_digits << " digits";
  if (r.terms_used > 0) os << ", " << r.terms_used << " terms";
  os << ")";
  if (!r.note.empty()) os << "  [" << r.note << "]";
  return os.str();
}

// --- identity file format ---------------------------------------------------
//
// {"id": "...", "lhs": {...}, "rhs": [...], "source": "..."}
// lhs is a tagged union:
//   {"type":"lucas_sum","A":3,"B":1}
//   {"type":"series_at_theta","kind":"F","theta":"1/3"}
//   {"type":"clausen_combo","order":3,"angles":["1/4","3/4"],"coeffs":["1","1"]}
//   {"type":"distribution_sum","parity":"odd","r":4}
//   {"type":"series_closed_form_gap","kind":"S1","theta":"1/6"}
//   {"type":"combined_residual","theta":"1/3"}
// theta strings are "p/q", meaning (p/q)*pi.

inline LhsSpec lhs_from_json(const nlohmann::ordered_json& j) {
  const std::string type = j.at("type").get<std::string>();
  auto theta_point = [&]() {
    return ThetaPoint{parse_angle(j.at("theta").get<std::string>()),
                      std::nullopt};
  };
  auto kind = [&]() {
    auto k = series_kind_from_name(j.at("kind").get<std::string>());
    if (!k) throw DomainError("unknown series kind");
    return *k;
  };
  if (type == "lucas_sum")
    return LucasSumLhs{{j.at("A").get<long>(), j.at("B").get<long>()}};
  if (type == "series_at_theta") return SeriesAtThetaLhs{kind(), theta_point()};
  if (type == "clausen_combo") {
    ClausenComboLhs l;
    l.order = j.at("order").get<int>();
    if (l.order != 2 && l.order != 3)
      throw DomainError("clausen_combo: order must be 2 or 3");
    for (const auto& a : j.at("angles"))
      l.angles.push_back(parse_angle(a.get<std::string>()));
    for (const auto& c : j.at("coeffs"))
      l.coeffs.emplace_back(c.get<std::string>());
    return l;
  }
  if (type == "distribution_sum")
    return DistributionSumLhs{j.at("parity").get<std::string>() == "odd",
                              j.at("r").get<long>()};
  if (type == "series_closed_form_gap")
    return SeriesClosedFormGapLhs{kind(), theta_point()};
  if (type == "combined_residual") return CombinedResidualLhs{theta_point()};
  throw DomainError("unknown lhs type '" + type + "'");
}

inline nlohmann::ordered_json lhs_to_json(const LhsSpec& lhs) {
  using json = nlohmann::ordered_json;
  json j;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, LucasSumLhs>) {
          j["type"] = "lucas_sum";
          j["A"] = l.params.A;
          j["B"] = l.params.B;
        } else if constexpr (std::is_same_v<T, SeriesAtThetaLhs>) {
          j["type"] = "series_at_theta";
          j["kind"] = series_kind_name(l.kind);
          j["theta"] = l.point.theta.str();
        } else if constexpr (std::is_same_v<T, ClausenComboLhs>) {
          j["type"] = "clausen_combo";
          j["order"] = l.order;
          json angles = json::array(), coeffs = json::array();
          for (const auto& a : l.angles) angles.push_back(a.str());
          for (const auto& c : l.coeffs) coeffs.push_back(c.str());
          j["angles"] = angles;
          j["coeffs"] = coeffs;
        } else if constexpr (std::is_same_v<T, DistributionSumLhs>) {
          j["type"] = "distribution_sum";
          j["parity"] = l.odd ? "odd" : "even";
          j["r"] = l.r;
        } else if constexpr (std::is_same_v<T, SeriesClosedFormGapLhs>) {
          j["type"] = "series_closed_form_gap";
          j["kind"] = series_kind_name(l.kind);
          j["theta"] = l.point.theta.str();
        } else if constexpr (std::is_same_v<T, CombinedResidualLhs>) {
          j["type"] = "combined_residual";
          j["theta"] = l.point.theta.str();
        }
      },
      lhs);
  return j;
}

inline IdentitySpec identity_from_json(const nlohmann::ordered_json& j) {
  return IdentitySpec{j.at("id").get<std::string>(), lhs_from_json(j.at("lhs")),
                      ConstExpr::from_json(j.at("rhs")),
                      j.value("source", std::string{})};
}

inline nlohmann::ordered_json identity_to_json(const IdentitySpec& s) {
  nlohmann::ordered_json j;
  j["id"] = s.id;
  j["lhs"] = lhs_to_json(s.lhs);
  j["rhs"] = s.rhs.to_json();
  j["source"] = s.source;
  return j;
}

// Verifies a batch; entries are processed in sorted-id order and the result
// vector preserves that order regardless of thread scheduling.
inline std::vector<VerificationReport> verify_batch(
    std::vector<IdentitySpec> specs, const PrecisionContext& ctx,
    long max_terms = kDefaultMaxTerms, unsigned jobs = 1) {
  std::sort(specs.begin(), specs.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::vector<VerificationReport> reports(specs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < specs.size(); ++i)
      reports[i] = verify(specs[i], ctx, max_terms);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < specs.size();
         i = next.fetch_add(1))
      reports[i] = verify(specs[i], ctx, max_terms);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

inline std::vector<VerificationReport> verify_all(
    const PrecisionContext& ctx, long max_terms = kDefaultMaxTerms,
    unsigned jobs = 1) {
  return verify_batch(builtin_registry(), ctx, max_terms, jobs);
}

}  // namespace apery
