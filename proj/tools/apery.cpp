// Command-line interface: verify, eval, discover, list.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "apery/apery.hpp"

namespace {

constexpr int kExitFailed = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitUnknownId = 64;
constexpr int kExitDomain = 65;

int default_digits() {
  if (const char* env = std::getenv("APERY_DIGITS")) {
    int d = std::atoi(env);
    if (d >= 10) return d;
  }
  return 50;
}

apery::QuadraticSurd parse_surd(const std::string& s) {
  using apery::QuadraticSurd;
  using apery::Rational;
  if (s == "phi") return QuadraticSurd::golden_ratio();
  auto sq = s.find("sqrt");
  if (sq == std::string::npos) return QuadraticSurd::rational(Rational(s));
  long d = std::stol(s.substr(sq + 4));
  Rational a = 0, b = 1;
  if (sq > 0) {
    char sign = s[sq - 1];
    if (sign != '+' && sign != '-')
      throw apery::DomainError("bad surd '" + s + "'");
    if (sq > 1) a = Rational(s.substr(0, sq - 1));
    if (sign == '-') b = -1;
  }
  return QuadraticSurd{a, b, d};
}

apery::ConstExpr parse_basis_token(const std::string& tok) {
  using CE = apery::ConstExpr;
  if (tok == "zeta3") return CE::zeta3();
  if (tok == "pi") return CE::pi();
  if (tok == "pi2") return CE::power(CE::pi(), 2);
  if (tok.rfind("log:", 0) == 0) return CE::log(parse_surd(tok.substr(4)));
  if (tok.rfind("pi2log:", 0) == 0)
    return CE::power(CE::pi(), 2) * CE::log(parse_surd(tok.substr(7)));
  throw apery::DomainError("unknown basis token '" + tok + "'");
}

std::vector<apery::ConstExpr> parse_basis(const std::string& spec) {
  std::vector<apery::ConstExpr> basis;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string tok = spec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) basis.push_back(parse_basis_token(tok));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return basis;
}

void print_reports(const std::vector<apery::VerificationReport>& reports,
                   const std::string& output) {
  if (output == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(apery::report_to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << apery::report_to_text(r) << "\n";
  }
}

int exit_code_for(const std::vector<apery::VerificationReport>& reports) {
  bool failed = false, inconclusive = false;
  for (const auto& r : reports) {
    failed = failed || r.verdict == apery::Verdict::Failed;
    inconclusive = inconclusive || r.verdict == apery::Verdict::Inconclusive;
  }
  if (failed) return kExitFailed;
  if (inconclusive) return kExitInconclusive;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and discovery engine for central-binomial "
               "series identities"};
  app.require_subcommand(1);
  app.fallthrough();

  int digits = default_digits();
  long max_terms = apery::kDefaultMaxTerms;
  unsigned jobs = 1;
  std::string output = "text";

  app.add_option("--digits", digits, "target decimal digits")
      ->check(CLI::Range(10, 100000));
  app.add_option("--max-terms", max_terms, "series term budget")
      ->check(CLI::Range(1000L, 1000000000L));
  app.add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "parallel verifications");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verify identities");
  std::string selector;
  std::string identities_file;
  verify_cmd->add_option("selector", selector, "identity id or 'all'")
      ->required();
  verify_cmd->add_option("--identities", identities_file,
                         "extra identities (JSON file)");

  // list
  auto* list_cmd = app.add_subcommand("list", "list the identity registry");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantity");
  eval_cmd->require_subcommand(1);
  auto* eval_clausen = eval_cmd->add_subcommand("clausen", "Clausen function");
  int cl_order = 3;
  std::string theta_str;
  eval_clausen->add_option("--order", cl_order, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  eval_clausen->add_option("--theta", theta_str, "angle p/q (times pi)")
      ->required();
  auto* eval_series = eval_cmd->add_subcommand("series", "direct series sum");
  std::string kind_str, u_str;
  eval_series->add_option("--kind", kind_str, "S1, S2, S3 or F")->required();
  eval_series->add_option("--u", u_str, "argument in [0,4)")->required();
  auto* eval_const_cmd =
      eval_cmd->add_subcommand("const", "evaluate a ConstExpr file");
  std::string expr_file;
  eval_const_cmd->add_option("--file", expr_file, "JSON expression file")
      ->required();

  // discover
  auto* discover_cmd =
      app.add_subcommand("discover", "integer-relation search");
  std::string discover_id, basis_spec, value_str;
  int max_coeff_digits = 6;
  discover_cmd->add_option("identity", discover_id, "registry identity id");
  discover_cmd->add_option("--value", value_str,
                           "raw decimal value instead of an identity");
  discover_cmd->add_option("--basis", basis_spec,
                           "comma list: zeta3, pi, pi2, log:<surd>, "
                           "pi2log:<surd>; surds like 2+sqrt3 or phi")
      ->required();
  discover_cmd
      ->add_option("--max-coeff-digits", max_coeff_digits,
                   "coefficient digit budget")
      ->check(CLI::Range(1, 30));

  CLI11_PARSE(app, argc, argv);

  apery::PrecisionContext ctx(digits);

  try {
    if (*verify_cmd) {
      std::vector<apery::IdentitySpec> specs = apery::builtin_registry();
      if (!identities_file.empty()) {
        std::ifstream in(identities_file);
        if (!in) {
          std::cerr << "cannot open " << identities_file << "\n";
          return kExitDomain;
        }
        auto j = nlohmann::ordered_json::parse(in);
        for (const auto& item : j)
          specs.push_back(apery::identity_from_json(item));
      }
      if (selector != "all") {
        std::vector<apery::IdentitySpec> picked;
        for (auto& s : specs)
          if (s.id == selector) picked.push_back(s);
        if (picked.empty()) {
          std::cerr << "unknown identity '" << selector << "'\n";
          return kExitUnknownId;
        }
        specs = std::move(picked);
      }
      auto reports = apery::verify_batch(std::move(specs), ctx, max_terms, jobs);
      print_reports(reports, output);
      return exit_code_for(reports);
    }

    if (*list_cmd) {
      if (output == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : apery::builtin_registry())
          arr.push_back(apery::identity_to_json(s));
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const auto& s : apery::builtin_registry())
          std::cout << s.id << "  [" << s.source << "]\n";
      }
      return 0;
    }

    if (*eval_clausen) {
      apery::RationalAngle theta = apery::parse_angle(theta_str);
      apery::BigReal v = cl_order == 2 ? apery::cl2(theta, ctx)
                                       : apery::cl3(theta, ctx);
      std::cout << apery::to_decimal_string(v, digits) << "\n";
      return 0;
    }
    if (*eval_series) {
      auto kind = apery::series_kind_from_name(kind_str);
      if (!kind) {
        std::cerr << "unknown series kind '" << kind_str << "'\n";
        return kExitDomain;
      }
      apery::ScopedPrecision scope(ctx);
      apery::BigReal u(u_str);
      apery::SumResult r = apery::sum_direct(*kind, u, ctx, max_terms);
      std::cout << apery::to_decimal_string(r.value, digits)
                << "  (certified error "
                << apery::to_decimal_string(r.certified_error(), 3) << ", "
                << r.terms_used << " terms)\n";
      return 0;
    }
    if (*eval_const_cmd) {
      std::ifstream in(expr_file);
      if (!in) {
        std::cerr << "cannot open " << expr_file << "\n";
        return kExitDomain;
      }
      auto expr =
          apery::ConstExpr::from_json(nlohmann::ordered_json::parse(in));
      std::cout << apery::to_decimal_string(apery::eval_const(expr, ctx),
                                            digits)
                << "\n";
      return 0;
    }

    if (*discover_cmd) {
      auto basis = parse_basis(basis_spec);
      apery::RelationResult result;
      if (!value_str.empty()) {
        apery::ScopedPrecision scope(ctx);
        std::vector<apery::BigReal> values{apery::BigReal(value_str)};
        for (const auto& e : basis) values.push_back(e.eval(ctx));
        result = apery::find_relation(values, ctx, max_coeff_digits);
      } else {
        if (discover_id.empty()) {
          std::cerr << "need an identity id or --value\n";
          return kExitDomain;
        }
        if (!apery::find_identity(discover_id)) {
          std::cerr << "unknown identity '" << discover_id << "'\n";
          return kExitUnknownId;
        }
        result = apery::rediscover(discover_id, basis, ctx, max_coeff_digits,
                                   max_terms);
      }
      if (result.coefficients) {
        std::string sep;
        for (const auto& c : *result.coefficients) {
          std::cout << sep << c;
          sep = ", ";
        }
        std::cout << "  (residual "
                  << apery::to_decimal_string(result.residual, 3)
                  << ", confidence " << result.confidence << ")\n";
        return 0;
      }
      std::cout << "no relation found (exclusion bound "
                << apery::to_decimal_string(result.exclusion_bound, 3)
                << ", " << result.iterations << " iterations)\n";
      return 1;
    }
  } catch (const apery::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const apery::InsufficientPrecision& e) {
    std::cerr << "insufficient precision: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
