#pragma once

// ConstExpr: exact symbolic constants over rationals, pi, zeta(3), and logs
// of quadratic surds.  Every closed-form right-hand side in the identity
// registry is one of these trees.
//
// JSON encoding (nested arrays, numbers as decimal strings):
//   ["rat","41/25"]  ["pi"]  ["zeta3"]
//   ["log",{"a":"1/2","b":"1/2","d":5}]
//   ["+",e1,e2,...]  ["*",e1,e2,...]  ["^",e,n]

#include <nlohmann/json.hpp>

#include <utility>
#include <vector>

#include "apery/types.hpp"
#include "apery/zeta.hpp"

namespace apery {

class ConstExpr {
 public:
  enum class Kind { Rat, Pi, Zeta3, Log, Sum, Product, Power };

  static ConstExpr rat(Rational r) {
    ConstExpr e(Kind::Rat);
    e.rat_ = std::move(r);
    return e;
  }
  static ConstExpr rat(long num, long den = 1) { return rat(Rational(num, den)); }
  static ConstExpr pi() { return ConstExpr(Kind::Pi); }
  static ConstExpr zeta3() { return ConstExpr(Kind::Zeta3); }
  static ConstExpr log(QuadraticSurd s) {
    ConstExpr e(Kind::Log);
    e.log_arg_ = std::move(s);
    return e;
  }
  static ConstExpr sum(std::vector<ConstExpr> terms) {
    ConstExpr e(Kind::Sum);
    e.kids_ = std::move(terms);
    return e;
  }
  static ConstExpr product(std::vector<ConstExpr> factors) {
    ConstExpr e(Kind::Product);
    e.kids_ = std::move(factors);
    return e;
  }
  static ConstExpr power(ConstExpr base, int exponent) {
    ConstExpr e(Kind::Power);
    e.kids_.push_back(std::move(base));
    e.exponent_ = exponent;
    return e;
  }

  Kind kind() const { return kind_; }

  BigReal eval(const PrecisionContext& ctx) const {
    ScopedPrecision scope(ctx);
    switch (kind_) {
      case Kind::Rat:
        return to_real(rat_, ctx);
      case Kind::Pi:
        return const_pi(ctx);
      case Kind::Zeta3:
        return ::apery::zeta3(ctx);
      case Kind::Log: {
        BigReal arg = log_arg_.eval(ctx);
        if (arg <= 0) throw DomainError("ConstExpr: log of nonpositive value");
        return boost::multiprecision::log(arg);
      }
      case Kind::Sum: {
        BigReal s = make_real(ctx);
        for (const auto& k : kids_) s += k.eval(ctx);
        return s;
      }
      case Kind::Product: {
        BigReal p = make_real(ctx, 1);
        for (const auto& k : kids_) p *= k.eval(ctx);
        return p;
      }
      case Kind::Power:
        return pow(kids_[0].eval(ctx), exponent_);
    }
    throw DomainError("ConstExpr: bad kind");
  }

  nlohmann::ordered_json to_json() const {
    using json = nlohmann::ordered_json;
    switch (kind_) {
      case Kind::Rat:
        return json::array({"rat", rat_.str()});
      case Kind::Pi:
        return json::array({"pi"});
      case Kind::Zeta3:
        return json::array({"zeta3"});
      case Kind::Log: {
        json s;
        s["a"] = log_arg_.a.str();
        s["b"] = log_arg_.b.str();
        s["d"] = log_arg_.d;
        return json::array({"log", s});
      }
      case Kind::Sum:
      case Kind::Product: {
        json arr = json::array({kind_ == Kind::Sum ? "+" : "*"});
        for (const auto& k : kids_) arr.push_back(k.to_json());
        return arr;
      }
      case Kind::Power:
        return json::array({"^", kids_[0].to_json(), exponent_});
    }
    throw DomainError("ConstExpr: bad kind");
  }

  static ConstExpr from_json(const nlohmann::ordered_json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string())
      throw DomainError("ConstExpr: malformed expression node");
    const std::string tag = j[0].get<std::string>();
    if (tag == "rat") return rat(Rational(j.at(1).get<std::string>()));
    if (tag == "pi") return pi();
    if (tag == "zeta3") return zeta3();
    if (tag == "log") {
      const auto& s = j.at(1);
      QuadraticSurd surd{Rational(s.at("a").get<std::string>()),
                         Rational(s.at("b").get<std::string>()),
                         s.at("d").get<long>()};
      return log(surd);
    }
    if (tag == "+" || tag == "*") {
      std::vector<ConstExpr> kids;
      for (std::size_t i = 1; i < j.size(); ++i) kids.push_back(from_json(j[i]));
      return tag == "+" ? sum(std::move(kids)) : product(std::move(kids));
    }
    if (tag == "^") return power(from_json(j.at(1)), j.at(2).get<int>());
    throw DomainError("ConstExpr: unknown tag '" + tag + "'");
  }

 private:
  explicit ConstExpr(Kind k) : kind_(k) {}

  Kind kind_;
  Rational rat_ = 0;
  QuadraticSurd log_arg_;
  std::vector<ConstExpr> kids_;
  int exponent_ = 1;
};

inline ConstExpr operator+(ConstExpr a, ConstExpr b) {
  return ConstExpr::sum({std::move(a), std::move(b)});
}
inline ConstExpr operator*(ConstExpr a, ConstExpr b) {
  return ConstExpr::product({std::move(a), std::move(b)});
}

}  // namespace apery
