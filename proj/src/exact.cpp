#include "ohbox/exact.hpp"

#include <boost/integer/common_factor.hpp>
#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace ohbox {

namespace {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

std::string pi_power_string(int pi_exponent) {
  if (pi_exponent == 0) return "";
  if (pi_exponent == 1) return "pi";
  return "pi^" + std::to_string(pi_exponent);
}

// "c*pi^k" with a bare sign for unit coefficients.
std::string term_string(const Integer& c, int pi_exponent) {
  const std::string pi = pi_power_string(pi_exponent);
  if (pi.empty()) return c.str();
  if (c == 1) return pi;
  if (c == -1) return "-" + pi;
  return c.str() + "*" + pi;
}

}  // namespace

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

PiPoly::PiPoly(const Rational& value, int pi2_power) {
  if (value != 0) terms_.emplace(pi2_power, value);
}

Rational PiPoly::coefficient(int pi2_power) const {
  const auto it = terms_.find(pi2_power);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> PiPoly::homogeneous_power() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

double PiPoly::to_double() const {
  const long double pi2 = boost::math::constants::pi<long double>() *
                          boost::math::constants::pi<long double>();
  long double sum = 0.0L;
  for (const auto& [power, c] : terms_) {
    sum += c.convert_to<long double>() * std::pow(pi2, static_cast<long double>(power));
  }
  return static_cast<double>(sum);
}

std::string PiPoly::to_string() const {
  if (terms_.empty()) return "0";
  Integer lcm = 1;
  for (const auto& [power, c] : terms_) {
    lcm = boost::integer::lcm(lcm, Integer(boost::multiprecision::denominator(c)));
  }
  const int lowest = std::min(terms_.begin()->first, 0);

  // Numerator in descending powers.
  std::string numerator;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational scaled = it->second * Rational(lcm);
    const Integer c = boost::multiprecision::numerator(scaled);
    std::string t = term_string(c, 2 * (it->first - lowest));
    if (!numerator.empty() && t.front() != '-') numerator += "+";
    numerator += t;
  }

  std::string denominator;
  if (lowest < 0) {
    denominator = term_string(lcm, -2 * lowest);
  } else if (lcm != 1) {
    denominator = lcm.str();
  }
  if (denominator.empty()) return numerator;

  const bool compound_num = terms_.size() > 1;
  const bool compound_den = denominator.find('*') != std::string::npos;
  std::string out = compound_num ? "(" + numerator + ")" : numerator;
  out += "/";
  out += compound_den ? "(" + denominator + ")" : denominator;
  return out;
}

PiPoly& PiPoly::operator+=(const PiPoly& other) {
  for (const auto& [power, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& other) { return *this += -other; }

PiPoly& PiPoly::operator*=(const PiPoly& other) {
  std::map<int, Rational> product;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : other.terms_) product[pa + pb] += ca * cb;
  }
  std::erase_if(product, [](const auto& kv) { return kv.second == 0; });
  terms_ = std::move(product);
  return *this;
}

PiPoly& PiPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [power, c] : terms_) c *= scale;
  return *this;
}

PiPoly& PiPoly::operator/=(const Rational& scale) { return *this *= Rational(1) / scale; }

std::ostream& operator<<(std::ostream& os, const PiPoly& p) { return os << p.to_string(); }

}  // namespace ohbox
