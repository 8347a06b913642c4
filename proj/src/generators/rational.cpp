#include "collapse_lab/rational.hpp"

#include <algorithm>
#include <cctype>

#include "collapse_lab/errors.hpp"

namespace collapse_lab {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw DomainError("malformed rational '" + std::string(whole) + "'");
  return BigInt(std::string(text));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), BigInt(1));
  auto den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) throw DomainError("rational '" + std::string(text) + "' needs a positive denominator");
  return Rational(parse_integer(text.substr(0, slash), text), den);
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

BigInt Rational::floor() const { return floor_div(numerator(), denominator()); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.value_ == 0) throw DomainError("division by zero rational");
  return Rational(a.value_ / b.value_);
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

}  // namespace collapse_lab
