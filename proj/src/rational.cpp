#include "qcat/rational.hpp"

#include <cctype>

namespace qcat {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  if (i == text.size()) return false;
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(num);
  }
  BigInt den;
  if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
  if (den <= 0) return std::nullopt;
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

}  // namespace qcat
