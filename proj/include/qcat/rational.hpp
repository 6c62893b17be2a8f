#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qcat {

// Exact rational arithmetic for quantale carriers. Backed by
// Boost.Multiprecision so grid probes like (31/32)^64 stay exact; values
// are kept canonical (coprime, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p" or "p/q" (optional leading '-', q > 0). Anything else,
/// including decimals, is rejected.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace qcat
