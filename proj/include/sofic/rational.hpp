#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace sofic {

/// Exact ratio used for every tolerance and distance. All accept/reject
/// decisions compare these values; no floating point is involved.
using Rational = boost::rational<std::int64_t>;

/// Formats as "p/q" (always with a denominator, e.g. "1/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p". Throws Error(parse_error).
Rational parse_rational(std::string_view text);

inline Rational ratio(std::size_t num, std::size_t den) {
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace sofic
