#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symsens {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact fraction in lowest terms, "p/q" (or "p" when q = 1).
std::string to_fraction_string(BigRational const& r);

/// Decimal rounded half-up to `places` digits after the point. r >= 0.
std::string to_decimal_string(BigRational const& r, unsigned places = 12);

BigInt parse_bigint(std::string const& text);

} // namespace symsens
