#include <symsens/bignum.hpp>

#include <symsens/errors.hpp>

#include <algorithm>
#include <cctype>

namespace symsens {

std::string to_fraction_string(BigRational const& r) {
  auto const num = boost::multiprecision::numerator(r);
  auto const den = boost::multiprecision::denominator(r);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(BigRational const& r, unsigned places) {
  BigInt const num = boost::multiprecision::numerator(r);
  BigInt const den = boost::multiprecision::denominator(r);
  if (num < 0)
    throw DomainError("to_decimal_string expects a non-negative value");
  BigInt const scale = boost::multiprecision::pow(BigInt(10), places);
  BigInt quotient = (num * scale) / den;
  BigInt const remainder = (num * scale) % den;
  if (2 * remainder >= den)
    ++quotient;
  std::string out = BigInt(quotient / scale).str();
  if (places > 0) {
    std::string frac = BigInt(quotient % scale).str();
    frac.insert(frac.begin(), places - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

BigInt parse_bigint(std::string const& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw FormatError("expected a non-negative integer, got \"" + text + "\"");
  return BigInt(text);
}

} // namespace symsens
