#include <symsens/series.hpp>

#include <symsens/errors.hpp>

#include <algorithm>

namespace symsens {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
  if (p.empty())
    p.emplace_back(0);
}

Poly multiply(Poly const& a, Poly const& b) {
  Poly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly add(Poly const& a, Poly const& b, int sign) {
  Poly out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] += sign * b[i];
  trim(out);
  return out;
}

BigInt exact_quotient(BigInt const& value, BigInt const& divisor, std::size_t index) {
  if (value % divisor != 0)
    throw DomainError("coefficient " + std::to_string(index) +
                      " is not an integer (denominator constant term " + divisor.str() + ")");
  return value / divisor;
}

RationalGF combine(RationalGF const& a, RationalGF const& b, int sign) {
  return RationalGF(add(multiply(a.numerator(), b.denominator()),
                        multiply(b.numerator(), a.denominator()), sign),
                    multiply(a.denominator(), b.denominator()));
}

} // namespace

RationalGF::RationalGF(std::vector<BigInt> numerator, std::vector<BigInt> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  trim(num_);
  trim(den_);
  if (den_.front() == 0)
    throw SingularError("denominator has zero constant term; no power series at z = 0");
}

RationalGF operator+(RationalGF const& a, RationalGF const& b) { return combine(a, b, 1); }
RationalGF operator-(RationalGF const& a, RationalGF const& b) { return combine(a, b, -1); }

bool RationalGF::self_check(std::size_t terms) const {
  try {
    return expand_series(*this, terms) == long_division_series(*this, terms);
  } catch (DomainError const&) {
    return false;
  }
}

std::vector<BigInt> expand_series(RationalGF const& gf, std::size_t k) {
  if (k == 0)
    throw DomainError("expand_series: term count must be >= 1");
  auto const& p = gf.numerator();
  auto const& q = gf.denominator();
  std::vector<BigInt> c;
  c.reserve(k);
  for (std::size_t m = 0; m < k; ++m) {
    BigInt acc = m < p.size() ? p[m] : BigInt(0);
    for (std::size_t j = 1; j < q.size() && j <= m; ++j)
      acc -= q[j] * c[m - j];
    c.push_back(exact_quotient(acc, q[0], m));
  }
  return c;
}

std::vector<BigInt> long_division_series(RationalGF const& gf, std::size_t k) {
  if (k == 0)
    throw DomainError("long_division_series: term count must be >= 1");
  auto const& q = gf.denominator();
  Poly remainder(k, BigInt(0));
  std::copy_n(gf.numerator().begin(), std::min(k, gf.numerator().size()), remainder.begin());
  std::vector<BigInt> c(k);
  for (std::size_t m = 0; m < k; ++m) {
    c[m] = exact_quotient(remainder[m], q[0], m);
    for (std::size_t j = 0; j < q.size() && m + j < k; ++j)
      remainder[m + j] -= c[m] * q[j];
  }
  return c;
}

RationalGF total_gf() { return RationalGF({0, 4}, {1, -2}); }

RationalGF no_ones_gf() { return RationalGF({0, 2}, {1, -1, -1}); }

RationalGF max_sensitivity_gf() { return total_gf() - no_ones_gf(); }

} // namespace symsens
