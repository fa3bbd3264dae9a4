#pragma once

#include <symsens/bignum.hpp>

#include <cstddef>
#include <vector>

namespace symsens {

/**
 * Rational generating function numerator(z) / denominator(z) with integer
 * coefficients, lowest degree first.
 */
class RationalGF {
public:
  /// Throws SingularError if the denominator constant term is zero.
  RationalGF(std::vector<BigInt> numerator, std::vector<BigInt> denominator);

  std::vector<BigInt> const& numerator() const noexcept { return num_; }
  std::vector<BigInt> const& denominator() const noexcept { return den_; }

  friend RationalGF operator+(RationalGF const& a, RationalGF const& b);
  friend RationalGF operator-(RationalGF const& a, RationalGF const& b);

  /// True if the recurrence-based expansion matches long division on the
  /// first `terms` coefficients.
  bool self_check(std::size_t terms = 32) const;

private:
  std::vector<BigInt> num_;
  std::vector<BigInt> den_;
};

/// First k power-series coefficients via the linear recurrence
/// q_0 c_m = p_m - sum_{j>=1} q_j c_{m-j}. Throws DomainError if k = 0 or
/// a coefficient is not an integer.
std::vector<BigInt> expand_series(RationalGF const& gf, std::size_t k);

/// Same coefficients by truncated polynomial long division.
std::vector<BigInt> long_division_series(RationalGF const& gf, std::size_t k);

/// 4z / (1 - 2z): all symmetric functions by number of variables.
RationalGF total_gf();
/// 2z / (1 - z - z^2): symmetric functions whose composition has no part 1.
RationalGF no_ones_gf();
/// total_gf() - no_ones_gf(): symmetric functions with s(f) = n.
RationalGF max_sensitivity_gf();

} // namespace symsens
