#pragma once

// Exact counts of symmetric Boolean functions by sensitivity class.
//
// A symmetric function of n variables is a compact table of n+1 bits, and
// its runs form a composition of n+1; each composition arises from exactly
// two tables (pick the first value). By the s = n characterization, the
// functions with maximum sensitivity are those whose composition has a
// part equal to 1, so a_n = T_n - N_n with T_n = 2^(n+1) and N_n counting
// the tables whose runs all have length >= 2.

#include <symsens/bignum.hpp>

#include <vector>

namespace symsens {

/// 2^(n+1). Throws DomainError for n = 0.
BigInt total_count(unsigned n);

/// N_n: N_1 = N_2 = 2, N_n = N_{n-1} + N_{n-2}. Throws DomainError for n = 0.
BigInt no_ones_count(unsigned n);

/// a_n = 2^(n+1) - N_n. Throws DomainError for n = 0.
BigInt max_sensitivity_count(unsigned n);

/// a_n / 2^(n+1) in lowest terms. Throws DomainError for n = 0.
BigRational asymptotic_ratio(unsigned n);

/// T, N and a for n = 1..max_n; index i holds n = i+1.
struct CountSeries {
  unsigned max_n = 0;
  std::vector<BigInt> total;
  std::vector<BigInt> no_ones;
  std::vector<BigInt> max_sens;

  BigRational ratio(unsigned n) const;
};

/// Linear-time construction of all three sequences up to max_n >= 1.
CountSeries count_series(unsigned max_n);

} // namespace symsens
