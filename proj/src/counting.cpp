#include <symsens/counting.hpp>

#include <symsens/errors.hpp>

#include <string>

namespace symsens {

namespace {

void require_positive(unsigned n, char const* what) {
  if (n == 0)
    throw DomainError(std::string(what) + ": n must be >= 1 (the series starts at z^1)");
}

} // namespace

BigInt total_count(unsigned n) {
  require_positive(n, "total_count");
  return BigInt(1) << (n + 1);
}

// Count tables whose runs all have length >= 2. Building compositions of
// n+1 from those of n (either grow the last part or append a 1) doubles the
// count, appending 2 to compositions of n-1 covers the ones ending in 2, and
// the ones that now end in a lone 1 must be dropped again:
//   N_n = 2 N_{n-1} + N_{n-2} - N_{n-1} = N_{n-1} + N_{n-2}.
// The base N_1 = 2 is the pair of constant 1-variable functions
// (composition "2"); N_2 = 2 likewise (composition "3" only).
BigInt no_ones_count(unsigned n) {
  require_positive(n, "no_ones_count");
  BigInt prev = 2;
  BigInt cur = 2;
  for (unsigned m = 3; m <= n; ++m) {
    BigInt next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt max_sensitivity_count(unsigned n) {
  require_positive(n, "max_sensitivity_count");
  return total_count(n) - no_ones_count(n);
}

BigRational asymptotic_ratio(unsigned n) {
  require_positive(n, "asymptotic_ratio");
  return BigRational(max_sensitivity_count(n), total_count(n));
}

BigRational CountSeries::ratio(unsigned n) const {
  if (n == 0 || n > max_n)
    throw DomainError("ratio: n=" + std::to_string(n) + " outside 1.." + std::to_string(max_n));
  return BigRational(max_sens[n - 1], total[n - 1]);
}

CountSeries count_series(unsigned max_n) {
  require_positive(max_n, "count_series");
  CountSeries s;
  s.max_n = max_n;
  s.total.reserve(max_n);
  s.no_ones.reserve(max_n);
  s.max_sens.reserve(max_n);
  BigInt power = 4;
  for (unsigned n = 1; n <= max_n; ++n) {
    s.total.push_back(power);
    if (n <= 2)
      s.no_ones.emplace_back(2);
    else
      s.no_ones.push_back(s.no_ones[n - 2] + s.no_ones[n - 3]);
    s.max_sens.push_back(power - s.no_ones.back());
    power <<= 1;
  }
  return s;
}

} // namespace symsens
