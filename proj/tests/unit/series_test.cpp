#include <symsens/counting.hpp>
#include <symsens/errors.hpp>
#include <symsens/series.hpp>

#include <gtest/gtest.h>

using namespace symsens;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

} // namespace

TEST(ExpandSeries, Examples) {
  EXPECT_EQ(expand_series(total_gf(), 4), ints({0, 4, 8, 16}));
  EXPECT_EQ(expand_series(no_ones_gf(), 6), ints({0, 2, 2, 4, 6, 10}));
  EXPECT_EQ(expand_series(RationalGF(ints({1}), ints({1, -1})), 3), ints({1, 1, 1}));
}

TEST(ExpandSeries, Errors) {
  EXPECT_THROW(RationalGF(ints({1}), ints({0, 1})), SingularError);
  EXPECT_THROW(RationalGF(ints({1}), ints({})), SingularError);
  EXPECT_THROW(expand_series(total_gf(), 0), DomainError);
  EXPECT_THROW(expand_series(RationalGF(ints({1}), ints({2, 1})), 2), DomainError);
}

TEST(ExpandSeries, NegativeUnitConstant) {
  // 1/(-1 + z) = -(1 + z + z^2 + ...)
  EXPECT_EQ(expand_series(RationalGF(ints({1}), ints({-1, 1})), 4), ints({-1, -1, -1, -1}));
}

TEST(RationalGF, ArithmeticAndSelfCheck) {
  auto const a = max_sensitivity_gf();
  EXPECT_TRUE(a.self_check());
  EXPECT_TRUE(total_gf().self_check());
  EXPECT_TRUE(no_ones_gf().self_check(64));
  EXPECT_FALSE(RationalGF(ints({1}), ints({3, 1})).self_check());

  auto const sum = total_gf() + no_ones_gf();
  auto const t = expand_series(total_gf(), 40);
  auto const nn = expand_series(no_ones_gf(), 40);
  auto const s = expand_series(sum, 40);
  for (std::size_t i = 0; i < 40; ++i)
    EXPECT_EQ(s[i], t[i] + nn[i]);
  EXPECT_EQ(expand_series(sum, 40), long_division_series(sum, 40));
}

TEST(RationalGF, MaxSensitivitySeriesMatchesCounts) {
  auto const coeffs = expand_series(max_sensitivity_gf(), 65);
  EXPECT_EQ(coeffs[0], 0);
  for (unsigned n = 1; n <= 64; ++n)
    EXPECT_EQ(coeffs[n], max_sensitivity_count(n)) << n;
  auto const no_ones = expand_series(no_ones_gf(), 65);
  for (unsigned n = 1; n <= 64; ++n)
    EXPECT_EQ(no_ones[n], no_ones_count(n)) << n;
}
