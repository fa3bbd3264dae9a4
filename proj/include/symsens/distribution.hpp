#pragma once

// Exhaustive census over all 2^(n+1) symmetric functions of n variables.
//
// Compact tables are enumerated as integer codes 0 .. 2^(n+1)-1 with bit k
// of the code equal to v_k. The parallel scan splits this range into
// contiguous chunks, tallies a private histogram per thread, and sums them.

#include <symsens/bignum.hpp>
#include <symsens/core.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symsens {

inline constexpr unsigned kDefaultCensusCap = 24;
/// Row-by-row listings (2^(n+1) rows) are limited to n <= 6.
inline constexpr unsigned kListingCap = 6;

struct SensitivityHistogram {
  unsigned n = 0;
  /// counts[s] for s = 0..n
  std::vector<BigInt> counts;
  BigInt total;

  BigInt const& count(unsigned s) const { return counts.at(s); }

  friend bool operator==(SensitivityHistogram const&, SensitivityHistogram const&) = default;
};

struct CensusOptions {
  unsigned cap = kDefaultCensusCap;
  /// 0 = OpenMP default
  int threads = 0;
};

/// Raw per-sensitivity tallies for codes in [begin, end). Building block
/// for both scans; any partition of the code range sums to the same result.
std::vector<std::uint64_t> tally_range(unsigned n, std::uint64_t begin, std::uint64_t end);

SensitivityHistogram make_histogram(unsigned n, std::vector<std::uint64_t> const& tallies);

/// Throws SizeError (with a cost estimate) when n > options.cap, and
/// DomainError for n = 0.
SensitivityHistogram census(unsigned n, CensusOptions const& options = {});

/// Single-threaded reference scan.
SensitivityHistogram census_serial(unsigned n, unsigned cap = kDefaultCensusCap);

struct CriterionReport {
  bool holds = true;
  /// number of tables with s(f) = n
  BigInt max_sensitivity_count;
  std::optional<CompactTruthTable> counterexample;
};

/// Checks (min composition part = 1) <=> (s(f) = n) for every table. The
/// composition side is a run-length scan, independent of the sensitivity
/// formula.
CriterionReport verify_max_sensitivity_criterion(unsigned n, CensusOptions const& options = {});

struct TuranReport {
  bool holds = true;
  /// ceil((n+1)/2)
  unsigned bound = 0;
  /// smallest s(f) over non-trivial functions
  unsigned min_nontrivial = 0;
  /// lowest-code non-trivial table achieving min_nontrivial
  std::optional<CompactTruthTable> witness;
};

TuranReport verify_turan(unsigned n, CensusOptions const& options = {});

struct TableRow {
  CompactTruthTable table;
  Composition composition;
  unsigned sensitivity = 0;
};

/// All 2^(n+1) tables, from all-ones down to all-zeros reading the printed
/// bit string (v_0 first) as a binary number. Throws SizeError for n > kListingCap.
std::vector<TableRow> table_rows(unsigned n);

/// Human-readable cost estimate for a census of size n.
std::string census_cost(unsigned n);

} // namespace symsens
