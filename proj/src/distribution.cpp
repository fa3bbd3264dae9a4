#include <symsens/distribution.hpp>

#include <symsens/errors.hpp>
#include <symsens/kernels.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <utility>

namespace symsens {

namespace {

void check_census_size(unsigned n, unsigned cap) {
  if (n == 0)
    throw DomainError("census: n must be >= 1");
  if (n > kMaxPackedVars)
    throw SizeError("census: n=" + std::to_string(n) + " exceeds the hard limit " +
                    std::to_string(kMaxPackedVars) + "; " + census_cost(n));
  if (n > cap)
    throw SizeError("census: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                    "; " + census_cost(n));
}

std::uint64_t code_count(unsigned n) { return std::uint64_t{1} << (n + 1); }

int thread_count(CensusOptions const& options) {
#ifdef _OPENMP
  return options.threads > 0 ? options.threads : omp_get_max_threads();
#else
  (void)options;
  return 1;
#endif
}

} // namespace

std::string census_cost(unsigned n) {
  std::ostringstream out;
  out << "cost is 2^" << n + 1 << " tables x " << n + 1 << " steps (~" << std::setprecision(3)
      << std::ldexp(static_cast<double>(n + 1), static_cast<int>(n + 1)) << " kernel steps)";
  return out.str();
}

std::vector<std::uint64_t> tally_range(unsigned n, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint64_t> tallies(n + 1, 0);
  for (std::uint64_t code = begin; code < end; ++code)
    ++tallies[kernels::max_sensitivity(code, n)];
  return tallies;
}

SensitivityHistogram make_histogram(unsigned n, std::vector<std::uint64_t> const& tallies) {
  SensitivityHistogram h;
  h.n = n;
  h.counts.reserve(n + 1);
  for (unsigned s = 0; s <= n; ++s) {
    h.counts.emplace_back(s < tallies.size() ? tallies[s] : 0);
    h.total += h.counts.back();
  }
  return h;
}

SensitivityHistogram census_serial(unsigned n, unsigned cap) {
  check_census_size(n, cap);
  return make_histogram(n, tally_range(n, 0, code_count(n)));
}

SensitivityHistogram census(unsigned n, CensusOptions const& options) {
  check_census_size(n, options.cap);
  auto const codes = static_cast<std::int64_t>(code_count(n));
  std::vector<std::uint64_t> totals(n + 1, 0);
#pragma omp parallel num_threads(thread_count(options))
  {
    std::vector<std::uint64_t> local(n + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t code = 0; code < codes; ++code)
      ++local[kernels::max_sensitivity(static_cast<std::uint64_t>(code), n)];
#pragma omp critical(symsens_census_merge)
    for (unsigned s = 0; s <= n; ++s)
      totals[s] += local[s];
  }
  return make_histogram(n, totals);
}

CriterionReport verify_max_sensitivity_criterion(unsigned n, CensusOptions const& options) {
  check_census_size(n, options.cap);
  auto const codes = static_cast<std::int64_t>(code_count(n));
  constexpr auto none = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t matches = 0;
  std::uint64_t first_bad = none;
#pragma omp parallel for schedule(static) num_threads(thread_count(options)) \
    reduction(+ : matches) reduction(min : first_bad)
  for (std::int64_t i = 0; i < codes; ++i) {
    auto const code = static_cast<std::uint64_t>(i);
    bool const maximal = kernels::max_sensitivity(code, n) == n;
    bool const unit_part = kernels::min_run(code, n) == 1;
    matches += maximal;
    if (maximal != unit_part && code < first_bad)
      first_bad = code;
  }
  CriterionReport report;
  report.max_sensitivity_count = matches;
  if (first_bad != none) {
    report.holds = false;
    report.counterexample = CompactTruthTable::from_code(first_bad, n);
  }
  return report;
}

TuranReport verify_turan(unsigned n, CensusOptions const& options) {
  check_census_size(n, options.cap);
  auto const codes = code_count(n);
  auto const all_ones = codes - 1;
  // (sensitivity, code) ordered lexicographically; smallest wins
  std::pair<unsigned, std::uint64_t> best{n + 1, 0};
#pragma omp parallel num_threads(thread_count(options))
  {
    std::pair<unsigned, std::uint64_t> local{n + 1, 0};
#pragma omp for schedule(static)
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(all_ones); ++i) {
      auto const code = static_cast<std::uint64_t>(i);
      std::pair<unsigned, std::uint64_t> const candidate{kernels::max_sensitivity(code, n), code};
      if (candidate < local)
        local = candidate;
    }
#pragma omp critical(symsens_turan_merge)
    if (local < best)
      best = local;
  }
  TuranReport report;
  report.bound = (n + 2) / 2;
  report.min_nontrivial = best.first;
  report.witness = CompactTruthTable::from_code(best.second, n);
  report.holds = best.first >= report.bound;
  return report;
}

std::vector<TableRow> table_rows(unsigned n) {
  if (n == 0)
    throw DomainError("table_rows: n must be >= 1");
  if (n > kListingCap)
    throw SizeError("listing all " + std::to_string(code_count(n)) + " tables for n=" +
                    std::to_string(n) + " exceeds the listing cap " + std::to_string(kListingCap) +
                    "; use census for a histogram");
  std::vector<TableRow> rows;
  rows.reserve(code_count(n));
  for (std::uint64_t printed = code_count(n); printed-- > 0;) {
    std::vector<std::uint8_t> values(n + 1);
    for (unsigned k = 0; k <= n; ++k)
      values[k] = static_cast<std::uint8_t>((printed >> (n - k)) & 1u);
    CompactTruthTable table(std::move(values));
    auto composition = to_composition(table);
    auto const s = sensitivity_profile(table).max;
    rows.push_back(TableRow{std::move(table), std::move(composition), s});
  }
  return rows;
}

} // namespace symsens
