// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include "cli.hpp"

#include <symsens/brute.hpp>
#include <symsens/core.hpp>
#include <symsens/counting.hpp>
#include <symsens/distribution.hpp>
#include <symsens/series.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"

using namespace symsens;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string const& why) {
    if (passed)
      detail = why;
    passed = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s; // 0 = no stated limit
  std::function<Outcome()> check;
};

std::uint64_t table_count(unsigned n) { return std::uint64_t{1} << (n + 1); }

/// N_n from its defining recurrence, kept separate from the library.
std::vector<BigInt> no_ones_reference(unsigned max_n) {
  std::vector<BigInt> nn{0, 2, 2};
  for (unsigned n = 3; n <= max_n; ++n)
    nn.push_back(nn[n - 1] + nn[n - 2]);
  return nn;
}

Outcome table_reproduction() {
  Outcome o;
  std::ostringstream out, err;
  int const status = cli::run({"symsens", "table", "3"}, out, err);
  auto const golden = oracle::read_file(SYMSENS_FIXTURE_DIR "/listing_n3.txt");
  if (golden.empty())
    o.fail("missing golden fixture");
  else if (status != 0)
    o.fail("table 3 exited with " + std::to_string(status));
  else if (oracle::strip_whitespace(out.str()) != oracle::strip_whitespace(golden))
    o.fail("output differs from fixture:\n" + out.str());
  auto const rows = table_rows(3);
  std::set<unsigned> sens;
  for (auto const& r : rows)
    sens.insert(r.sensitivity);
  if (rows.size() != 16 || sens != std::set<unsigned>{0, 2, 3})
    o.fail("unexpected rows or sensitivity set");
  if (o.passed)
    o.detail = "16 rows byte-identical after whitespace removal";
  return o;
}

Outcome counting_identity() {
  Outcome o;
  auto const nn = no_ones_reference(12);
  for (unsigned n = 1; n <= 12; ++n) {
    auto const expected = (BigInt(1) << (n + 1)) - nn[n];
    auto const from_census = census(n).count(n);
    auto const from_counts = max_sensitivity_count(n);
    if (from_census != expected || from_counts != expected)
      o.fail("n=" + std::to_string(n) + ": census " + from_census.str() + ", count " +
             from_counts.str() + ", expected " + expected.str());
  }
  if (o.passed)
    o.detail = "n=1..12, a_12 = " + max_sensitivity_count(12).str();
  return o;
}

Outcome criterion_exhaustive() {
  Outcome o;
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (std::uint64_t code = 0; code < table_count(n); ++code) {
      auto const c = CompactTruthTable::from_code(code, n);
      bool const unit_part = to_composition(c).min_part() == 1;
      bool const maximal = sensitivity_profile(c).max == n;
      if (unit_part != maximal)
        o.fail("counterexample " + c.to_string());
      ++checked;
    }
    auto const report = verify_max_sensitivity_criterion(n);
    if (!report.holds)
      o.fail("parallel scan counterexample " + report.counterexample->to_string());
  }
  if (o.passed)
    o.detail = std::to_string(checked) + " tables, 0 counterexamples";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::uint64_t checked = 0;
  for (unsigned n = 1; n <= 10; ++n)
    for (std::uint64_t code = 0; code < table_count(n); ++code) {
      auto const c = CompactTruthTable::from_code(code, n);
      auto const fast = sensitivity_profile(c).max;
      auto const slow = brute::sensitivity_serial(expand(c));
      if (fast != slow)
        o.fail(c.to_string() + ": profile " + std::to_string(fast) + " vs brute " + std::to_string(slow));
      ++checked;
    }
  if (o.passed)
    o.detail = std::to_string(checked) + " tables agree";
  return o;
}

Outcome turan_bound() {
  Outcome o;
  for (unsigned n = 1; n <= 12; ++n) {
    auto const report = verify_turan(n);
    unsigned const bound = (n + 2) / 2;
    if (!report.holds || report.bound != bound)
      o.fail("n=" + std::to_string(n) + ": min non-trivial " + std::to_string(report.min_nontrivial));
    auto const h = census(n);
    for (unsigned s = 1; s < bound; ++s)
      if (h.count(s) != 0)
        o.fail("n=" + std::to_string(n) + ": counts[" + std::to_string(s) + "] nonzero");
  }
  if (verify_turan(3).min_nontrivial != 2)
    o.fail("n=3 minimum non-trivial sensitivity is not 2");
  if (o.passed)
    o.detail = "n=1..12; n=10 witness " + verify_turan(10).witness->to_string() + " (s=6)";
  return o;
}

Outcome asymptotic_claim() {
  Outcome o;
  // First n with ratio > 0.99 and > 1 - 1e-6, confirmed with the exact recurrence.
  constexpr unsigned first_above_99_percent = 18;
  constexpr unsigned first_above_one_minus_1e6 = 62;
  BigRational const p99(99, 100);
  BigRational const p1e6 = 1 - BigRational(1, 1'000'000);
  auto const fib = oracle::fibonacci(200);
  BigRational previous = asymptotic_ratio(2);
  for (unsigned n = 2; n <= 200; ++n) {
    auto const r = asymptotic_ratio(n);
    if (r < previous)
      o.fail("ratio decreases at n=" + std::to_string(n));
    previous = r;
    if (r != 1 - BigRational(fib[n], BigInt(1) << n))
      o.fail("ratio at n=" + std::to_string(n) + " disagrees with 1 - F(n)/2^n");
    if ((r > p99) != (n >= first_above_99_percent))
      o.fail("0.99 crossing not at n=" + std::to_string(first_above_99_percent));
    if ((r > p1e6) != (n >= first_above_one_minus_1e6))
      o.fail("1-1e-6 crossing not at n=" + std::to_string(first_above_one_minus_1e6));
  }
  if (!(asymptotic_ratio(21) > p99) || !(asymptotic_ratio(96) > p1e6))
    o.fail("threshold at n=21 or n=96 not exceeded");
  if (o.passed)
    o.detail = "non-decreasing n=2..200; > 0.99 from n=18, > 1-1e-6 from n=62; ratio(96) = " +
               to_decimal_string(asymptotic_ratio(96), 12);
  return o;
}

Outcome generating_function_consistency() {
  Outcome o;
  auto const a = expand_series(total_gf() - no_ones_gf(), 65);
  auto const nn = expand_series(no_ones_gf(), 65);
  for (unsigned n = 1; n <= 64; ++n) {
    if (a[n] != max_sensitivity_count(n))
      o.fail("A(z) coefficient mismatch at n=" + std::to_string(n));
    if (nn[n] != no_ones_count(n))
      o.fail("N(z) coefficient mismatch at n=" + std::to_string(n));
  }
  if (!max_sensitivity_gf().self_check(64))
    o.fail("recurrence and long division disagree");
  if (o.passed)
    o.detail = "n=1..64 exact";
  return o;
}

Outcome property_suite() {
  Outcome o;
  for (unsigned n = 1; n <= 12; ++n) {
    std::set<std::pair<std::string, bool>> images;
    for (std::uint64_t code = 0; code < table_count(n); ++code) {
      auto const c = CompactTruthTable::from_code(code, n);
      auto const back = compress(expand(c));
      if (!std::holds_alternative<CompactTruthTable>(back) || std::get<CompactTruthTable>(back) != c)
        o.fail("round trip fails for " + c.to_string());
      auto const comp = to_composition(c);
      images.emplace(comp.to_string(), c[0]);

      auto const profile = sensitivity_profile(c);
      auto const flipped = c.complemented();
      if (to_composition(flipped) != comp || sensitivity_profile(flipped) != profile)
        o.fail("complement symmetry fails for " + c.to_string());
      auto rev = sensitivity_profile(c.reversed());
      std::reverse(rev.per_weight.begin(), rev.per_weight.end());
      auto parts = std::vector<unsigned>(comp.parts().begin(), comp.parts().end());
      std::reverse(parts.begin(), parts.end());
      if (rev.per_weight != profile.per_weight || rev.max != profile.max ||
          to_composition(c.reversed()) != Composition(parts))
        o.fail("reversal symmetry fails for " + c.to_string());
    }
    if (images.size() != table_count(n) || oracle::all_compositions(n + 1).size() * 2 != table_count(n))
      o.fail("bijection cardinality fails at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 18; ++n) {
    auto const serial = census_serial(n);
    for (auto const& c : serial.counts)
      if (c % 2 != 0)
        o.fail("odd histogram count at n=" + std::to_string(n));
    for (int threads : {1, 2, 4, 7})
      if (census(n, {.threads = threads}) != serial)
        o.fail("parallel census differs at n=" + std::to_string(n));
  }
  if (o.passed)
    o.detail = "round trip, bijection, complement, reversal (n<=12); even counts, parallel=serial (n<=18)";
  return o;
}

} // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "Table reproduction (n=3)", 1.0, table_reproduction},
      {2, "Counting identity census = 2^(n+1) - N_n", 10.0, counting_identity},
      {3, "Exhaustive s = n <=> unit part", 10.0, criterion_exhaustive},
      {4, "O(n) profile = brute-force oracle", 60.0, oracle_equivalence},
      {5, "Turan lower bound", 0.0, turan_bound},
      {6, "Asymptotic ratio a_n / 2^(n+1) -> 1", 0.0, asymptotic_claim},
      {7, "Generating-function consistency", 0.0, generating_function_consistency},
      {8, "Property suite", 0.0, property_suite},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome outcome = c.check();
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s)
      outcome.fail("runtime " + std::to_string(seconds) + " s over limit");
    failures += !outcome.passed;
    std::cout << (outcome.passed ? "[PASS] " : "[FAIL] ") << "AC" << c.id << ' ' << c.name << " ("
              << std::fixed << std::setprecision(3) << seconds << " s";
    if (c.time_limit_s > 0)
      std::cout << ", limit " << std::setprecision(0) << c.time_limit_s << " s";
    std::cout << "): " << outcome.detail << '\n';
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
