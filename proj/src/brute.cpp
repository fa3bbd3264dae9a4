#include <symsens/brute.hpp>

#include <symsens/errors.hpp>

#include <atomic>
#include <cstdint>
#include <string>

namespace symsens::brute {

namespace {

unsigned flips_changing_value(TruthTable const& t, InputIndex x) noexcept {
  bool const fx = t.get(x);
  unsigned count = 0;
  for (unsigned i = 0; i < t.num_vars(); ++i)
    count += t.get(x ^ (InputIndex{1} << i)) != fx;
  return count;
}

} // namespace

unsigned sensitivity_at(TruthTable const& t, InputIndex x) {
  if (x >= t.size())
    throw BoundsError("input index " + std::to_string(x) + " out of range for n=" +
                      std::to_string(t.num_vars()));
  return flips_changing_value(t, x);
}

unsigned sensitivity_serial(TruthTable const& t) {
  unsigned const n = t.num_vars();
  unsigned best = 0;
  for (InputIndex x = 0; x < t.size() && best < n; ++x) {
    auto const s = flips_changing_value(t, x);
    if (s > best)
      best = s;
  }
  return best;
}

unsigned sensitivity(TruthTable const& t) {
  unsigned const n = t.num_vars();
  auto const size = static_cast<std::int64_t>(t.size());
  // n is a global upper bound, so once any thread reaches it the rest of
  // the scan is skipped.
  std::atomic<bool> saturated{false};
  unsigned best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (std::int64_t x = 0; x < size; ++x) {
    if (saturated.load(std::memory_order_relaxed))
      continue;
    auto const s = flips_changing_value(t, static_cast<InputIndex>(x));
    if (s > best) {
      best = s;
      if (best == n)
        saturated.store(true, std::memory_order_relaxed);
    }
  }
  return best;
}

} // namespace symsens::brute
