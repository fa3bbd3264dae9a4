#pragma once

// Inner-loop kernels over packed compact tables. A code holds v_0..v_n in
// bits 0..n (LSB = v_0). These are what the census scans call per table.

#include <bit>
#include <cstdint>

namespace symsens::kernels {

inline constexpr std::uint64_t low_mask(unsigned bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// s(f) of the symmetric function packed in `code`. Weight k has k ones
/// that move to weight k-1 and n-k zeros that move to weight k+1, so
/// s(f, x) = k*[v_{k-1} != v_k] + (n-k)*[v_{k+1} != v_k].
inline unsigned max_sensitivity(std::uint64_t code, unsigned n) noexcept {
  // bit k of edges: v_k != v_{k+1}, for k in 0..n-1
  std::uint64_t const edges = (code ^ (code >> 1)) & low_mask(n);
  if (edges == 0)
    return 0;
  unsigned best = 0;
  for (unsigned k = 0; k <= n; ++k) {
    unsigned const down = k > 0 ? k * static_cast<unsigned>((edges >> (k - 1)) & 1u) : 0;
    unsigned const up = k < n ? (n - k) * static_cast<unsigned>((edges >> k) & 1u) : 0;
    unsigned const s = down + up;
    if (s > best) {
      best = s;
      if (best == n)
        break;
    }
  }
  return best;
}

/// Smallest run length of equal consecutive values among v_0..v_n.
inline unsigned min_run(std::uint64_t code, unsigned n) noexcept {
  unsigned best = n + 1;
  unsigned pos = 0;
  while (pos <= n) {
    // length of the run starting at pos
    std::uint64_t const rest = code >> pos;
    std::uint64_t const bit = rest & 1u;
    std::uint64_t const flipped = (bit ? ~rest : rest) & low_mask(n + 1 - pos);
    unsigned const len = flipped ? static_cast<unsigned>(std::countr_zero(flipped)) : n + 1 - pos;
    if (len < best)
      best = len;
    pos += len;
  }
  return best;
}

} // namespace symsens::kernels
