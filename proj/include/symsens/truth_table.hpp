#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symsens {

/// Default largest n for which a full 2^n-entry table may be built.
inline constexpr unsigned kDefaultFullTableCap = 20;
/// Absolute ceiling; above this the table would not fit in memory.
inline constexpr unsigned kHardFullTableCap = 30;

/// Input vector index. x_1 is the least significant bit, so input
/// (x_1, ..., x_n) has index sum x_i * 2^(i-1).
using InputIndex = std::uint64_t;

/**
 * Full truth table of an n-variable Boolean function, packed 64 bits per
 * word. Bit i of the table is f(x) for the input with index i.
 *
 * Construction cost is 2^n bits; the default cap n <= 20 keeps a table at
 * 128 KiB. Pass a larger `cap` (up to kHardFullTableCap) to go further.
 */
class TruthTable {
public:
  explicit TruthTable(unsigned n, unsigned cap = kDefaultFullTableCap);

  /// Builds a table from a 0/1 string, character i is f(index i).
  static TruthTable from_bits(std::string_view bits, unsigned cap = kDefaultFullTableCap);

  unsigned num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool get(InputIndex x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(InputIndex x, bool value) noexcept {
    auto const mask = std::uint64_t{1} << (x & 63);
    if (value)
      words_[x >> 6] |= mask;
    else
      words_[x >> 6] &= ~mask;
  }

  /// Bounds-checked read.
  bool at(InputIndex x) const;

  void complement() noexcept;
  bool is_constant() const noexcept;

  std::string to_bits() const;

  friend bool operator==(TruthTable const&, TruthTable const&) = default;

private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

} // namespace symsens
