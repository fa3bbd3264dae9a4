#pragma once

#include <symsens/truth_table.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symsens {

/// Largest n for which a compact table can be packed into a 64-bit code.
inline constexpr unsigned kMaxPackedVars = 62;

/**
 * Compact truth table of a symmetric Boolean function of n variables:
 * values()[k] is the function value on every input with exactly k ones.
 *
 * Serialized as a bit string with v_0 leftmost ("1110" is v_0=1, ..., v_3=0).
 * Operations on compact tables are O(n) and accept very large n.
 */
class CompactTruthTable {
public:
  /// Requires values.size() >= 2 and every entry 0 or 1.
  explicit CompactTruthTable(std::vector<std::uint8_t> values);

  static CompactTruthTable parse(std::string_view bits);

  /// Bit k of `code` is v_k. Requires 1 <= n <= kMaxPackedVars.
  static CompactTruthTable from_code(std::uint64_t code, unsigned n);

  unsigned num_vars() const noexcept { return static_cast<unsigned>(values_.size() - 1); }
  std::span<std::uint8_t const> values() const noexcept { return values_; }
  bool operator[](std::size_t k) const noexcept { return values_[k] != 0; }

  std::uint64_t to_code() const;
  std::string to_string() const;

  CompactTruthTable complemented() const;
  /// v_k -> v_{n-k}; the function with every input bit negated.
  CompactTruthTable reversed() const;

  friend bool operator==(CompactTruthTable const&, CompactTruthTable const&) = default;

private:
  std::vector<std::uint8_t> values_;
};

/// Ordered positive parts summing to total, printed as "2+1+1".
class Composition {
public:
  explicit Composition(std::vector<unsigned> parts);

  static Composition parse(std::string_view text);

  unsigned total() const noexcept { return total_; }
  std::span<unsigned const> parts() const noexcept { return parts_; }
  unsigned min_part() const noexcept;
  std::string to_string() const;

  friend bool operator==(Composition const&, Composition const&) = default;

private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

struct SensitivityProfile {
  unsigned n = 0;
  /// per_weight[k] = s(f, x) for any x of Hamming weight k.
  std::vector<unsigned> per_weight;
  /// s(f)
  unsigned max = 0;

  friend bool operator==(SensitivityProfile const&, SensitivityProfile const&) = default;
};

/// Two inputs of equal Hamming weight on which a full table disagrees.
struct AsymmetryWitness {
  InputIndex first = 0;
  InputIndex second = 0;

  friend bool operator==(AsymmetryWitness const&, AsymmetryWitness const&) = default;
};

using CompressResult = std::variant<CompactTruthTable, AsymmetryWitness>;

TruthTable expand(CompactTruthTable const& c, unsigned cap = kDefaultFullTableCap);

/// Returns the compact table, or the first pair of equal-weight inputs
/// (scanning indices upward) whose values differ.
CompressResult compress(TruthTable const& t);

/// Run lengths of the compact table, left to right; total is n+1.
Composition to_composition(CompactTruthTable const& c);

/// Inverse of to_composition: runs alternate starting from first_value.
CompactTruthTable from_composition(Composition const& comp, bool first_value);

/// O(n); never builds the 2^n table.
SensitivityProfile sensitivity_profile(CompactTruthTable const& c);

/// True iff the composition has a part equal to 1, which holds exactly
/// when s(f) = n.
bool has_max_sensitivity(CompactTruthTable const& c);

/// Constant 0 or constant 1.
bool is_trivial(CompactTruthTable const& c);

} // namespace symsens
