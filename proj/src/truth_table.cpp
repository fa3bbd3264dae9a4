#include <symsens/truth_table.hpp>

#include <symsens/errors.hpp>

#include <algorithm>
#include <bit>

namespace symsens {

namespace {

std::uint64_t tail_mask(unsigned n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

} // namespace

TruthTable::TruthTable(unsigned n, unsigned cap) : n_(n) {
  if (n == 0)
    throw DomainError("truth table needs at least one variable");
  if (cap > kHardFullTableCap)
    cap = kHardFullTableCap;
  if (n > cap)
    throw SizeError("full truth table for n=" + std::to_string(n) + " exceeds cap " +
                    std::to_string(cap) + " (2^" + std::to_string(n) + " bits)");
  words_.assign(std::max<std::uint64_t>(1, size() / 64), 0);
}

TruthTable TruthTable::from_bits(std::string_view bits, unsigned cap) {
  if (bits.size() < 2 || !std::has_single_bit(bits.size()))
    throw FormatError("truth table length " + std::to_string(bits.size()) +
                      " is not a power of two >= 2");
  auto const n = static_cast<unsigned>(std::countr_zero(bits.size()));
  TruthTable t(n, cap);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw FormatError(std::string("invalid bit character '") + bits[i] + "'");
    t.set(i, bits[i] == '1');
  }
  return t;
}

bool TruthTable::at(InputIndex x) const {
  if (x >= size())
    throw BoundsError("input index " + std::to_string(x) + " out of range for n=" +
                      std::to_string(n_));
  return get(x);
}

void TruthTable::complement() noexcept {
  for (auto& w : words_)
    w = ~w;
  words_.back() &= tail_mask(n_);
}

bool TruthTable::is_constant() const noexcept {
  auto const first = get(0);
  auto const full = first ? tail_mask(n_) : 0;
  if (n_ < 6)
    return words_[0] == full;
  std::uint64_t const fill = first ? ~std::uint64_t{0} : 0;
  return std::all_of(words_.begin(), words_.end(), [fill](auto w) { return w == fill; });
}

std::string TruthTable::to_bits() const {
  std::string out(size(), '0');
  for (InputIndex i = 0; i < size(); ++i)
    if (get(i))
      out[i] = '1';
  return out;
}

} // namespace symsens
