#include <symsens/core.hpp>

#include <symsens/errors.hpp>

#include <algorithm>
#include <bit>
#include <charconv>

namespace symsens {

CompactTruthTable::CompactTruthTable(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  if (values_.size() < 2)
    throw FormatError("compact truth table needs at least two entries (n >= 1)");
  for (auto v : values_)
    if (v > 1)
      throw FormatError("compact truth table entries must be 0 or 1");
}

CompactTruthTable CompactTruthTable::parse(std::string_view bits) {
  std::vector<std::uint8_t> values;
  values.reserve(bits.size());
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw FormatError("invalid character '" + std::string(1, ch) + "' in compact table \"" +
                        std::string(bits) + "\"");
    values.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return CompactTruthTable(std::move(values));
}

CompactTruthTable CompactTruthTable::from_code(std::uint64_t code, unsigned n) {
  if (n == 0 || n > kMaxPackedVars)
    throw SizeError("packed compact tables support 1 <= n <= " + std::to_string(kMaxPackedVars));
  std::vector<std::uint8_t> values(n + 1);
  for (unsigned k = 0; k <= n; ++k)
    values[k] = static_cast<std::uint8_t>((code >> k) & 1u);
  return CompactTruthTable(std::move(values));
}

std::uint64_t CompactTruthTable::to_code() const {
  if (num_vars() > kMaxPackedVars)
    throw SizeError("compact table too long to pack into a 64-bit code");
  std::uint64_t code = 0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    code |= std::uint64_t{values_[k]} << k;
  return code;
}

std::string CompactTruthTable::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (auto v : values_)
    out.push_back(static_cast<char>('0' + v));
  return out;
}

CompactTruthTable CompactTruthTable::complemented() const {
  auto values = values_;
  for (auto& v : values)
    v ^= 1u;
  return CompactTruthTable(std::move(values));
}

CompactTruthTable CompactTruthTable::reversed() const {
  return CompactTruthTable(std::vector<std::uint8_t>(values_.rbegin(), values_.rend()));
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty())
    throw FormatError("composition needs at least one part");
  for (auto p : parts_) {
    if (p == 0)
      throw FormatError("composition parts must be positive");
    total_ += p;
  }
}

Composition Composition::parse(std::string_view text) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (true) {
    auto const plus = text.find('+', pos);
    auto const token = text.substr(pos, plus == std::string_view::npos ? text.npos : plus - pos);
    unsigned value = 0;
    auto const [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() || token.empty())
      throw FormatError("invalid composition \"" + std::string(text) + "\"");
    parts.push_back(value);
    if (plus == std::string_view::npos)
      break;
    pos = plus + 1;
  }
  return Composition(std::move(parts));
}

unsigned Composition::min_part() const noexcept {
  return *std::min_element(parts_.begin(), parts_.end());
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out.push_back('+');
    out += std::to_string(parts_[i]);
  }
  return out;
}

TruthTable expand(CompactTruthTable const& c, unsigned cap) {
  TruthTable t(c.num_vars(), cap);
  for (InputIndex x = 0; x < t.size(); ++x)
    t.set(x, c[static_cast<std::size_t>(std::popcount(x))]);
  return t;
}

CompressResult compress(TruthTable const& t) {
  unsigned const n = t.num_vars();
  constexpr auto unseen = ~InputIndex{0};
  std::vector<InputIndex> first_seen(n + 1, unseen);
  std::vector<std::uint8_t> values(n + 1, 0);
  for (InputIndex x = 0; x < t.size(); ++x) {
    auto const w = static_cast<std::size_t>(std::popcount(x));
    auto const v = static_cast<std::uint8_t>(t.get(x));
    if (first_seen[w] == unseen) {
      first_seen[w] = x;
      values[w] = v;
    } else if (values[w] != v) {
      return AsymmetryWitness{first_seen[w], x};
    }
  }
  return CompactTruthTable(std::move(values));
}

Composition to_composition(CompactTruthTable const& c) {
  auto const values = c.values();
  std::vector<unsigned> parts;
  unsigned run = 1;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] == values[k - 1]) {
      ++run;
    } else {
      parts.push_back(run);
      run = 1;
    }
  }
  parts.push_back(run);
  return Composition(std::move(parts));
}

CompactTruthTable from_composition(Composition const& comp, bool first_value) {
  std::vector<std::uint8_t> values;
  values.reserve(comp.total());
  auto bit = static_cast<std::uint8_t>(first_value);
  for (auto part : comp.parts()) {
    values.insert(values.end(), part, bit);
    bit ^= 1u;
  }
  return CompactTruthTable(std::move(values));
}

SensitivityProfile sensitivity_profile(CompactTruthTable const& c) {
  unsigned const n = c.num_vars();
  SensitivityProfile profile;
  profile.n = n;
  profile.per_weight.resize(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // The k and (n-k) factors vanish at the two ends, where the missing
    // neighbor weight has no term.
    unsigned const down = k > 0 && c[k - 1] != c[k] ? k : 0;
    unsigned const up = k < n && c[k + 1] != c[k] ? n - k : 0;
    profile.per_weight[k] = down + up;
  }
  profile.max = *std::max_element(profile.per_weight.begin(), profile.per_weight.end());
  return profile;
}

bool has_max_sensitivity(CompactTruthTable const& c) {
  return to_composition(c).min_part() == 1;
}

bool is_trivial(CompactTruthTable const& c) {
  auto const values = c.values();
  return std::all_of(values.begin(), values.end(), [&](auto v) { return v == values.front(); });
}

} // namespace symsens
