#include <symsens/io.hpp>

#include <symsens/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace symsens::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out.push_back(c);
  return out;
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto const s = strip(line);
    if (!s.empty() && s.front() != '#')
      lines.push_back(s);
  }
  return lines;
}

std::vector<std::string> split(std::string const& line, char sep) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto const pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos == std::string::npos ? pos : pos - start));
    if (pos == std::string::npos)
      return fields;
    start = pos + 1;
  }
}

unsigned parse_unsigned(std::string const& s, char const* what) {
  unsigned value = 0;
  auto const [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || s.empty())
    throw FormatError(std::string("invalid ") + what + " \"" + s + "\"");
  return value;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9')
    return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f')
    return c - 'a' + 10;
  return -1;
}

std::uint64_t to_u64(BigInt const& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw FormatError("count " + v.str() + " does not fit in a JSON number");
  return v.convert_to<std::uint64_t>();
}

SensitivityHistogram histogram_from_counts(unsigned n, std::vector<std::pair<unsigned, BigInt>> const& entries) {
  SensitivityHistogram h;
  h.n = n;
  h.counts.assign(n + 1, BigInt(0));
  for (auto const& [s, count] : entries) {
    if (s > n)
      throw FormatError("sensitivity " + std::to_string(s) + " exceeds n=" + std::to_string(n));
    h.counts[s] += count;
  }
  for (auto const& c : h.counts)
    h.total += c;
  return h;
}

} // namespace

TruthTable parse_truth_table(std::string_view text, unsigned cap) {
  auto const lines = content_lines(text);
  if (lines.empty() || lines.front().rfind("n=", 0) != 0)
    throw FormatError("truth-table file must start with an \"n=<vars>\" header");
  unsigned const n = parse_unsigned(lines.front().substr(2), "variable count");
  if (n == 0)
    throw FormatError("truth-table file needs n >= 1");
  std::string payload;
  for (std::size_t i = 1; i < lines.size(); ++i)
    payload += lines[i];

  TruthTable t(n, cap);
  if (payload.rfind("bin:", 0) == 0) {
    auto const bits = std::string_view(payload).substr(4);
    if (bits.size() != t.size())
      throw FormatError("bin payload has " + std::to_string(bits.size()) + " bits, expected " +
                        std::to_string(t.size()));
    return TruthTable::from_bits(bits, cap);
  }
  if (payload.rfind("hex:", 0) == 0) {
    auto const digits = std::string_view(payload).substr(4);
    auto const expected = std::max<std::uint64_t>(1, t.size() / 4);
    if (digits.size() != expected)
      throw FormatError("hex payload has " + std::to_string(digits.size()) + " digits, expected " +
                        std::to_string(expected));
    for (std::size_t j = 0; j < digits.size(); ++j) {
      int const nibble = hex_value(digits[digits.size() - 1 - j]);
      if (nibble < 0)
        throw FormatError(std::string("invalid hex digit '") + digits[digits.size() - 1 - j] + "'");
      for (unsigned b = 0; b < 4; ++b) {
        bool const bit = (nibble >> b) & 1;
        InputIndex const x = 4 * j + b;
        if (x < t.size())
          t.set(x, bit);
        else if (bit)
          throw FormatError("hex payload sets bits beyond 2^n");
      }
    }
    return t;
  }
  throw FormatError("truth-table payload must start with \"bin:\" or \"hex:\"");
}

TruthTable read_truth_table_file(std::string const& path, unsigned cap) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open truth-table file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_truth_table(buf.str(), cap);
}

std::string format_truth_table(TruthTable const& t, TableEncoding encoding) {
  std::string out = "n=" + std::to_string(t.num_vars()) + "\n";
  if (encoding == TableEncoding::binary)
    return out + "bin:" + t.to_bits() + "\n";
  auto const digits = std::max<std::uint64_t>(1, t.size() / 4);
  std::string hex(digits, '0');
  for (std::uint64_t j = 0; j < digits; ++j) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b)
      if (4 * j + b < t.size() && t.get(4 * j + b))
        nibble |= 1u << b;
    hex[digits - 1 - j] = "0123456789abcdef"[nibble];
  }
  return out + "hex:" + hex + "\n";
}

std::string histogram_to_csv(SensitivityHistogram const& h) {
  std::string out = "n,s,count\n";
  for (unsigned s = 0; s < h.counts.size(); ++s)
    if (h.counts[s] != 0)
      out += std::to_string(h.n) + "," + std::to_string(s) + "," + h.counts[s].str() + "\n";
  return out;
}

SensitivityHistogram histogram_from_csv(std::string_view text) {
  auto const lines = content_lines(text);
  if (lines.empty() || lines.front() != "n,s,count")
    throw FormatError("histogram CSV must start with header \"n,s,count\"");
  if (lines.size() < 2)
    throw FormatError("histogram CSV has no rows");
  std::optional<unsigned> n;
  std::vector<std::pair<unsigned, BigInt>> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const fields = split(lines[i], ',');
    if (fields.size() != 3)
      throw FormatError("histogram CSV row \"" + lines[i] + "\" needs 3 fields");
    auto const row_n = parse_unsigned(fields[0], "n");
    if (n && *n != row_n)
      throw FormatError("histogram CSV mixes several n values");
    n = row_n;
    entries.emplace_back(parse_unsigned(fields[1], "sensitivity"), parse_bigint(fields[2]));
  }
  return histogram_from_counts(*n, entries);
}

std::string histogram_to_json(SensitivityHistogram const& h) {
  ordered_json j;
  j["n"] = h.n;
  j["counts"] = ordered_json::object();
  for (unsigned s = 0; s < h.counts.size(); ++s)
    if (h.counts[s] != 0)
      j["counts"][std::to_string(s)] = to_u64(h.counts[s]);
  j["total"] = to_u64(h.total);
  return j.dump();
}

SensitivityHistogram histogram_from_json(std::string_view text) {
  try {
    auto const j = nlohmann::json::parse(text);
    auto const n = j.at("n").get<unsigned>();
    std::vector<std::pair<unsigned, BigInt>> entries;
    for (auto const& [key, value] : j.at("counts").items())
      entries.emplace_back(parse_unsigned(key, "sensitivity"), BigInt(value.get<std::uint64_t>()));
    auto h = histogram_from_counts(n, entries);
    if (h.total != BigInt(j.at("total").get<std::uint64_t>()))
      throw FormatError("histogram JSON total does not equal the sum of counts");
    return h;
  } catch (nlohmann::json::exception const& e) {
    throw FormatError(std::string("invalid histogram JSON: ") + e.what());
  }
}

std::string count_series_to_csv(CountSeries const& s) {
  std::string out = "n,total,no_ones,max_sens,ratio\n";
  for (unsigned n = 1; n <= s.max_n; ++n)
    out += std::to_string(n) + "," + s.total[n - 1].str() + "," + s.no_ones[n - 1].str() + "," +
           s.max_sens[n - 1].str() + "," + to_fraction_string(s.ratio(n)) + "\n";
  return out;
}

std::string count_series_to_json(CountSeries const& s) {
  auto rows = ordered_json::array();
  for (unsigned n = 1; n <= s.max_n; ++n) {
    ordered_json row;
    row["n"] = n;
    row["total"] = s.total[n - 1].str();
    row["no_ones"] = s.no_ones[n - 1].str();
    row["max_sens"] = s.max_sens[n - 1].str();
    row["ratio"] = to_fraction_string(s.ratio(n));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

CountSeries count_series_from_csv(std::string_view text) {
  auto const lines = content_lines(text);
  if (lines.empty() || lines.front() != "n,total,no_ones,max_sens,ratio")
    throw FormatError("count CSV must start with header \"n,total,no_ones,max_sens,ratio\"");
  CountSeries s;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const fields = split(lines[i], ',');
    if (fields.size() != 5)
      throw FormatError("count CSV row \"" + lines[i] + "\" needs 5 fields");
    if (parse_unsigned(fields[0], "n") != i)
      throw FormatError("count CSV rows must run n = 1, 2, ...");
    s.total.push_back(parse_bigint(fields[1]));
    s.no_ones.push_back(parse_bigint(fields[2]));
    s.max_sens.push_back(parse_bigint(fields[3]));
    s.max_n = static_cast<unsigned>(i);
    if (to_fraction_string(s.ratio(s.max_n)) != fields[4])
      throw FormatError("count CSV ratio \"" + fields[4] + "\" disagrees with its row");
  }
  return s;
}

} // namespace symsens::io
