#pragma once

// Text formats: truth-table files, histogram CSV/JSON, count-series CSV/JSON.
//
// Truth-table file:
//
//   # optional comment lines
//   n=3
//   bin:10010110
//
// The `bin:` payload has 2^n characters; character i is f(x) for the input
// with index i = sum x_j * 2^(j-1) (x_1 is the least significant bit). A
// `hex:` payload instead gives the table as one big-endian hexadecimal
// number whose bit i is f(index i), padded to whole digits; padding bits
// must be zero. Whitespace inside the payload is ignored.

#include <symsens/counting.hpp>
#include <symsens/distribution.hpp>
#include <symsens/truth_table.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace symsens::io {

enum class TableEncoding { binary, hex };

TruthTable parse_truth_table(std::string_view text, unsigned cap = kDefaultFullTableCap);
TruthTable read_truth_table_file(std::string const& path, unsigned cap = kDefaultFullTableCap);
std::string format_truth_table(TruthTable const& t, TableEncoding encoding = TableEncoding::binary);

/// "n,s,count" header, one row per nonzero count.
std::string histogram_to_csv(SensitivityHistogram const& h);
SensitivityHistogram histogram_from_csv(std::string_view text);

/// {"n":..,"counts":{"s":count,..},"total":..}, nonzero counts only.
std::string histogram_to_json(SensitivityHistogram const& h);
SensitivityHistogram histogram_from_json(std::string_view text);

/// "n,total,no_ones,max_sens,ratio" with ratio as an exact fraction.
std::string count_series_to_csv(CountSeries const& s);
/// Array of row objects; integers and ratio are strings.
std::string count_series_to_json(CountSeries const& s);
CountSeries count_series_from_csv(std::string_view text);

} // namespace symsens::io
