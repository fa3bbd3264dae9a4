#pragma once

// Reference sensitivity straight from the definition, for any Boolean
// function given as a full truth table. Cost is O(n * 2^n).

#include <symsens/truth_table.hpp>

namespace symsens::brute {

/// Number of i with f(x) != f(x ^ e_i). Throws BoundsError if x >= 2^n.
unsigned sensitivity_at(TruthTable const& t, InputIndex x);

/// max over x of sensitivity_at; OpenMP-parallel over inputs.
unsigned sensitivity(TruthTable const& t);

/// Single-threaded reference for `sensitivity`.
unsigned sensitivity_serial(TruthTable const& t);

} // namespace symsens::brute
