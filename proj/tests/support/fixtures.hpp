#pragma once

#include "qcube/codes.hpp"

namespace qcube::fixtures {

inline GeneratorMatrix k44() { return parse_code("1111"); }

/// Extended Hamming [8,4,4]: doubly even and self-dual.
inline GeneratorMatrix e8() { return parse_code("11110000\n00111100\n00001111\n01010101"); }

/// Two codes that differ by swapping columns 1 and 5.
inline GeneratorMatrix column_swap_left() { return parse_code("10000111\n10110100\n01111000"); }
inline GeneratorMatrix column_swap_right() { return parse_code("00001111\n00111100\n11110000"); }

/// Two codes with different spectra.
inline GeneratorMatrix distinct_left() { return parse_code("00001111\n00111100\n01010101"); }
inline GeneratorMatrix distinct_right() { return parse_code("00001111\n00111100\n11110000"); }

inline GeneratorMatrix hypercube_code(int n) { return GeneratorMatrix(n, {}); }

} // namespace qcube::fixtures
