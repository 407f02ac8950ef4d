#pragma once

// Parsing of complex literals like "1", "-2.5i", "1+0.1i", "1 - 0.1 i" and
// comma-separated lists of them.  Malformed input throws
// std::invalid_argument before any computation runs.

#include <complex>
#include <string>
#include <vector>

namespace oddwedge {

std::complex<double> parse_complex(const std::string& text);
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

}  // namespace oddwedge
