#pragma once

#include <string>

namespace spindex {

// Fixed 12-significant-digit form used by the CLI and CSV writers, e.g.
// 3 -> "3.00000000000". Alternate form keeps the trailing zeros so columns
// carry a uniform precision.
std::string format_sig12(double v);

// Shortest decimal that round-trips to the same double. Used for canonical
// labels and config serialization.
std::string format_shortest(double v);

// Strict full-string double parse; throws std::invalid_argument on trailing
// garbage, empty input, or out-of-range values.
double parse_double(std::string_view text);

// Strict full-string integer parse for the same error contract.
long long parse_int(std::string_view text);

}  // namespace spindex
