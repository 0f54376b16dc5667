#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "parking/core.hpp"

namespace parking {

// Exact non-negative integer; counts overflow 128 bits for modest inputs.
using CountValue = boost::multiprecision::cpp_int;

// Number of linear parking sequences:
//   prod_{i=2..n} (y_1 + ... + y_{i-1} + n + 2 - i), empty product for n = 1.
[[nodiscard]] CountValue count_linear(const SizeVector& sizes);

// Number of circular parking sequences on M = T + 1 spots, M * count_linear.
[[nodiscard]] CountValue count_circular(const SizeVector& sizes);

// (n + 1)^(n - 1), the number of classical parking functions.
[[nodiscard]] CountValue count_classical(std::size_t n);

// Choices available to car `car` (1-based) in the divider construction:
// M for the first car, y_1 + ... + y_{i-1} + n + 2 - i afterwards.
[[nodiscard]] CountValue option_count(const SizeVector& sizes, CarIndex car);

[[nodiscard]] std::string to_decimal(const CountValue& v);

}  // namespace parking
