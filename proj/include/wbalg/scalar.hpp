#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wbalg {

// Exact rationals; mpq_class keeps num/den canonical after every operation.
using Scalar = mpq_class;

// Accepts "n", "-n", "n/d" with d > 0. Throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

}  // namespace wbalg
