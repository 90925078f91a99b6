#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jescheck {

// Parses "30.8", "-1.0026e-4", "240", or "7/9" into an exact rational.
// Decimal constants stay decimal-exact; they never pass through binary
// floating point. Throws std::invalid_argument on malformed input.
mpq_class rational_from_decimal(std::string_view s);

// Exact decimal expansion when the reduced denominator is of the form
// 2^a * 5^b, otherwise "p/q".
std::string rational_to_string(const mpq_class& q);

}  // namespace jescheck
