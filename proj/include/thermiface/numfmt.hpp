#pragma once

// Locale-independent number parsing and formatting.

#include <optional>
#include <string>
#include <string_view>

namespace thermiface {

// Whole-string parse with '.' as the decimal point; nullopt on any junk.
[[nodiscard]] std::optional<double> parse_double(std::string_view text);

// Shortest decimal that round-trips to the same double.
[[nodiscard]] std::string format_shortest(double value);

// %.6g-style, six significant digits.
[[nodiscard]] std::string format_sig6(double value);

[[nodiscard]] double round_half_away(double value, int decimals);

// Fixed decimals after half-away-from-zero rounding.
[[nodiscard]] std::string format_fixed(double value, int decimals);

} // namespace thermiface
