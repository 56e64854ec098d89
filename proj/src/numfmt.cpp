#include "thermiface/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

namespace thermiface {

std::optional<double> parse_double(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    // from_chars rejects a leading '+'; accept it for flags like --ambient-temp +5.
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        return std::nullopt;
    }
    return value;
}

std::string format_shortest(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::string format_sig6(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 6);
    return std::string(buf.data(), ptr);
}

double round_half_away(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

std::string format_fixed(double value, int decimals) {
    double rounded = round_half_away(value, decimals);
    if (rounded == 0.0) {
        rounded = 0.0; // drop the sign of -0
    }
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), rounded,
                                         std::chars_format::fixed, decimals);
    return std::string(buf.data(), ptr);
}

} // namespace thermiface
