#include "heyland/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace heyland::fmt {

std::string significant(double value, int digits) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*g", digits, value);
    std::string out(buf.data());
    if (out == "-0") {
        out = "0";
    }
    return out;
}

std::string fixed3(double value) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", value);
    std::string out(buf.data());
    if (out == "-0.000") {
        out = "0.000";
    }
    return out;
}

std::string shortest(double value) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

} // namespace heyland::fmt
