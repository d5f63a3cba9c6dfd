#pragma once

#include <string>

namespace heyland::fmt {

/// `%.{digits}g`, with "-0" normalised to "0".
std::string significant(double value, int digits);

/// Exactly three decimals, with "-0.000" normalised to "0.000".
std::string fixed3(double value);

/// Shortest text that parses back to the same double.
std::string shortest(double value);

} // namespace heyland::fmt
