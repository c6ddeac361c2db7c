#pragma once

#include <string>

namespace semiq {

/// Formats a double with 12 significant digits ("%.12g"), locale-independent.
/// Infinities print as "inf"/"-inf", NaN as "nan".
std::string format_number(double value);

}  // namespace semiq
