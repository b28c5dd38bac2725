#pragma once

#include <string>
#include <string_view>

namespace netproj {

// Fixed 12-significant-digit rendering used by every emitted table.
// Non-finite values render as "inf", "-inf" and "nan".
std::string format_real(double value);

// RFC 4180 quoting when the field contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace netproj
