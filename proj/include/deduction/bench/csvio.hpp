#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace deduction::bench {

// RFC-4180: quote a field holding a comma, quote, or line break;
// embedded quotes double up.
std::string csv_escape(std::string_view field);

// One row, LF-terminated.
void write_csv_row(std::ostream& out, std::span<const std::string> fields);
inline void write_csv_row(std::ostream& out, std::initializer_list<std::string> fields) {
    write_csv_row(out, std::span<const std::string>(fields.begin(), fields.size()));
}

// Fixed-point rendering ("%.Nf"): locale-independent and byte-stable.
std::string format_fixed(double value, int decimals);

}  // namespace deduction::bench
