#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lambertx::cli {

enum class OutputFormat { kJson, kCsv, kPlain };

// Shortest representation that round-trips, independent of locale.
std::string format_number(double value);

// Key/value rows printed as "key  : value" with keys padded to one width.
std::string plain_table(const std::vector<std::pair<std::string, std::string>>& rows);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace lambertx::cli
