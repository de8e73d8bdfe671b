#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mappa::text {

std::string_view trim(std::string_view s);

/// Splits on every occurrence of `sep`; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Full-string parse; nullopt on trailing garbage or non-finite values.
std::optional<double> parse_double(std::string_view s);

/// Shortest representation that round-trips.
std::string format_double(double v);

/// ASCII-only lowercase; other bytes untouched.
std::string ascii_lower(std::string_view s);

}  // namespace mappa::text
