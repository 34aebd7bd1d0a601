#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace cogregion {

/// UTC instant with millisecond resolution (USGS catalogs report milliseconds).
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// Parses `YYYY-MM-DD[T| ]HH:MM[:SS[.fff]][Z|+HH:MM|-HH:MM]` or a bare date.
/// Missing zone designator means UTC. Returns nullopt on malformed input.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// Formats as `YYYY-MM-DDTHH:MM:SS.mmmZ`.
std::string format_iso8601(Timestamp t);

Timestamp now_utc();

}  // namespace cogregion
