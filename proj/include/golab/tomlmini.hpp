#pragma once

#include <string>

#include "json.hpp"

namespace golab::tomlmini {

/// Parses the TOML subset used by the space definition files: [table] and
/// [[array-of-table]] headers, bare keys, string/integer/boolean values and
/// (arbitrarily nested, multi-line) arrays. Throws ParseError with a line
/// number on anything else.
nlohmann::json parse(const std::string& text);

}  // namespace golab::tomlmini
