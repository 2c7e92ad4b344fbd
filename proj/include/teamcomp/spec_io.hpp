#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "teamcomp/model.hpp"

namespace teamcomp {

// JSON document: {"T": int, "P": [[rational, ...], ...], "U": "UE" | "UM" |
// [rational x (T+1)]}. Rationals are "a/b" strings, integers, or decimal
// literals; decimals are read from their source text, never through a
// binary double. Throws Error{kParse} on malformed input, naming the field.
GameSpec parse_spec(std::string_view json_text);

// parse_spec followed by validate_spec.
GameSpec load_spec(std::string_view json_text);
GameSpec load_spec_file(const std::string& path);

// Emits "UE"/"UM" when the table matches one of them, the explicit array
// otherwise. parse_spec(spec_to_json(s).dump()) == s.
nlohmann::json spec_to_json(const GameSpec& spec);

inline nlohmann::json rational_json(const Rational& r) { return r.str(); }

}  // namespace teamcomp
