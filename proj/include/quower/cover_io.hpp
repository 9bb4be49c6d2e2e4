#pragma once

#include "quower/board.hpp"
#include "quower/projective.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace quower {

inline constexpr const char* kToolVersion = "0.1.0";

// JSON shape, shared envelope:
//   {"kind": "board"|"short", "size": N, "verified": bool, "producer": str, ...}
// board:  {"n": int, "variant": "full"|"punctured", "indexing": "zero-based",
//          "centers": [[a, b], ...]}
// short:  {"q": int, "field": {"p", "k", "modulus", "generator"},
//          "centers": [[[dx...],[dy...],[dz...]], ...]}  (coefficient lists,
//          constant term first, matching the field's modulus convention)

nlohmann::json board_to_json(const BoardCover& c, bool verified, const std::string& producer);
nlohmann::json short_to_json(const ShortCover& c, bool verified, const std::string& producer);

using AnyCover = std::variant<BoardCover, ShortCover>;

// Validates and loads either kind. The verified flag is not trusted: callers
// re-check with is_cover / is_short_cover. Throws std::invalid_argument with
// a field-specific message on malformed documents.
AnyCover cover_from_json(const nlohmann::json& j);

AnyCover load_cover_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace quower
