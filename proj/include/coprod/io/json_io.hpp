#pragma once

#include "coprod/arith/poly.hpp"
#include "coprod/arith/rat.hpp"
#include "coprod/group/word.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace coprod {

using Json = nlohmann::ordered_json;

/// {"labels": [...], "table": [[...]]}
Json group_to_json(const FiniteGroup& G);
/// Accepts the table form or {"permutations": [[2,1], ...]} (one-line image
/// notation, 1-based). Throws ValidationError.
FiniteGroup group_from_json(const Json& j);

/// [{"side": "G", "element": "<label>"}, ...]
Json word_to_json(const FreeProduct& fp, const Word& w);
/// Parses and normalizes a raw syllable sequence. Throws ValidationError.
Word word_from_json(const FreeProduct& fp, const Json& j);

/// Coefficients lowest degree first, each "num/den".
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// Parses JSON text; malformed input becomes a ValidationError naming `what`.
Json parse_json(const std::string& text, const std::string& what);
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline; byte-stable for equal values.
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace coprod
