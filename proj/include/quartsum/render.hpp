#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "quartsum/parametrization.hpp"
#include "quartsum/quartet.hpp"
#include "quartsum/search.hpp"

namespace quartsum {

// JSON documents use insertion-ordered objects and render every integer or
// rational as a decimal string, so a parse/dump cycle reproduces the bytes.
using Json = nlohmann::ordered_json;

Json to_json(const Quartet& q);
Json to_json(const DerivationTrace& trace);
Json to_json(std::span<const SearchHit> hits);

/// Stable textual form used by every command that prints JSON.
std::string dump(const Json& doc);

/// "a1^4 + b1^4 = a2^4 + b2^4"
std::string to_string(const Quartet& q);

/// One "name = value" line per quantity in derivation order, followed by
/// the canonical quartet as lhs/rhs lists and a verified flag.
std::string render_text(const DerivationTrace& trace);

/// One line per hit ("sum = a^4 + b^4 = c^4 + d^4 ...") and a count line.
std::string render_text(std::span<const SearchHit> hits);

}  // namespace quartsum
