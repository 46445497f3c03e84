#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "corebound/core_weber.hpp"
#include "corebound/lattice.hpp"
#include "corebound/normal.hpp"
#include "corebound/polyhedra.hpp"
#include "corebound/setsystem.hpp"

namespace corebound::io {

using Json = nlohmann::ordered_json;

/// Errors: MalformedDocument for unreadable files or invalid JSON.
Json read_file(const std::filesystem::path& path);

/// Players are 1-based in every document.
Json coalition_to_json(Coalition s);
Coalition coalition_from_json(const Json& doc);
/// "1,2,4"; the empty coalition is "".
std::string coalition_key(Coalition s);
Coalition coalition_from_key(const std::string& key);

SetSystem load_set_system(const Json& doc);
Json dump_set_system(const SetSystem& f);

PlayerPoset load_poset(const Json& doc);
/// Lists the covering pairs.
Json dump_poset(const PlayerPoset& p);

/// Values are "p/q" strings or JSON integers; floating-point numbers and
/// decimal strings are rejected with InvalidRational. A value for the empty
/// coalition must be zero.
Game load_game(const Json& doc);
Json dump_game(const Game& v);

/// Errors: PlayerOutOfRange when a member leaves 1..n.
NormalCollection load_collection(const Json& doc, int n);
Json dump_collection(const NormalCollection& nc);

Rational rational_from_json(const Json& value);
Json vector_to_json(const RationalVector& v);
Json vrep_to_json(const VRepresentation<Rational>& v);

/// Two-space indentation with arrays of scalars kept on one line.
std::string to_text(const Json& doc);

}  // namespace corebound::io
