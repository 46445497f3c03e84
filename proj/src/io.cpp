#include "corebound/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "corebound/error.hpp"

namespace corebound::io {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::MalformedDocument, what);
}

int read_player_count(const Json& doc) {
  require(doc.is_object() && doc.contains("n") && doc["n"].is_number_integer(), "expected an integer field 'n'");
  const auto n = doc["n"].get<long long>();
  if (n > kMaxPlayers) throw Error(ErrorCode::UniverseTooLarge, "at most 16 players are supported");
  require(n >= 1, "'n' must be positive");
  return static_cast<int>(n);
}

}  // namespace

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, path.string() + ": " + e.what());
  }
}

Json coalition_to_json(Coalition s) {
  Json out = Json::array();
  for (int p : s.players()) out.push_back(p + 1);
  return out;
}

Coalition coalition_from_json(const Json& doc) {
  require(doc.is_array(), "a coalition must be an array of player labels");
  Coalition s;
  for (const auto& label : doc) {
    require(label.is_number_integer(), "player labels must be integers");
    const auto p = label.get<long long>();
    if (p < 1 || p > kMaxPlayers) throw Error(ErrorCode::PlayerOutOfRange, "player label " + std::to_string(p));
    const Coalition one = Coalition::singleton(static_cast<int>(p - 1));
    if (s.intersects(one)) throw Error(ErrorCode::MalformedDocument, "player " + std::to_string(p) + " listed twice");
    s = s | one;
  }
  return s;
}

std::string coalition_key(Coalition s) {
  std::string out;
  for (int p : s.players()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p + 1);
  }
  return out;
}

Coalition coalition_from_key(const std::string& key) {
  Coalition s;
  if (key.empty()) return s;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    const std::size_t comma = std::min(key.find(',', pos), key.size());
    const std::string part = key.substr(pos, comma - pos);
    require(!part.empty() && part.size() <= 3 && part.find_first_not_of("0123456789") == std::string::npos,
            "bad coalition key '" + key + "'");
    const int p = std::stoi(part);
    if (p < 1 || p > kMaxPlayers) throw Error(ErrorCode::PlayerOutOfRange, "player label " + part);
    s = s | Coalition::singleton(p - 1);
    pos = comma + 1;
  }
  return s;
}

SetSystem load_set_system(const Json& doc) {
  const int n = read_player_count(doc);
  require(doc.contains("sets") && doc["sets"].is_array(), "expected an array field 'sets'");
  std::vector<Coalition> sets;
  for (const auto& entry : doc["sets"]) {
    const Coalition s = coalition_from_json(entry);
    if (!s.is_subset_of(Coalition::full(n))) {
      throw Error(ErrorCode::PlayerOutOfRange, "set " + s.label(kMaxPlayers) + " leaves 1.." + std::to_string(n));
    }
    sets.push_back(s);
  }
  return SetSystem(PlayerUniverse(n), std::move(sets));
}

Json dump_set_system(const SetSystem& f) {
  Json sets = Json::array();
  for (Coalition s : f.sets()) sets.push_back(coalition_to_json(s));
  return Json{{"n", f.players()}, {"sets", std::move(sets)}};
}

PlayerPoset load_poset(const Json& doc) {
  const int n = read_player_count(doc);
  require(doc.contains("relations") && doc["relations"].is_array(), "expected an array field 'relations'");
  std::vector<std::pair<int, int>> strict;
  for (const auto& rel : doc["relations"]) {
    require(rel.is_array() && rel.size() == 2 && rel[0].is_number_integer() && rel[1].is_number_integer(),
            "each relation must be a pair of player labels");
    strict.emplace_back(rel[0].get<int>() - 1, rel[1].get<int>() - 1);
  }
  return PlayerPoset::from_relations(n, strict);
}

Json dump_poset(const PlayerPoset& p) {
  Json rels = Json::array();
  for (auto [lo, hi] : p.covering_pairs()) rels.push_back(Json::array({lo + 1, hi + 1}));
  return Json{{"n", p.size()}, {"relations", std::move(rels)}};
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) {
    throw Error(ErrorCode::InvalidRational, "decimal value " + value.dump() + "; write it as \"p/q\"");
  }
  throw Error(ErrorCode::InvalidRational, "expected a \"p/q\" string, got " + value.dump());
}

Game load_game(const Json& doc) {
  require(doc.is_object() && doc.contains("system") && doc.contains("values") && doc["values"].is_object(),
          "a game needs 'system' and 'values'");
  SetSystem f = load_set_system(doc["system"]);
  std::map<Coalition, Rational> values;
  for (const auto& [key, value] : doc["values"].items()) {
    const Coalition s = coalition_from_key(key);
    const Rational r = rational_from_json(value);
    if (s.empty()) {
      if (r != 0) throw Error(ErrorCode::MalformedDocument, "the empty coalition must have value 0");
      continue;
    }
    require(values.emplace(s, r).second, "coalition key '" + key + "' given twice");
  }
  return Game::from_map(std::move(f), values);
}

Json dump_game(const Game& v) {
  Json values = Json::object();
  const auto sets = v.system().sets();
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (sets[k].empty()) continue;
    values[coalition_key(sets[k])] = format_rational(v.values()[k]);
  }
  return Json{{"system", dump_set_system(v.system())}, {"values", std::move(values)}};
}

NormalCollection load_collection(const Json& doc, int n) {
  require(doc.is_object() && doc.contains("sets") && doc["sets"].is_array(), "expected an array field 'sets'");
  NormalCollection nc;
  if (doc.contains("kind")) {
    require(doc["kind"].is_string(), "'kind' must be a string");
    nc.kind = parse_collection_kind(doc["kind"].get<std::string>());
  }
  for (const auto& entry : doc["sets"]) {
    const Coalition s = coalition_from_json(entry);
    if (!s.is_subset_of(Coalition::full(n))) {
      throw Error(ErrorCode::PlayerOutOfRange, "set leaves 1.." + std::to_string(n));
    }
    nc.sets.push_back(s);
  }
  return nc;
}

Json dump_collection(const NormalCollection& nc) {
  Json sets = Json::array();
  for (Coalition s : nc.sets) sets.push_back(coalition_to_json(s));
  return Json{{"kind", std::string(to_string(nc.kind))}, {"sets", std::move(sets)}};
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v[i]));
  return out;
}

Json vrep_to_json(const VRepresentation<Rational>& v) {
  auto list = [](const std::vector<RationalVector>& vs) {
    Json out = Json::array();
    for (const auto& x : vs) out.push_back(vector_to_json(x));
    return out;
  };
  return Json{{"empty", v.empty},
              {"vertices", list(v.vertices)},
              {"rays", list(v.rays)},
              {"lineality", list(v.lineality)}};
}

namespace {

bool is_flat(const Json& doc) {
  return std::none_of(doc.begin(), doc.end(), [](const Json& x) { return x.is_structured() && !x.empty(); });
}

void write_text(const Json& doc, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (doc.is_object() && !doc.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : doc.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      write_text(value, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (doc.is_array() && !doc.empty() && !is_flat(doc)) {
    out += "[\n";
    for (std::size_t k = 0; k < doc.size(); ++k) {
      if (k > 0) out += ",\n";
      out += pad;
      write_text(doc[k], indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    const std::string packed = doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
    if (!doc.is_array()) {
      out += packed;
      return;
    }
    // dump() packs arrays as [1,2]; add a space after each separator.
    for (char c : packed) {
      out += c;
      if (c == ',') out += ' ';
    }
  }
}

}  // namespace

std::string to_text(const Json& doc) {
  std::string out;
  write_text(doc, 0, out);
  return out + "\n";
}

}  // namespace corebound::io
