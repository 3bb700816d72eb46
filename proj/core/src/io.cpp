#include "owf/io.hpp"

#include <cstdio>
#include <fstream>

#include "owf/errors.hpp"

namespace owf {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Homomorphism homomorphism_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigError(std::string(name) + " must be a list of two words");
  }
  return {word_from_json(j[0]), word_from_json(j[1])};
}

json homomorphism_to_json(const Homomorphism& h) {
  return json::array({h.image_a.to_string(), h.image_b.to_string()});
}

}  // namespace

Word word_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("word must be a string over {a, A, b, B}");
  return Word::parse(j.get<std::string>());
}

json pattern_to_json(const Pattern& x) {
  json cells = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) cells.push_back(json::array({x.cell(i).to_string(), x.value(i)}));
  return {{"alphabet", x.alphabet().name()}, {"cells", std::move(cells)}};
}

Pattern pattern_from_json(const json& j) {
  const json& alphabet = field(j, "alphabet");
  if (!alphabet.is_string()) throw ParseError("alphabet must be a string");
  const Alphabet a = Alphabet::from_name(alphabet.get<std::string>());
  const json& cells = field(j, "cells");
  if (!cells.is_array()) throw ParseError("cells must be a list");
  std::vector<std::pair<Word, Symbol>> list;
  list.reserve(cells.size());
  for (const json& cell : cells) {
    if (!cell.is_array() || cell.size() != 2 || !cell[1].is_number_unsigned()) {
      throw ParseError("each cell must be [word, symbol]");
    }
    list.emplace_back(word_from_json(cell[0]), cell[1].get<Symbol>());
  }
  return Pattern::from_cells(a, list);
}

json tower_to_json(const TowerOutput& y) {
  const int r = y.window->inner_radius();
  json out{{"r", r}, {"L", y.level_count()}};
  json levels = json::array();
  for (const Pattern& level : y.levels) levels.push_back(pattern_to_json(level));
  out["levels"] = std::move(levels);
  if (r < 0 || !same_cells(y.window, Support::ball(r))) {
    json window = json::array();
    for (const Word& w : y.window->cells()) window.push_back(w.to_string());
    out["window"] = std::move(window);
  }
  return out;
}

TowerOutput tower_from_json(const json& j) {
  const int r = field(j, "r").get<int>();
  const int L = field(j, "L").get<int>();
  TowerOutput y;
  if (j.contains("window")) {
    std::vector<Word> cells;
    for (const json& w : j.at("window")) cells.push_back(word_from_json(w));
    y.window = Support::make(std::move(cells));
  } else {
    if (r < 0) throw ParseError("r must be non-negative");
    y.window = Support::ball(r);
  }
  for (const json& level : field(j, "levels")) y.levels.push_back(pattern_from_json(level));
  if (static_cast<int>(y.levels.size()) != L) {
    throw ParseError("L = " + std::to_string(L) + " but " + std::to_string(y.levels.size()) +
                     " levels given");
  }
  return y;
}

namespace {

LoadedConfig load_config_unchecked(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  LoadedConfig out;
  const std::string group = j.value("group", "F2");
  if (group != "F2") throw ConfigError("unsupported group '" + group + "' (only F2 ships)");
  const std::string enumeration = j.value("enumeration", "length-lex");
  if (enumeration != "length-lex") throw ConfigError("unsupported enumeration '" + enumeration + "'");
  CoinductionConfig& co = out.coinduction;
  if (j.contains("theta")) co.theta = homomorphism_from_json(j.at("theta"), "theta");
  if (j.contains("iota")) co.iota = homomorphism_from_json(j.at("iota"), "iota");
  if (j.contains("Z")) co.z_kind = z_kind_from_string(j.at("Z").get<std::string>());
  if (j.contains("max_depth")) co.max_depth = j.at("max_depth").get<std::size_t>();

  out.canonical = {{"group", group},
                   {"enumeration", enumeration},
                   {"theta", homomorphism_to_json(co.theta)},
                   {"iota", homomorphism_to_json(co.iota)},
                   {"Z", to_string(co.z_kind)},
                   {"max_depth", co.max_depth}};

  if (j.contains("doubling")) {
    const json& d = j.at("doubling");
    DoublingConfig dc;
    dc.S.clear();
    for (const json& s : field(d, "S")) dc.S.push_back(word_from_json(s));
    if (dc.S.empty()) throw ConfigError("doubling S must be non-empty");
    json canonical_action;
    const json& action = field(d, "action");
    if (action.is_string()) {
      if (action.get<std::string>() != "left-translation") {
        throw ConfigError("doubling action must be \"left-translation\" or a table");
      }
      dc.action = DoublingConfig::Action::left_translation;
      dc.index_of(letter(Generator::a));
      dc.index_of(letter(Generator::b));
      canonical_action = "left-translation";
    } else if (action.is_array()) {
      dc.action = DoublingConfig::Action::table;
      for (const json& row : action) {
        if (!row.is_array() || row.size() != 3) throw ParseError("action rows are [h, a*h, b*h]");
        dc.table.insert_or_assign(word_from_json(row[0]),
                                  std::make_pair(word_from_json(row[1]), word_from_json(row[2])));
      }
      canonical_action = json::array();
      for (const auto& [h, images] : dc.table) {
        canonical_action.push_back(
            json::array({h.to_string(), images.first.to_string(), images.second.to_string()}));
      }
    } else {
      throw ConfigError("doubling action must be \"left-translation\" or a table");
    }
    json s_list = json::array();
    for (const Word& s : dc.S) s_list.push_back(s.to_string());
    out.canonical["doubling"] = {{"S", std::move(s_list)}, {"action", std::move(canonical_action)}};
    out.doubling = std::move(dc);
  }
  return out;
}

}  // namespace

LoadedConfig load_config(const json& j) {
  try {
    return load_config_unchecked(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
}

LoadedConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return load_config(j);
}

LoadedConfig default_config() { return load_config(json::object()); }

std::string config_digest(const json& canonical) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace owf
