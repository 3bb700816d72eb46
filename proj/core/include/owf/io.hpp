#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "owf/coinduction.hpp"
#include "owf/doubling.hpp"
#include "owf/ow_tower.hpp"
#include "owf/pattern.hpp"

namespace owf {

using json = nlohmann::json;

Word word_from_json(const json& j);

// {"alphabet": name, "cells": [[word, symbol], ...]} in canonical cell order.
json pattern_to_json(const Pattern& x);
Pattern pattern_from_json(const json& j);

// {"r", "L", "levels": [...]} plus "window" when the window is not ball(r).
json tower_to_json(const TowerOutput& y);
TowerOutput tower_from_json(const json& j);

struct LoadedConfig {
  CoinductionConfig coinduction;
  std::optional<DoublingConfig> doubling;
  // Normalised form of the input, used for digests.
  json canonical;
};

// {"group": "F2", "theta": [w, w], "iota": [w, w], "Z": "singleton"|"orbit",
//  "enumeration": "length-lex", "max_depth"?, "doubling"?: {"S": [...],
//  "action": "left-translation" | [[h, a*h, b*h], ...]}}
LoadedConfig load_config(const json& j);
LoadedConfig load_config_file(const std::filesystem::path& path);
LoadedConfig default_config();

// FNV-1a 64 of the compact canonical dump, as 16 hex digits.
std::string config_digest(const json& canonical);

}  // namespace owf
