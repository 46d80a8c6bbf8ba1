#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oco/bounds.hpp"
#include "oco/game_log.hpp"
#include "oco/monotone.hpp"

namespace oco {

/// Flat `key = value` pairs with dotted keys. Ordered so that serialization
/// is byte-stable.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in, const std::string& source = "<config>");
KeyValues read_config_file(const std::string& path);

struct MonotoneConfig {
  std::string op = "skew";
  int dimension = 2;
  Mat matrix;
  Vec vector;
  double scale = 1.0;
  int quadrature = kDefaultQuadrature;
  int n_max = 3;
  int instances = 20;
  int loops = 20;
  RegretSearch search;
};

struct ExperimentConfig {
  KeyValues raw;
  GameSetup setup;
  std::vector<std::uint64_t> seeds;
  std::vector<BoundId> bounds;  // validated against setup
  double tolerance = 1e-7;
  EvalOptions eval;
  MonotoneConfig monotone;
  std::optional<FeasibleSet> monotone_set;
};

/// Builds and validates a config. Throws ConfigError on unknown keys,
/// malformed values or bounds incompatible with the strategy/map pair.
ExperimentConfig build_config(const KeyValues& kv);

MonotoneOperator make_operator(const MonotoneConfig& cfg, std::uint64_t seed);

/// Keys accepted as sweep axes.
const std::vector<std::string>& numeric_keys();

double parse_real(const std::string& key, const std::string& value);
Vec parse_vector(const std::string& key, const std::string& value);
Mat parse_matrix(const std::string& key, const std::string& value);
std::string format_real(double v);
std::string format_vector(const Vec& v);

}  // namespace oco
