#pragma once

#include <iosfwd>
#include <string>

#include "oco/config.hpp"
#include "oco/game_log.hpp"

namespace oco {

/// Round-trippable CSV game log. Metadata sits in leading `# key=value`
/// lines (the originating config plus seed); one row per round and a final
/// `lookahead` row. Reals are written with 17 significant digits.
void write_log_csv(std::ostream& out, const GameLog& log, const KeyValues& config);
void write_log_csv(const std::string& path, const GameLog& log, const KeyValues& config);

struct LoadedLog {
  GameLog log;
  ExperimentConfig config;
};

/// Throws ConfigError for malformed or incomplete logs.
LoadedLog read_log_csv(std::istream& in, const std::string& source = "<log>");
LoadedLog read_log_csv(const std::string& path);

}  // namespace oco
