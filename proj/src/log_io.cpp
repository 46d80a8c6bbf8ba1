#include "oco/log_io.hpp"

#include <fstream>
#include <sstream>

namespace oco {

namespace {

constexpr const char* kHeader =
    "t,eta,theta,loss_kind,loss_value,play,gradient,hint,tilde_play,tilde_dual,check_dual,"
    "accumulated_dual,loss_a,loss_b,z";
constexpr int kColumns = 15;

std::string format_matrix(const Mat& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += '|';
    out += format_vector(m.row(i).transpose());
  }
  return out;
}

Mat read_matrix(const std::string& key, const std::string& s) {
  if (s.empty()) return Mat();
  std::vector<Vec> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, '|')) rows.push_back(parse_vector(key, row));
  Mat m(static_cast<Eigen::Index>(rows.size()), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ConfigError(key + ": ragged matrix");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

std::vector<std::string> split_columns(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

LossKind loss_kind_from(const std::string& s) {
  if (s == "linear") return LossKind::Linear;
  if (s == "quadratic") return LossKind::Quadratic;
  if (s == "monotone") return LossKind::Monotone;
  throw ConfigError("unknown loss kind '" + s + "'");
}

}  // namespace

void write_log_csv(std::ostream& out, const GameLog& log, const KeyValues& config) {
  out << "# format=oco-log-1\n";
  for (const auto& [key, value] : config) {
    if (key == "seed" || key == "seeds") continue;
    out << "# cfg." << key << '=' << value << '\n';
  }
  out << "# seed=" << log.setup.seed << '\n';
  out << "# T=" << log.horizon() << '\n';
  out << "# clairvoyant=" << (log.clairvoyant_hints ? 1 : 0) << '\n';
  out << kHeader << '\n';
  for (std::size_t i = 0; i < log.rounds.size(); ++i) {
    const RoundRecord& r = log.rounds[i];
    out << r.t << ',' << format_real(r.eta) << ',' << format_real(r.theta) << ','
        << to_string(r.loss.kind) << ',' << (r.loss_value ? format_real(*r.loss_value) : "") << ','
        << format_vector(r.play) << ',' << format_vector(r.gradient) << ','
        << format_vector(r.hint) << ',' << format_vector(r.tilde_play) << ','
        << format_vector(r.tilde_dual) << ',' << format_vector(r.check_dual) << ','
        << format_vector(r.accumulated_dual) << ',' << format_matrix(r.loss.a) << ','
        << format_vector(r.loss.b) << ',' << format_vector(log.comparator.points[i]) << '\n';
  }
  const StepResult& la = log.lookahead;
  out << "lookahead," << format_real(la.eta) << ',' << format_real(la.theta) << ",,,"
      << format_vector(la.play) << ",,," << format_vector(la.tilde_play) << ','
      << format_vector(la.tilde_dual) << ',' << format_vector(la.check_dual) << ','
      << format_vector(la.accumulated_dual) << ",,,\n";
}

void write_log_csv(const std::string& path, const GameLog& log, const KeyValues& config) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_log_csv(out, log, config);
}

LoadedLog read_log_csv(std::istream& in, const std::string& source) {
  KeyValues cfg_kv;
  std::uint64_t seed = 0;
  int horizon = -1;
  bool header_seen = false;
  bool clairvoyant = false;
  std::string line;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> lookahead;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(2, eq - 2);
      std::string value = line.substr(eq + 1);
      if (key.rfind("cfg.", 0) == 0) cfg_kv[key.substr(4)] = value;
      else if (key == "seed") seed = std::stoull(value);
      else if (key == "T") horizon = std::stoi(value);
      else if (key == "clairvoyant") clairvoyant = value == "1";
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw ConfigError(source + ": unexpected header");
      header_seen = true;
      continue;
    }
    auto cols = split_columns(line);
    if (static_cast<int>(cols.size()) != kColumns)
      throw ConfigError(source + ": row with " + std::to_string(cols.size()) + " columns");
    if (cols[0] == "lookahead") lookahead = std::move(cols);
    else rows.push_back(std::move(cols));
  }
  if (!header_seen) throw ConfigError(source + ": missing header");
  if (horizon < 1 || static_cast<int>(rows.size()) != horizon)
    throw ConfigError(source + ": incomplete log (" + std::to_string(rows.size()) + " of " +
                      std::to_string(horizon) + " rounds)");
  if (lookahead.empty()) throw ConfigError(source + ": missing lookahead row");

  cfg_kv["seed"] = std::to_string(seed);
  cfg_kv["T"] = std::to_string(horizon);
  LoadedLog out{GameLog{}, build_config(cfg_kv)};
  GameLog& log = out.log;
  log.setup = out.config.setup;
  log.setup.seed = seed;
  log.clairvoyant_hints = clairvoyant;
  std::vector<Vec> points;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& c = rows[i];
    RoundRecord r;
    r.t = std::stoi(c[0]);
    if (r.t != static_cast<int>(i) + 1) throw ConfigError(source + ": rounds out of order");
    r.eta = parse_real("eta", c[1]);
    r.theta = parse_real("theta", c[2]);
    r.loss.kind = loss_kind_from(c[3]);
    if (!c[4].empty()) r.loss_value = parse_real("loss_value", c[4]);
    r.play = parse_vector("play", c[5]);
    r.gradient = parse_vector("gradient", c[6]);
    r.hint = parse_vector("hint", c[7]);
    r.tilde_play = parse_vector("tilde_play", c[8]);
    r.tilde_dual = parse_vector("tilde_dual", c[9]);
    r.check_dual = parse_vector("check_dual", c[10]);
    r.accumulated_dual = parse_vector("accumulated_dual", c[11]);
    r.loss.a = read_matrix("loss_a", c[12]);
    r.loss.b = parse_vector("loss_b", c[13]);
    points.push_back(parse_vector("z", c[14]));
    const int n = log.setup.mirror.dimension();
    for (const Vec* v : {&r.play, &r.gradient, &r.hint, &r.tilde_play, &r.tilde_dual,
                         &r.check_dual, &r.accumulated_dual, &r.loss.b, &points.back()})
      if (v->size() != n) throw DimensionError(source + ": round " + c[0] + " has a wrong-size vector");
    log.rounds.push_back(std::move(r));
  }
  log.comparator = ComparatorPath::from_points(std::move(points), log.setup.mirror.norms());
  if (log.setup.comparator.kind != ComparatorKind::Drift) log.comparator.is_static = true;
  StepResult& la = log.lookahead;
  la.eta = parse_real("eta", lookahead[1]);
  la.theta = parse_real("theta", lookahead[2]);
  la.play = parse_vector("play", lookahead[5]);
  la.tilde_play = parse_vector("tilde_play", lookahead[8]);
  la.tilde_dual = parse_vector("tilde_dual", lookahead[9]);
  la.check_dual = parse_vector("check_dual", lookahead[10]);
  la.accumulated_dual = parse_vector("accumulated_dual", lookahead[11]);
  return out;
}

LoadedLog read_log_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open log '" + path + "'");
  return read_log_csv(in, path);
}

}  // namespace oco
