#include <gtest/gtest.h>

#include <sstream>

#include "oco/config.hpp"
#include "oco/game.hpp"
#include "oco/log_io.hpp"

namespace oco {
namespace {

KeyValues parse(const std::string& text) {
  std::istringstream in(text);
  return parse_key_values(in);
}

TEST(KeyValues, CommentsAndDuplicates) {
  const KeyValues kv = parse("# header\nT = 10\n\n seeds=1..3 \n");
  EXPECT_EQ(kv.at("T"), "10");
  EXPECT_EQ(kv.at("seeds"), "1..3");
  EXPECT_THROW(parse("T=1\nT=2\n"), ConfigError);
  EXPECT_THROW(parse("nonsense\n"), ConfigError);
}

TEST(BuildConfig, Defaults) {
  const ExperimentConfig c = build_config(parse("seeds = 1..4\n"));
  EXPECT_EQ(c.setup.engine, Engine::ONES);
  EXPECT_EQ(c.seeds.size(), 4u);
  EXPECT_FALSE(c.bounds.empty());
  EXPECT_EQ(c.eval.x_selection, XSelection::Check);
}

TEST(BuildConfig, AutoStepUsesDiameterOverG) {
  const ExperimentConfig c = build_config(parse(
      "mirror.kind=sqnorm\nset.kind=ball\nset.radius=2\nschedule.eta.kind=inv_sqrt\n"
      "schedule.eta.c=auto\nadversary.G=4\nstrategy=S\n"));
  EXPECT_DOUBLE_EQ(c.setup.schedule.eta.c, 1.0);
}

TEST(BuildConfig, Errors) {
  EXPECT_THROW(build_config(parse("bogus.key=1\n")), ConfigError);
  EXPECT_THROW(build_config(parse("bounds=olp_static_eta\n")), ConfigError);
  EXPECT_THROW(build_config(parse("mirror.kind=entropy\nset.kind=ball\n")), ConfigError);
  EXPECT_THROW(build_config(parse("set.dim=3\nmirror.anchor=0.5,0.5\n")), ConfigError);
  EXPECT_THROW(build_config(parse("adversary.adaptive=true\nhint.kind=perfect\n")), ConfigError);
  EXPECT_THROW(build_config(parse("T=0\n")), ConfigError);
  EXPECT_THROW(build_config(parse("adversary.kind=monotone\nmirror.kind=sqnorm\n")), ConfigError);
}

TEST(Parsing, VectorsAndMatrices) {
  EXPECT_EQ(parse_vector("k", "1, 2;3").size(), 3);
  const Mat m = parse_matrix("k", "1,2;3,4");
  EXPECT_EQ(m(1, 0), 3.0);
  EXPECT_THROW(parse_matrix("k", "1,2;3"), ConfigError);
  EXPECT_EQ(parse_real("k", "inf"), kInf);
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(LogCsv, RoundTripIsExact) {
  for (const char* text :
       {"mirror.kind=entropy\nset.dim=4\nhint.kind=last\nT=30\nseed=7\n",
        "mirror.kind=sqnorm\nset.kind=box\nset.dim=2\nset.lower=-1,-1\nset.upper=1,1\n"
        "strategy=OGP\nschedule.theta.kind=sqrt\nadversary.kind=quadratic\ncomparator.kind=drift\n"
        "T=25\nseed=3\n",
        "mirror.kind=sqnorm\nstrategy=OGP\nadversary.kind=monotone\ncomparator.kind=static\nT=12\n"}) {
    const KeyValues kv = parse(text);
    const ExperimentConfig cfg = build_config(kv);
    GameSetup setup = cfg.setup;
    setup.seed = cfg.seeds.front();
    const GameLog log = play_game(setup);
    std::stringstream buf;
    write_log_csv(buf, log, kv);
    const LoadedLog back = read_log_csv(buf);
    ASSERT_EQ(back.log.rounds.size(), log.rounds.size());
    for (std::size_t t = 0; t < log.rounds.size(); ++t) {
      const RoundRecord& a = log.rounds[t];
      const RoundRecord& b = back.log.rounds[t];
      EXPECT_EQ(a.play, b.play);
      EXPECT_EQ(a.gradient, b.gradient);
      EXPECT_EQ(a.hint, b.hint);
      EXPECT_EQ(a.tilde_dual, b.tilde_dual);
      EXPECT_EQ(a.check_dual, b.check_dual);
      EXPECT_EQ(a.eta, b.eta);
      EXPECT_EQ(a.loss_value, b.loss_value);
      EXPECT_EQ(log.comparator.points[t], back.log.comparator.points[t]);
    }
    EXPECT_EQ(log.lookahead.tilde_dual, back.log.lookahead.tilde_dual);
    for (BoundId id : cfg.bounds)
      EXPECT_EQ(evaluate_bound(id, log, log.comparator).total_bound,
                evaluate_bound(id, back.log, back.log.comparator).total_bound);
  }
}

TEST(LogCsv, RejectsGarbage) {
  std::istringstream in("not a log\n");
  EXPECT_THROW(read_log_csv(in), ConfigError);
}

}  // namespace
}  // namespace oco
