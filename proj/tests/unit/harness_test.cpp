// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <lotsim/harness/runner.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace
{
using namespace lotsim;
using namespace lotsim::harness;
using lotsim::test::error_code_of;

const std::filesystem::path scenario_dir{LOTSIM_SCENARIO_DIR};

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in{p, std::ios::binary};
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("lotsim_" + name);
}

TEST(ScenarioLoad, MinimalFileGetsDefaults)
{
    const auto cfg = parse_scenario("game: lottery\nstrategies: [honest_lottery_player]\n");
    EXPECT_EQ(cfg.game, GameKind::lottery);
    EXPECT_EQ(cfg.params.fomo.key_price, milli_ether(10));
    EXPECT_EQ(cfg.params.fomo.airdrop_min_qualifying, milli_ether(100));
    EXPECT_EQ(cfg.params.fomo.tracker_init, U256{0});
    EXPECT_EQ(cfg.n_players, 6u);
    EXPECT_EQ(cfg.randomness.source.kind, SourceKind::block_vars);
}

TEST(ScenarioLoad, TrackerInitBound)
{
    try
    {
        parse_scenario("game: fomo3d_lite\nstrategies: [honest_buyer]\n"
                       "game_params: {tracker_init: 1000}\n");
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::validation_error);
        EXPECT_NE(e.detail().find("tracker_init"), std::string::npos);
    }
    EXPECT_NO_THROW(parse_scenario(
        "game: fomo3d_lite\nstrategies: [honest_buyer]\ngame_params: {tracker_init: 999}\n"));
}

TEST(ScenarioLoad, UnknownKeysRejected)
{
    try
    {
        parse_scenario("game: lottery\nstrategies: [honest_lottery_player]\nplayers: 6\n");
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::validation_error);
        EXPECT_NE(e.detail().find("players"), std::string::npos);
    }
    EXPECT_EQ(error_code_of([] {
        parse_scenario("game: fomo3d_lite\nstrategies:\n  - kind: honest_buyer\n"
                       "    params: {speed: 3}\n");
    }),
        Errc::validation_error);
    EXPECT_EQ(error_code_of([] {
        parse_scenario("game: lottery\nstrategies: [honest_lottery_player]\n"
                       "game_params: {reveal_deadline: 3}\n");
    }),
        Errc::validation_error);
}

TEST(ScenarioLoad, FieldValidation)
{
    const auto bad = [](const std::string& text) {
        return error_code_of([&] { parse_scenario(text); });
    };
    EXPECT_EQ(bad("game: lottery\nstrategies: [honest_buyer]\n"), Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nstrategies: []\n"), Errc::validation_error);
    EXPECT_EQ(bad("game: roulette\nstrategies: [honest_lottery_player]\n"), Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\ntrials: 0\nstrategies: [honest_lottery_player]\n"),
        Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nblocks: -3\nstrategies: [honest_lottery_player]\n"),
        Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nn_players: 0\nstrategies: [honest_lottery_player]\n"),
        Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nguard: magic\nstrategies: [honest_lottery_player]\n"),
        Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nrandomness_source: dice\nstrategies: [honest_lottery_player]\n"),
        Errc::validation_error);
    EXPECT_EQ(bad("game: lottery\nstrategies: [honest_lottery_player]\n"
                  "game_params: {withhold_probability: 1.5}\n"),
        Errc::validation_error);
}

TEST(ScenarioLoad, ParseErrorCarriesLine)
{
    try
    {
        parse_scenario("game: lottery\nstrategies: [honest_lottery_player\nname: x\n", "bad.yaml");
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::parse_error);
        EXPECT_NE(e.detail().find("bad.yaml:"), std::string::npos) << e.detail();
    }
}

TEST(ScenarioLoad, MissingFileIsIoError)
{
    EXPECT_EQ(error_code_of([] { load_scenario(scenario_dir / "no_such_file.yaml"); }),
        Errc::io_error);
}

TEST(ScenarioLoad, ShippedScenariosValidate)
{
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator{scenario_dir})
    {
        if (entry.path().extension() != ".yaml")
            continue;
        EXPECT_NO_THROW(load_scenario(entry.path())) << entry.path();
        ++count;
    }
    EXPECT_GE(count, 8);
}

TEST(Seeds, DerivedStreamsDiffer)
{
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 0, 1));
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(1, 1, 0));
    EXPECT_NE(derive_seed(1, 0, 0), derive_seed(2, 0, 0));
    EXPECT_EQ(derive_seed(5, 6, 7), derive_seed(5, 6, 7));
}

TEST(Run, SixAccountFixtureScenario)
{
    const auto cfg = load_scenario(scenario_dir / "fixture_six_accounts.yaml");
    const auto report = run_scenario(cfg);
    EXPECT_EQ(report.draws, 1u);
    ASSERT_EQ(report.draw_wins.size(), 6u);
    EXPECT_EQ(std::accumulate(report.draw_wins.begin(), report.draw_wins.end(), 0ull), 1ull);
    ASSERT_EQ(report.strategies.size(), 1u);
    EXPECT_EQ(report.strategies[0].attempts, 6u);
    EXPECT_EQ(report.strategies[0].net_balance_delta_wei.to_string(), "0");
    EXPECT_TRUE(report.conservation_check);
    EXPECT_EQ(report.guard_matrix, expected_guard_matrix());
}

TEST(Run, DeterministicAcrossRunsThreadsAndOrder)
{
    const auto cfg = load_scenario(scenario_dir / "mitigation_commit_reveal.yaml");
    const auto a = serialize(run_scenario(cfg), ReportFormat::json);
    const auto b = serialize(run_scenario(cfg), ReportFormat::json);
    const auto c = serialize(run_scenario(cfg, {4, false}), ReportFormat::json);
    const auto d = serialize(run_scenario(cfg, {1, true}), ReportFormat::json);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    EXPECT_EQ(a, d);

    auto other = cfg;
    other.scenario_seed += 1;
    EXPECT_NE(serialize(run_scenario(other), ReportFormat::json), a);
}

TEST(Run, FomoSeedChangesDigest)
{
    auto cfg = load_scenario(scenario_dir / "attack_constructor_bypass.yaml");
    cfg.trials = 1;
    const auto a = run_scenario(cfg);
    cfg.scenario_seed = 999;
    const auto b = run_scenario(cfg);
    EXPECT_NE(a.chain_digest, b.chain_digest);
}

TEST(Report, CsvRowsAndCanonicalEmit)
{
    const auto cfg = load_scenario(scenario_dir / "attack_draw_forecaster.yaml");
    const auto report = run_scenario(cfg);
    const std::string csv = serialize(report, ReportFormat::csv);
    EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')),
        report.strategies.size() + 1);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "strategy,kind,attempts,wins,net_balance_delta_wei");

    const auto p = temp_path("report.json");
    emit_report(report, ReportFormat::json, p);
    const std::string first = read_file(p);
    emit_report(report, ReportFormat::json, p);
    EXPECT_EQ(read_file(p), first);
    std::filesystem::remove(p);

    const auto j = nlohmann::json::parse(first);
    EXPECT_TRUE(j.at("conservation_check").get<bool>());
    EXPECT_TRUE(j.at("strategies")[0].at("net_balance_delta_wei").is_string());
    EXPECT_EQ(j.at("chain_digest").get<std::string>().size(), 64u);
}

TEST(Report, InvalidPathIsIoError)
{
    SimReport r;
    EXPECT_EQ(error_code_of([&] {
        emit_report(r, ReportFormat::csv, "/nonexistent_dir_for_lotsim/x/report.csv");
    }),
        Errc::io_error);
}

TEST(Rates, ZeroWinsAndHalfWidth)
{
    EXPECT_EQ(make_rate(0, 100).rate, 0.0);
    EXPECT_EQ(make_rate(0, 100).half_width, 0.0);
    EXPECT_EQ(make_rate(0, 0).rate, 0.0);
    const Rate r = make_rate(250, 1000);
    EXPECT_DOUBLE_EQ(r.rate, 0.25);
    EXPECT_NEAR(r.half_width, 3 * std::sqrt(0.25 * 0.75 / 1000), 1e-12);
}

TEST(WeiDeltaMath, SignedAccumulation)
{
    WeiDelta d = WeiDelta::between(U256{10}, U256{3});
    EXPECT_EQ(d.to_string(), "-7");
    d += WeiDelta{U256{7}, false};
    EXPECT_EQ(d.to_string(), "0");
    d += WeiDelta{U256{2}, false};
    EXPECT_EQ(d.to_string(), "2");
}

TEST(Fixtures, AllPass)
{
    const auto results = run_fixtures(1);
    EXPECT_EQ(results.size(), 4u);
    for (const auto& f : results)
        EXPECT_TRUE(f.passed) << f.name << ": " << f.detail;
}
}  // namespace
