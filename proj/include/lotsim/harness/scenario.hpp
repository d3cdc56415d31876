// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/fomo3d.hpp>
#include <lotsim/guards.hpp>
#include <lotsim/mitigations.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lotsim::harness
{
enum class GameKind
{
    lottery,
    fomo3d_lite,
};

enum class StrategyKind
{
    honest_buyer,
    selective_predictor,
    constructor_bypass,
    honest_lottery_player,
    draw_forecaster,
};

std::string_view to_string(GameKind g) noexcept;
std::string_view to_string(StrategyKind k) noexcept;

struct Strategy
{
    StrategyKind kind = StrategyKind::honest_lottery_player;
    std::uint64_t period = 1;       ///< act every `period` blocks (buyers, bypass)
    U256 value_wei;                 ///< msg.value per buy; 0 means "game default"
    std::uint64_t lead_blocks = 0;  ///< forecaster: blocks between forecast and draw
};

/// Randomness for lottery draws. A non-empty schedule rotates between sources.
struct SourceConfig
{
    RandomSource source;
    std::vector<RandomSource> schedule;
    U256 rotation_period = 10;
};

struct GameParams
{
    FomoParams fomo;
    U256 initial_balance = ether * U256{100};
    std::uint64_t reveal_blocks = 2;
    double withhold_probability = 0.0;
    U256 commit_deposit;
};

struct ScenarioConfig
{
    std::string name = "unnamed";
    std::uint64_t scenario_seed = 1;
    std::uint64_t trials = 1;
    std::uint64_t blocks = 100;  ///< fomo: blocks simulated; lottery: draw rounds
    U256 block_interval_seconds = 12;
    std::uint64_t n_players = 6;
    GameKind game = GameKind::lottery;
    GuardChoice guard = GuardChoice::codesize;
    SourceConfig randomness;
    GameParams params;
    std::vector<Strategy> strategies;
};

/// Parses and validates a scenario document. Throws Errc::io_error when the
/// file cannot be read, Errc::parse_error (with line) on malformed YAML and
/// Errc::validation_error naming the field otherwise.
ScenarioConfig load_scenario(const std::filesystem::path& path);
ScenarioConfig parse_scenario(std::string_view text, std::string_view origin = "<inline>");

/// Bounds and cross-field checks; throws Errc::validation_error.
void validate(const ScenarioConfig& config);

/// Canonical echo of the fully defaulted configuration.
nlohmann::json to_json(const ScenarioConfig& config);
}  // namespace lotsim::harness
