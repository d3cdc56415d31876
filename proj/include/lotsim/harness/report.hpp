// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/attacks.hpp>
#include <lotsim/keccak.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lotsim::harness
{
/// Signed wei amount; reports need negative balance changes.
struct WeiDelta
{
    U256 magnitude;
    bool negative = false;

    static WeiDelta between(const U256& before, const U256& after);

    WeiDelta& operator+=(const WeiDelta& other);
    [[nodiscard]] std::string to_string() const;  ///< "-123", "0", "456"

    friend bool operator==(const WeiDelta&, const WeiDelta&) = default;
};

struct StrategyStats
{
    std::string name;  ///< unique label, "<kind>" or "<kind>_<n>"
    std::string kind;
    std::uint64_t attempts = 0;
    std::uint64_t wins = 0;
    WeiDelta net_balance_delta_wei;
    std::uint64_t qualifying_buys = 0;    ///< fomo buyers only
    std::uint64_t tracker_sum_at_roll = 0;  ///< sum of tracker values rolled against

    friend bool operator==(const StrategyStats&, const StrategyStats&) = default;
};

struct SimReport
{
    nlohmann::json config_echo;
    std::uint64_t trials = 0;
    std::vector<StrategyStats> strategies;
    std::vector<std::uint64_t> draw_wins;  ///< per player index, lottery only
    std::uint64_t draws = 0;
    std::uint64_t forecasts = 0;
    std::uint64_t forecast_hits = 0;
    std::uint64_t rounds_settled = 0;
    std::uint64_t withheld_reveals = 0;
    U256 slashed_deposits;
    bool conservation_check = true;
    GuardMatrix guard_matrix;
    Digest chain_digest;  ///< keccak over per-trial final state digests, in trial order
};

/// Empirical frequency with a 3-sigma binomial half-width.
struct Rate
{
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double rate = 0.0;
    double half_width = 0.0;
};

Rate make_rate(std::uint64_t successes, std::uint64_t trials) noexcept;

struct RateSummary
{
    std::vector<std::pair<std::string, Rate>> strategy_win_rates;  ///< wins / attempts
    /// Airdrop hits per qualifying buy and the mean tracker / 1000 it should match.
    std::vector<std::pair<std::string, std::pair<Rate, double>>> airdrop_rates;
    std::vector<Rate> draw_frequencies;
    std::optional<Rate> forecast_accuracy;
};

RateSummary estimate_rates(const SimReport& report);

enum class ReportFormat
{
    json,
    csv,
};

std::optional<ReportFormat> parse_format(std::string_view name) noexcept;

/// Canonical serializations: sorted keys, wei as decimal strings.
nlohmann::json to_json(const SimReport& report);
std::string serialize(const SimReport& report, ReportFormat format);

/// Throws Errc::io_error when the file cannot be written.
void emit_report(const SimReport& report, ReportFormat format, const std::filesystem::path& path);
}  // namespace lotsim::harness
