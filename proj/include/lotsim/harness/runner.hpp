// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/harness/report.hpp>
#include <lotsim/harness/scenario.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lotsim::harness
{
struct RunOptions
{
    unsigned threads = 1;        ///< 0 picks hardware_concurrency
    bool reverse_order = false;  ///< run trials last-to-first (sequential only)
};

/// Independent 64-bit seed for (trial, stream), split from the scenario seed with keccak.
std::uint64_t derive_seed(std::uint64_t scenario_seed, std::uint64_t trial, std::uint64_t stream);

/// Runs every trial on its own chain and folds the results in trial order.
/// Conservation and contract invariants are checked after every step; a
/// violation aborts with Errc::invariant_violation naming the step.
SimReport run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

struct FixtureResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Six accounts bet, draw and refund against the lottery, checked exactly.
std::vector<FixtureResult> run_fixtures(std::uint64_t seed);
}  // namespace lotsim::harness
