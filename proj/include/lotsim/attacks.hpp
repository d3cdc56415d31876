// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/chain.hpp>
#include <lotsim/error.hpp>
#include <lotsim/fomo3d.hpp>
#include <lotsim/guards.hpp>

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lotsim
{
/// Off-chain replica of the airdrop roll the game will perform for `caller`
/// in block `env` against `tracker`. An overflowing seed makes the contract
/// revert, which the replica reports as "no win".
bool predict_airdrop(const BlockEnv& env, const Address& caller, const U256& tracker);

/// predict_airdrop() for many triples, hashed through the vector Keccak kernel.
std::vector<bool> predict_airdrop_batch(std::span<const BlockEnv> envs,
    std::span<const Address> callers, std::span<const U256> trackers);

struct BuyDecision
{
    bool attempted = false;
    bool won = false;
    U256 prize;
};

/// One block of the seed-prediction attack: read the tracker the game will
/// roll against, predict, and buy (with `value`) only on a predicted hit.
BuyDecision selective_buy_step(
    Chain& chain, Fomo3dLite& game, const Address& attacker, const U256& value);

struct AttackResult
{
    GuardChoice guard = GuardChoice::none;
    bool bypassed = false;
    std::optional<Errc> error;  ///< set when the guard (or anything else) blocked the buy
    std::string message;
    std::optional<Address> contract;  ///< attacker contract, when deployment survived
};

/// Deploys a contract whose constructor buys a key from `game`, forwarding a
/// signature made by `funder` over the call data. Blocked outcomes are data.
AttackResult constructor_bypass_attack(
    Chain& chain, Fomo3dLite& game, const Address& funder, const U256& value);

enum class CallerClass
{
    eoa_direct,
    contract_post_deploy,
    contract_in_constructor,
};

std::string_view to_string(CallerClass c) noexcept;

inline constexpr std::array<CallerClass, 3> all_caller_classes{
    CallerClass::eoa_direct, CallerClass::contract_post_deploy, CallerClass::contract_in_constructor};
inline constexpr std::array<GuardChoice, 3> all_guards{
    GuardChoice::codesize, GuardChoice::signature, GuardChoice::origin};

/// passes[caller][guard], indexed in all_caller_classes / all_guards order.
struct GuardMatrix
{
    std::array<std::array<bool, 3>, 3> passes{};

    [[nodiscard]] bool at(CallerClass c, GuardChoice g) const;
    friend bool operator==(const GuardMatrix&, const GuardMatrix&) = default;
};

/// The expected outcome table: codesize admits EOAs and constructors, origin
/// admits only EOAs, signature admits only an EOA with a valid self-signature.
GuardMatrix expected_guard_matrix() noexcept;

/// Attempts a real key purchase from each caller class against a game carrying
/// each guard, on fresh chains seeded by `seed`.
GuardMatrix run_guard_matrix(std::uint64_t seed);

/// players[lottery_random(env, players) % players.size()]. Errc::empty_pool if empty.
Address forecast_lottery_winner(const BlockEnv& env, std::span<const Address> players);
}  // namespace lotsim
