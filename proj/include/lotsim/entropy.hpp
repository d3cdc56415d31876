// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/address.hpp>
#include <lotsim/chain.hpp>
#include <lotsim/keccak.hpp>
#include <lotsim/u256.hpp>

#include <initializer_list>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace lotsim
{
/// One `abi.encodePacked` argument. Only the two kinds the contract formulas use.
using PackedItem = std::variant<U256, Address>;
using PackedBytes = std::vector<std::uint8_t>;

/// U256 -> 32 bytes big-endian, Address -> its 20 bytes, concatenated without padding.
PackedBytes encode_packed(std::span<const PackedItem> items);
PackedBytes encode_packed(std::initializer_list<PackedItem> items);

/// The Fomo3D airdrop seed:
///
///   keccak256(timestamp + difficulty + keccak256(coinbase) / timestamp
///             + gaslimit + keccak256(sender) / timestamp + number)
///
/// with SafeMath-checked additions (Errc::overflow).
U256 airdrop_seed(const BlockEnv& env, const Address& sender);

/// `(seed - (seed / 1000) * 1000) < tracker`, evaluated literally.
bool airdrop_roll(const U256& seed, const U256& tracker);

/// Many airdrop seeds at once over the vector Keccak kernel. Element i pairs
/// envs[i] with senders[i]; nullopt marks an input whose sum overflows.
std::vector<std::optional<U256>> airdrop_seeds(
    std::span<const BlockEnv> envs, std::span<const Address> senders);

/// The lottery's `uint(keccak256(block.difficulty, now, players))`.
U256 lottery_random(const BlockEnv& env, std::span<const Address> players);
}  // namespace lotsim
