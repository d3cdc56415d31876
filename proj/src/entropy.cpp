// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>

#include <stdexcept>

namespace lotsim
{
namespace
{
const U256 thousand{1000};

/// The six-term SafeMath sum, given the two address digests.
U256 seed_preimage(const BlockEnv& env, const U256& coinbase_hash, const U256& sender_hash)
{
    return env.timestamp + env.difficulty + coinbase_hash / env.timestamp + env.gaslimit +
           sender_hash / env.timestamp + env.number;
}
}  // namespace

PackedBytes encode_packed(std::span<const PackedItem> items)
{
    PackedBytes out;
    for (const auto& item : items)
    {
        if (const auto* v = std::get_if<U256>(&item))
        {
            const auto b = v->to_be_bytes();
            out.insert(out.end(), b.begin(), b.end());
        }
        else
        {
            const auto& a = std::get<Address>(item);
            out.insert(out.end(), a.bytes.begin(), a.bytes.end());
        }
    }
    return out;
}

PackedBytes encode_packed(std::initializer_list<PackedItem> items)
{
    return encode_packed(std::span<const PackedItem>{items.begin(), items.size()});
}

U256 airdrop_seed(const BlockEnv& env, const Address& sender)
{
    const U256 coinbase_hash = keccak256(env.coinbase.bytes).to_u256();
    const U256 sender_hash = keccak256(sender.bytes).to_u256();
    const U256 sum = seed_preimage(env, coinbase_hash, sender_hash);
    return keccak256(sum.to_be_bytes()).to_u256();
}

bool airdrop_roll(const U256& seed, const U256& tracker)
{
    return (seed - (seed / thousand) * thousand) < tracker;
}

std::vector<std::optional<U256>> airdrop_seeds(
    std::span<const BlockEnv> envs, std::span<const Address> senders)
{
    if (envs.size() != senders.size())
        throw std::invalid_argument{"airdrop_seeds: envs and senders differ in length"};
    const std::size_t n = envs.size();

    // Stage 1: both address digests for every element in one batch.
    std::vector<std::span<const std::uint8_t>> inputs;
    inputs.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        inputs.emplace_back(envs[i].coinbase.bytes);
        inputs.emplace_back(senders[i].bytes);
    }
    std::vector<Digest> address_hashes(2 * n);
    keccak256_batch(inputs, address_hashes);

    // Stage 2: the checked sums, then their digests.
    std::vector<std::optional<std::array<std::uint8_t, 32>>> sums(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        try
        {
            sums[i] = seed_preimage(envs[i], address_hashes[2 * i].to_u256(),
                address_hashes[2 * i + 1].to_u256())
                          .to_be_bytes();
        }
        catch (const Error& e)
        {
            if (e.code() != Errc::overflow)
                throw;
        }
    }

    inputs.clear();
    std::vector<std::size_t> owners;
    for (std::size_t i = 0; i < n; ++i)
    {
        if (sums[i])
        {
            inputs.emplace_back(*sums[i]);
            owners.push_back(i);
        }
    }
    std::vector<Digest> seed_hashes(inputs.size());
    keccak256_batch(inputs, seed_hashes);

    std::vector<std::optional<U256>> out(n);
    for (std::size_t j = 0; j < owners.size(); ++j)
        out[owners[j]] = seed_hashes[j].to_u256();
    return out;
}

U256 lottery_random(const BlockEnv& env, std::span<const Address> players)
{
    std::vector<PackedItem> items;
    items.reserve(players.size() + 2);
    items.emplace_back(env.difficulty);
    items.emplace_back(env.timestamp);
    for (const auto& p : players)
        items.emplace_back(p);
    return keccak256(encode_packed(items)).to_u256();
}
}  // namespace lotsim
