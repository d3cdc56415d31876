// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/attacks.hpp>
#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>

#include <stdexcept>

namespace lotsim
{
namespace
{
/// Call data the attacker contract passes to buy_key().
Bytes buy_call_data()
{
    return {'b', 'u', 'y', 'X', 'i', 'd'};
}

std::size_t index_of(CallerClass c) noexcept
{
    return static_cast<std::size_t>(c);
}

std::size_t index_of(GuardChoice g) noexcept
{
    for (std::size_t i = 0; i < all_guards.size(); ++i)
    {
        if (all_guards[i] == g)
            return i;
    }
    return all_guards.size();
}

bool attempt_buy(std::uint64_t seed, CallerClass caller, GuardChoice guard)
{
    Chain chain{seed};
    const Address creator = chain.create_account(AccountKind::eoa, ether);
    const Address funder = chain.create_account(AccountKind::eoa, ether);
    Fomo3dLite game = Fomo3dLite::create(chain, creator, FomoParams{}, guard);
    chain.advance_block(12, 1, 30'000'000, Address::filled(0xc0));

    const U256 value = game.params().key_price;
    const Bytes data = buy_call_data();
    try
    {
        switch (caller)
        {
        case CallerClass::eoa_direct:
            game.buy_key(chain, chain.direct_call(funder, value, data, true));
            return true;
        case CallerClass::contract_post_deploy:
        {
            const Address contract = chain.deploy_contract(funder, {}, value);
            const auto sig = chain.keys().sign(*chain.keys().key_of(funder), data);
            game.buy_key(chain, chain.contract_call(contract, funder, value, data, sig));
            return true;
        }
        case CallerClass::contract_in_constructor:
            return constructor_bypass_attack(chain, game, funder, value).bypassed;
        }
    }
    catch (const Error& e)
    {
        if (e.code() != Errc::guard_failed)
            throw;
    }
    return false;
}
}  // namespace

bool predict_airdrop(const BlockEnv& env, const Address& caller, const U256& tracker)
{
    try
    {
        return airdrop_roll(airdrop_seed(env, caller), tracker);
    }
    catch (const Error& e)
    {
        if (e.code() != Errc::overflow)
            throw;
        return false;
    }
}

std::vector<bool> predict_airdrop_batch(std::span<const BlockEnv> envs,
    std::span<const Address> callers, std::span<const U256> trackers)
{
    if (trackers.size() != envs.size())
        throw std::invalid_argument{"predict_airdrop_batch: trackers differ in length"};
    const auto seeds = airdrop_seeds(envs, callers);
    std::vector<bool> out(seeds.size());
    for (std::size_t i = 0; i < seeds.size(); ++i)
        out[i] = seeds[i] && airdrop_roll(*seeds[i], trackers[i]);
    return out;
}

BuyDecision selective_buy_step(
    Chain& chain, Fomo3dLite& game, const Address& attacker, const U256& value)
{
    BuyDecision decision;
    const auto& st = game.state();
    if (!st.round_open || chain.env().timestamp > st.deadline)
        return decision;
    if (value < game.params().airdrop_min_qualifying)
        return decision;
    // The game rolls against the tracker as it stands before this buy.
    if (!predict_airdrop(chain.env(), attacker, st.air_drop_tracker))
        return decision;

    decision.attempted = true;
    const bool sign = game.guard() == GuardChoice::signature;
    const BuyOutcome outcome =
        game.buy_key(chain, chain.direct_call(attacker, value, buy_call_data(), sign));
    decision.won = outcome.airdrop_hit;
    decision.prize = outcome.airdrop_prize;
    return decision;
}

AttackResult constructor_bypass_attack(
    Chain& chain, Fomo3dLite& game, const Address& funder, const U256& value)
{
    AttackResult result;
    result.guard = game.guard();

    const Bytes data = buy_call_data();
    std::optional<Signature> forwarded;
    if (const auto key = chain.keys().key_of(funder))
        forwarded = chain.keys().sign(*key, data);

    try
    {
        result.contract = chain.deploy_contract(
            funder,
            [&](Chain& c, const Address& self) {
                game.buy_key(c, c.contract_call(self, funder, value, data, forwarded));
            },
            value);
        result.bypassed = true;
    }
    catch (const Error& e)
    {
        result.error = e.code();
        result.message = e.detail();
    }
    return result;
}

std::string_view to_string(CallerClass c) noexcept
{
    switch (c)
    {
    case CallerClass::eoa_direct:
        return "eoa_direct";
    case CallerClass::contract_post_deploy:
        return "contract_post_deploy";
    case CallerClass::contract_in_constructor:
        return "contract_in_constructor";
    }
    return "unknown";
}

bool GuardMatrix::at(CallerClass c, GuardChoice g) const
{
    const std::size_t gi = index_of(g);
    if (gi >= all_guards.size())
        throw std::invalid_argument{"guard matrix has no column for this guard"};
    return passes[index_of(c)][gi];
}

GuardMatrix expected_guard_matrix() noexcept
{
    GuardMatrix m;
    //                 codesize signature origin
    m.passes[0] = {true, true, true};     // EOA, self-signed
    m.passes[1] = {false, false, false};  // deployed contract
    m.passes[2] = {true, false, false};   // contract inside its constructor
    return m;
}

GuardMatrix run_guard_matrix(std::uint64_t seed)
{
    GuardMatrix m;
    for (const auto caller : all_caller_classes)
    {
        for (const auto guard : all_guards)
            m.passes[index_of(caller)][index_of(guard)] = attempt_buy(seed, caller, guard);
    }
    return m;
}

Address forecast_lottery_winner(const BlockEnv& env, std::span<const Address> players)
{
    if (players.empty())
        throw Error{Errc::empty_pool, "nothing to forecast"};
    const U256 r = lottery_random(env, players);
    return players[(r % U256{players.size()}).low64()];
}
}  // namespace lotsim
