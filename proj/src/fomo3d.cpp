// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>
#include <lotsim/fomo3d.hpp>

#include <algorithm>

namespace lotsim
{
Fomo3dLite::Fomo3dLite(Address self, const FomoParams& params, GuardChoice guard, const U256& now)
  : self_{self}, params_{params}, guard_{guard}
{
    state_.deadline = now + params.round_cap;
    state_.air_drop_tracker = params.tracker_init;
    state_.key_price = params.key_price;
}

Fomo3dLite Fomo3dLite::create(
    Chain& chain, const Address& creator, const FomoParams& params, GuardChoice guard)
{
    if (params.tracker_init > U256{max_air_drop_tracker})
        throw Error{Errc::config_error, "tracker_init must be < 1000"};
    if (params.airdrop_pot_percent > U256{100})
        throw Error{Errc::config_error, "airdrop_pot_percent must be <= 100"};
    if (params.key_price.is_zero())
        throw Error{Errc::config_error, "key_price must be positive"};

    const Address self = chain.deploy_contract(creator, {}, 0);
    return Fomo3dLite{self, params, guard, chain.env().timestamp};
}

BuyOutcome Fomo3dLite::buy_key(Chain& chain, const CallContext& ctx)
{
    const BlockEnv& env = chain.env();
    if (!state_.round_open || env.timestamp > state_.deadline)
        throw Error{Errc::round_closed, "round " + std::to_string(state_.round) + " is over"};

    enforce_guard(guard_, ctx, chain);

    Chain::CallFrame frame{chain};
    chain.transfer(ctx.msg_sender, self_, ctx.msg_value);
    if (ctx.msg_value < params_.key_price)
        throw Error{Errc::require_failed, "msg.value below key price"};

    Fomo3dState next = state_;
    if (const U256 excess = ctx.msg_value - params_.key_price; !excess.is_zero())
        chain.transfer(self_, ctx.msg_sender, excess);

    BuyOutcome outcome;
    if (ctx.msg_value >= params_.airdrop_min_qualifying)
    {
        outcome.qualified = true;
        outcome.tracker_at_roll = next.air_drop_tracker;
        next.air_drop_tracker =
            std::min(next.air_drop_tracker + U256{1}, U256{max_air_drop_tracker});
        if (airdrop_roll(airdrop_seed(env, ctx.msg_sender), outcome.tracker_at_roll))
        {
            outcome.airdrop_hit = true;
            outcome.airdrop_prize = next.airdrop_pot;
            chain.transfer(self_, ctx.msg_sender, next.airdrop_pot);
            next.airdrop_pot = 0;
            next.air_drop_tracker = 0;
        }
    }

    const U256 airdrop_share = params_.key_price * params_.airdrop_pot_percent / U256{100};
    next.airdrop_pot += airdrop_share;
    next.pot += params_.key_price - airdrop_share;
    next.last_buyer = ctx.msg_sender;
    next.keys_sold += 1;
    next.deadline = std::min(std::max(next.deadline, env.timestamp) + params_.round_extension,
        env.timestamp + params_.round_cap);

    state_ = next;
    frame.commit();
    return outcome;
}

Address Fomo3dLite::settle_round(Chain& chain)
{
    if (!state_.round_open)
        throw Error{Errc::round_closed, "round already settled"};
    if (chain.env().timestamp <= state_.deadline)
        throw Error{Errc::round_still_live, "deadline not reached"};
    if (!state_.last_buyer)
        throw Error{Errc::no_participants, "no keys were bought this round"};

    Chain::CallFrame frame{chain};
    const Address winner = *state_.last_buyer;
    chain.transfer(self_, winner, state_.pot);
    state_.pot = 0;
    state_.round_open = false;
    frame.commit();
    return winner;
}

void Fomo3dLite::open_next_round(Chain& chain)
{
    if (state_.round_open)
        throw Error{Errc::round_still_live, "current round not settled"};
    state_.round_open = true;
    state_.last_buyer.reset();
    state_.deadline = chain.env().timestamp + params_.round_cap;
    state_.round += 1;
}

void Fomo3dLite::check_invariants(const Chain& chain) const
{
    if (state_.pot + state_.airdrop_pot != chain.balance_of(self_))
        throw Error{Errc::invariant_violation, "fomo pot + airdrop pot != game balance"};
    if (state_.air_drop_tracker > U256{max_air_drop_tracker})
        throw Error{Errc::invariant_violation, "air_drop_tracker reached 1000"};
}
}  // namespace lotsim
