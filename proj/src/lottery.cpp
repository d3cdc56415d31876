// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>
#include <lotsim/lottery.hpp>

namespace lotsim
{
Lottery::Lottery(Address self, Address manager) : self_{self}, state_{manager, {}} {}

Lottery Lottery::create(Chain& chain, const Address& manager)
{
    (void)chain.account(manager);  // unknown manager throws
    const Address self = chain.deploy_contract(manager, {}, 0);
    return Lottery{self, manager};
}

void Lottery::only_manager(const CallContext& ctx) const
{
    if (ctx.msg_sender != state_.manager)
        throw Error{Errc::only_manager, ctx.msg_sender.to_hex() + " is not the manager"};
}

void Lottery::enter(Chain& chain, const CallContext& ctx)
{
    Chain::CallFrame frame{chain};
    chain.transfer(ctx.msg_sender, self_, ctx.msg_value);
    if (ctx.msg_value != lottery_ticket_price)
        throw Error{Errc::require_failed, "msg.value must be exactly 0.1 ether"};
    state_.players.push_back(ctx.msg_sender);
    frame.commit();
}

Address Lottery::pick_winner(Chain& chain, const CallContext& ctx)
{
    only_manager(ctx);
    if (state_.players.empty())
        throw Error{Errc::empty_pool, "no players to draw from"};
    return pick_winner_with(chain, ctx, lottery_random(chain.env(), state_.players));
}

Address Lottery::pick_winner_with(Chain& chain, const CallContext& ctx, const U256& random_word)
{
    only_manager(ctx);
    if (state_.players.empty())
        throw Error{Errc::empty_pool, "no players to draw from"};

    Chain::CallFrame frame{chain};
    const std::size_t index = (random_word % U256{state_.players.size()}).low64();
    const Address winner = state_.players[index];
    chain.transfer(self_, winner, chain.balance_of(self_));
    state_.players.clear();
    frame.commit();
    return winner;
}

void Lottery::refund(Chain& chain, const CallContext& ctx)
{
    only_manager(ctx);
    Chain::CallFrame frame{chain};
    for (const auto& p : state_.players)
        chain.transfer(self_, p, lottery_ticket_price);
    state_.players.clear();
    frame.commit();
}

void Lottery::check_invariants(const Chain& chain) const
{
    const U256 expected = lottery_ticket_price * U256{state_.players.size()};
    if (pool(chain) != expected)
    {
        throw Error{Errc::invariant_violation, "lottery pool " + pool(chain).to_dec() +
                                                   " != 0.1 ether x " +
                                                   std::to_string(state_.players.size())};
    }
}
}  // namespace lotsim
