// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/chain.hpp>

#include <vector>

namespace lotsim
{
/// Exact stake required by enter(): 0.1 ether.
inline constexpr U256 lottery_ticket_price = milli_ether(100);

struct LotteryState
{
    Address manager;
    std::vector<Address> players;  ///< insertion order, duplicates allowed
};

/// The manager/players lottery contract. The pool is the balance of the
/// contract's own account; every operation runs inside a chain call frame.
class Lottery
{
public:
    /// Deploys the contract with `manager` as creator.
    static Lottery create(Chain& chain, const Address& manager);

    /// `require(msg.value == 0.1 ether); players.push(msg.sender);`
    /// Throws Errc::require_failed (value returned to the sender).
    void enter(Chain& chain, const CallContext& ctx);

    /// Draws with the block-variable randomness of the current block:
    /// players[lottery_random(env, players) % players.length].
    Address pick_winner(Chain& chain, const CallContext& ctx);

    /// Same draw, but the random word comes from an external source.
    Address pick_winner_with(Chain& chain, const CallContext& ctx, const U256& random_word);

    /// Returns 0.1 ether per entry in list order and clears the list.
    void refund(Chain& chain, const CallContext& ctx);

    [[nodiscard]] const Address& address() const noexcept { return self_; }
    [[nodiscard]] const Address& manager() const noexcept { return state_.manager; }
    [[nodiscard]] const std::vector<Address>& players() const noexcept { return state_.players; }
    [[nodiscard]] const LotteryState& state() const noexcept { return state_; }
    [[nodiscard]] U256 pool(const Chain& chain) const { return chain.balance_of(self_); }

    /// Throws Errc::invariant_violation unless pool == 0.1 ether * players.size().
    void check_invariants(const Chain& chain) const;

private:
    Lottery(Address self, Address manager);

    void only_manager(const CallContext& ctx) const;

    Address self_;
    LotteryState state_;
};
}  // namespace lotsim
