// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/chain.hpp>
#include <lotsim/guards.hpp>

#include <optional>

namespace lotsim
{
/// Fomo3D-lite knobs. None of these come from the original game's published
/// constants; the defaults are sized for desk-scale runs.
struct FomoParams
{
    U256 key_price = milli_ether(10);
    U256 round_extension = 30;  ///< seconds added per key
    U256 round_cap = 86'400;    ///< the timer never runs more than 24 h ahead
    U256 airdrop_min_qualifying = milli_ether(100);
    U256 airdrop_pot_percent = 10;  ///< share of each key price routed to the airdrop pot
    U256 tracker_init = 0;
};

struct Fomo3dState
{
    U256 pot;
    std::optional<Address> last_buyer;
    U256 deadline;
    U256 air_drop_tracker;  ///< always < 1000
    U256 airdrop_pot;
    U256 key_price;
    bool round_open = true;
    std::uint64_t keys_sold = 0;
    std::uint64_t round = 1;
};

struct BuyOutcome
{
    bool qualified = false;    ///< msg.value reached airdrop_min_qualifying
    U256 tracker_at_roll;      ///< tracker value the roll compared against
    bool airdrop_hit = false;
    U256 airdrop_prize;
};

inline constexpr std::uint64_t max_air_drop_tracker = 999;

class Fomo3dLite
{
public:
    /// Deploys the game with `creator` as deployer; the first round opens with
    /// deadline = now + round_cap. Throws Errc::config_error on bad params.
    static Fomo3dLite create(
        Chain& chain, const Address& creator, const FomoParams& params, GuardChoice guard);

    /// Buys one key. Order of effects inside the call:
    ///  1. round must be open and now <= deadline (Errc::round_closed);
    ///  2. the entry guard (Errc::guard_failed);
    ///  3. msg.value >= key_price (Errc::require_failed), excess refunded;
    ///  4. if qualifying: roll against the current tracker, then tracker += 1
    ///     (clamped at 999); a hit pays the whole airdrop pot and resets the tracker;
    ///  5. the key price is split between pot and airdrop pot, the timer extends.
    BuyOutcome buy_key(Chain& chain, const CallContext& ctx);

    /// Pays the pot to the last buyer once the deadline has passed.
    Address settle_round(Chain& chain);

    /// Opens a new round after settlement. The airdrop pot and tracker carry over.
    void open_next_round(Chain& chain);

    [[nodiscard]] const Address& address() const noexcept { return self_; }
    [[nodiscard]] const Fomo3dState& state() const noexcept { return state_; }
    [[nodiscard]] const FomoParams& params() const noexcept { return params_; }
    [[nodiscard]] GuardChoice guard() const noexcept { return guard_; }

    /// Throws Errc::invariant_violation unless pot + airdrop_pot equals the
    /// game's balance and the tracker is below 1000.
    void check_invariants(const Chain& chain) const;

private:
    Fomo3dLite(Address self, const FomoParams& params, GuardChoice guard, const U256& now);

    Address self_;
    FomoParams params_;
    GuardChoice guard_;
    Fomo3dState state_;
};
}  // namespace lotsim
