// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/chain.hpp>

#include <optional>
#include <string_view>

namespace lotsim
{
/// Which "humans only" modifier a contract entry point carries.
enum class GuardChoice
{
    none,
    codesize,   ///< isHuman: extcodesize(msg.sender) == 0
    signature,  ///< isHuman1: ecrecover(keccak256(msgData)) == msg.sender
    origin,     ///< isHuman2: tx.origin == msg.sender
};

std::string_view to_string(GuardChoice g) noexcept;

/// Accepts "none", "codesize", "signature"/"sig", "origin".
std::optional<GuardChoice> parse_guard(std::string_view name) noexcept;

inline constexpr std::string_view humans_only_message = "sorry_humans_only";

/// Each guard returns normally on pass and throws Error{Errc::guard_failed} otherwise.
void guard_codesize(const CallContext& ctx, const Chain& chain);
void guard_signature(const CallContext& ctx, const Chain& chain);
void guard_origin(const CallContext& ctx);

void enforce_guard(GuardChoice guard, const CallContext& ctx, const Chain& chain);
}  // namespace lotsim
