// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/error.hpp>
#include <lotsim/guards.hpp>

#include <string>

namespace lotsim
{
std::string_view to_string(GuardChoice g) noexcept
{
    switch (g)
    {
    case GuardChoice::none:
        return "none";
    case GuardChoice::codesize:
        return "codesize";
    case GuardChoice::signature:
        return "signature";
    case GuardChoice::origin:
        return "origin";
    }
    return "unknown";
}

std::optional<GuardChoice> parse_guard(std::string_view name) noexcept
{
    if (name == "none")
        return GuardChoice::none;
    if (name == "codesize")
        return GuardChoice::codesize;
    if (name == "signature" || name == "sig")
        return GuardChoice::signature;
    if (name == "origin")
        return GuardChoice::origin;
    return std::nullopt;
}

void guard_codesize(const CallContext& ctx, const Chain& chain)
{
    if (chain.extcodesize(ctx.msg_sender) != 0)
        throw Error{Errc::guard_failed, std::string{humans_only_message}};
}

void guard_signature(const CallContext& ctx, const Chain& chain)
{
    if (!ctx.signature)
        throw Error{Errc::guard_failed, "missing signature"};
    if (!chain.keys().verify(*ctx.signature, ctx.msg_sender, ctx.msg_data))
        throw Error{Errc::guard_failed, "recovered signer is not msg.sender"};
}

void guard_origin(const CallContext& ctx)
{
    if (ctx.tx_origin != ctx.msg_sender)
        throw Error{Errc::guard_failed, "tx.origin != msg.sender"};
}

void enforce_guard(GuardChoice guard, const CallContext& ctx, const Chain& chain)
{
    switch (guard)
    {
    case GuardChoice::none:
        return;
    case GuardChoice::codesize:
        return guard_codesize(ctx, chain);
    case GuardChoice::signature:
        return guard_signature(ctx, chain);
    case GuardChoice::origin:
        return guard_origin(ctx);
    }
}
}  // namespace lotsim
