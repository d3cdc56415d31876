// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/error.hpp>

namespace lotsim
{
std::string_view to_string(Errc code) noexcept
{
    switch (code)
    {
    case Errc::overflow:
        return "OverflowError";
    case Errc::division_by_zero:
        return "DivisionByZero";
    case Errc::monotonicity:
        return "MonotonicityError";
    case Errc::insufficient_funds:
        return "InsufficientFunds";
    case Errc::unknown_account:
        return "UnknownAccount";
    case Errc::require_failed:
        return "RequireFailed";
    case Errc::only_manager:
        return "OnlyManager";
    case Errc::empty_pool:
        return "EmptyPool";
    case Errc::guard_failed:
        return "GuardError";
    case Errc::round_closed:
        return "RoundClosed";
    case Errc::round_still_live:
        return "RoundStillLive";
    case Errc::no_participants:
        return "NoParticipants";
    case Errc::phase_error:
        return "PhaseError";
    case Errc::duplicate_commit:
        return "DuplicateCommit";
    case Errc::reveal_mismatch:
        return "RevealMismatch";
    case Errc::not_committed:
        return "NotCommitted";
    case Errc::duplicate_reveal:
        return "DuplicateReveal";
    case Errc::no_entropy:
        return "NoEntropy";
    case Errc::unknown_key:
        return "UnknownKey";
    case Errc::config_error:
        return "ConfigError";
    case Errc::parse_error:
        return "ParseError";
    case Errc::validation_error:
        return "ValidationError";
    case Errc::io_error:
        return "IoError";
    case Errc::invariant_violation:
        return "InvariantViolation";
    }
    return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
  : std::runtime_error{std::string{to_string(code)} + ": " + message}, code_{code}, detail_{message}
{}

Error::Error(Errc code) : std::runtime_error{std::string{to_string(code)}}, code_{code} {}
}  // namespace lotsim
