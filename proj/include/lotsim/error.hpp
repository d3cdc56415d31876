// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lotsim
{
/// Every failure the simulator can raise. Contract-level codes behave like a
/// `require` failure: the enclosing call is reverted before the error escapes.
enum class Errc
{
    overflow,
    division_by_zero,
    monotonicity,
    insufficient_funds,
    unknown_account,
    require_failed,
    only_manager,
    empty_pool,
    guard_failed,
    round_closed,
    round_still_live,
    no_participants,
    phase_error,
    duplicate_commit,
    reveal_mismatch,
    not_committed,
    duplicate_reveal,
    no_entropy,
    unknown_key,
    config_error,
    parse_error,
    validation_error,
    io_error,
    invariant_violation,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& message);
    explicit Error(Errc code);

    [[nodiscard]] Errc code() const noexcept { return code_; }

    /// The message without the error-name prefix, e.g. "sorry_humans_only".
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};
}  // namespace lotsim
