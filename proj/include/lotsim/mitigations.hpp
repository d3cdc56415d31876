// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/chain.hpp>
#include <lotsim/keccak.hpp>

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace lotsim
{
// ---------------------------------------------------------------------------
// Commit-reveal

/// keccak256(encodePacked(value, salt)).
Digest make_commitment(const U256& value, const U256& salt);

struct CommitRecord
{
    Address participant;
    Digest commitment;
    std::optional<U256> revealed_value;
    std::optional<U256> salt;
    U256 commit_deadline;
    U256 reveal_deadline;
};

struct CommitRevealOutcome
{
    U256 value;
    std::vector<Address> withholders;  ///< committed but never revealed, address order
};

/// Two-phase pool. Commits are accepted while now <= commit_deadline, reveals
/// while commit_deadline < now <= reveal_deadline, finalization afterwards.
class CommitRevealPool
{
public:
    /// Throws Errc::config_error unless commit_deadline < reveal_deadline.
    CommitRevealPool(const U256& commit_deadline, const U256& reveal_deadline);

    /// Errc::phase_error after the commit deadline, Errc::duplicate_commit on a second commit.
    void commit(const Address& participant, const Digest& commitment, const BlockEnv& env);

    /// Errc::phase_error outside the reveal window, Errc::not_committed,
    /// Errc::duplicate_reveal, Errc::reveal_mismatch.
    void reveal(const Address& participant, const U256& value, const U256& salt, const BlockEnv& env);

    /// value = keccak256(encodePacked(revealed values in participant-address order)).
    /// Errc::round_still_live before the reveal deadline, Errc::no_entropy with no reveals.
    [[nodiscard]] CommitRevealOutcome finalize(const BlockEnv& env) const;

    [[nodiscard]] const std::map<Address, CommitRecord>& records() const noexcept { return records_; }
    [[nodiscard]] const U256& commit_deadline() const noexcept { return commit_deadline_; }
    [[nodiscard]] const U256& reveal_deadline() const noexcept { return reveal_deadline_; }

private:
    U256 commit_deadline_;
    U256 reveal_deadline_;
    std::map<Address, CommitRecord> records_;
};

/// Deposit handling for a finalized pool: every revealer gets `deposit` back
/// from `escrow`, every withholder's deposit goes to `slash_recipient`.
/// Returns the total slashed.
U256 settle_commit_deposits(Chain& chain, const CommitRevealPool& pool, const Address& escrow,
    const Address& slash_recipient, const U256& deposit);

// ---------------------------------------------------------------------------
// Multiple sources

/// keccak256(encodePacked(sources...)). Errc::no_entropy when empty.
U256 multi_source_random(std::span<const U256> sources);

// ---------------------------------------------------------------------------
// Oracle

struct OracleOutput
{
    U256 value;
    Digest proof;
};

/// Trusted randomness provider. NOT a real VRF: the proof is a plain hash that
/// anyone holding the value can recompute. It models the request/verify
/// workflow only.
class RandomOracle
{
public:
    using KeyId = std::uint64_t;

    KeyId register_oracle(const U256& secret);

    /// value = keccak256(encodePacked(secret, request_seed)),
    /// proof = keccak256(encodePacked(key_id, request_seed, value)).
    /// Errc::unknown_key for unregistered ids.
    [[nodiscard]] OracleOutput random(KeyId key, const U256& request_seed) const;

    [[nodiscard]] bool verify(
        const U256& value, const Digest& proof, KeyId key, const U256& request_seed) const;

private:
    std::vector<U256> secrets_;  // key id k -> secrets_[k - 1]
};

// ---------------------------------------------------------------------------
// Source selection

enum class SourceKind
{
    block_vars,
    commit_reveal,
    multi_source,
    oracle,
};

std::string_view to_string(SourceKind k) noexcept;
std::optional<SourceKind> parse_source_kind(std::string_view name) noexcept;

struct RandomSource
{
    SourceKind kind = SourceKind::block_vars;
    /// Component sources combined when kind == multi_source.
    std::vector<SourceKind> components;

    friend bool operator==(const RandomSource&, const RandomSource&) = default;
};

/// schedule[(block_number / period) % schedule.size()].
/// Errc::config_error for an empty schedule or a zero period.
const RandomSource& rotate_source(
    std::span<const RandomSource> schedule, const U256& period, const U256& block_number);
}  // namespace lotsim
