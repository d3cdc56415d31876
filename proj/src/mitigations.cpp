// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>
#include <lotsim/mitigations.hpp>

namespace lotsim
{
Digest make_commitment(const U256& value, const U256& salt)
{
    return keccak256(encode_packed({value, salt}));
}

CommitRevealPool::CommitRevealPool(const U256& commit_deadline, const U256& reveal_deadline)
  : commit_deadline_{commit_deadline}, reveal_deadline_{reveal_deadline}
{
    if (!(commit_deadline < reveal_deadline))
        throw Error{Errc::config_error, "commit deadline must precede reveal deadline"};
}

void CommitRevealPool::commit(const Address& participant, const Digest& commitment, const BlockEnv& env)
{
    if (env.timestamp > commit_deadline_)
        throw Error{Errc::phase_error, "commit phase is over"};
    if (records_.contains(participant))
        throw Error{Errc::duplicate_commit, participant.to_hex()};
    records_.emplace(participant,
        CommitRecord{participant, commitment, std::nullopt, std::nullopt, commit_deadline_,
            reveal_deadline_});
}

void CommitRevealPool::reveal(
    const Address& participant, const U256& value, const U256& salt, const BlockEnv& env)
{
    if (env.timestamp <= commit_deadline_ || env.timestamp > reveal_deadline_)
        throw Error{Errc::phase_error, "not in the reveal phase"};
    const auto it = records_.find(participant);
    if (it == records_.end())
        throw Error{Errc::not_committed, participant.to_hex()};
    CommitRecord& rec = it->second;
    if (rec.revealed_value)
        throw Error{Errc::duplicate_reveal, participant.to_hex()};
    if (make_commitment(value, salt) != rec.commitment)
        throw Error{Errc::reveal_mismatch, participant.to_hex()};
    rec.revealed_value = value;
    rec.salt = salt;
}

CommitRevealOutcome CommitRevealPool::finalize(const BlockEnv& env) const
{
    if (env.timestamp <= reveal_deadline_)
        throw Error{Errc::round_still_live, "reveal phase still open"};

    CommitRevealOutcome out;
    std::vector<PackedItem> revealed;
    for (const auto& [addr, rec] : records_)
    {
        if (rec.revealed_value)
            revealed.emplace_back(*rec.revealed_value);
        else
            out.withholders.push_back(addr);
    }
    if (revealed.empty())
        throw Error{Errc::no_entropy, "no participant revealed"};
    out.value = keccak256(encode_packed(revealed)).to_u256();
    return out;
}

U256 settle_commit_deposits(Chain& chain, const CommitRevealPool& pool, const Address& escrow,
    const Address& slash_recipient, const U256& deposit)
{
    Chain::CallFrame frame{chain};
    U256 slashed;
    for (const auto& [addr, rec] : pool.records())
    {
        if (rec.revealed_value)
        {
            chain.transfer(escrow, addr, deposit);
        }
        else
        {
            chain.transfer(escrow, slash_recipient, deposit);
            slashed += deposit;
        }
    }
    frame.commit();
    return slashed;
}

U256 multi_source_random(std::span<const U256> sources)
{
    if (sources.empty())
        throw Error{Errc::no_entropy, "no randomness sources"};
    std::vector<PackedItem> items(sources.begin(), sources.end());
    return keccak256(encode_packed(items)).to_u256();
}

RandomOracle::KeyId RandomOracle::register_oracle(const U256& secret)
{
    secrets_.push_back(secret);
    return secrets_.size();
}

OracleOutput RandomOracle::random(KeyId key, const U256& request_seed) const
{
    if (key == 0 || key > secrets_.size())
        throw Error{Errc::unknown_key, "oracle key " + std::to_string(key)};
    OracleOutput out;
    out.value = keccak256(encode_packed({secrets_[key - 1], request_seed})).to_u256();
    out.proof = keccak256(encode_packed({U256{key}, request_seed, out.value}));
    return out;
}

bool RandomOracle::verify(
    const U256& value, const Digest& proof, KeyId key, const U256& request_seed) const
{
    if (key == 0 || key > secrets_.size())
        return false;
    // Public check only; it does not involve the secret.
    return keccak256(encode_packed({U256{key}, request_seed, value})) == proof;
}

std::string_view to_string(SourceKind k) noexcept
{
    switch (k)
    {
    case SourceKind::block_vars:
        return "block_vars";
    case SourceKind::commit_reveal:
        return "commit_reveal";
    case SourceKind::multi_source:
        return "multi_source";
    case SourceKind::oracle:
        return "oracle";
    }
    return "unknown";
}

std::optional<SourceKind> parse_source_kind(std::string_view name) noexcept
{
    if (name == "block_vars")
        return SourceKind::block_vars;
    if (name == "commit_reveal")
        return SourceKind::commit_reveal;
    if (name == "multi_source")
        return SourceKind::multi_source;
    if (name == "oracle")
        return SourceKind::oracle;
    return std::nullopt;
}

const RandomSource& rotate_source(
    std::span<const RandomSource> schedule, const U256& period, const U256& block_number)
{
    if (schedule.empty())
        throw Error{Errc::config_error, "empty source schedule"};
    if (period.is_zero())
        throw Error{Errc::config_error, "rotation period must be positive"};
    const U256 slot = (block_number / period) % U256{schedule.size()};
    return schedule[slot.low64()];
}
}  // namespace lotsim
