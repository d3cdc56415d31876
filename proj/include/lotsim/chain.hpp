// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/address.hpp>
#include <lotsim/keccak.hpp>
#include <lotsim/u256.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string_view>
#include <vector>

namespace lotsim
{
using Bytes = std::vector<std::uint8_t>;

/// Block variables visible to contract code (`block.*` and `now`).
struct BlockEnv
{
    U256 number;
    U256 timestamp{1};  ///< also `now`; never 0
    U256 difficulty;
    U256 gaslimit;
    Address coinbase;

    friend bool operator==(const BlockEnv&, const BlockEnv&) = default;
};

enum class AccountKind
{
    eoa,
    contract,
};

struct Account
{
    Address address;
    U256 balance;
    std::uint64_t code_size = 0;
    AccountKind kind = AccountKind::eoa;

    friend bool operator==(const Account&, const Account&) = default;
};

using KeyId = std::uint64_t;

/// Stand-in for an (r, s, v) signature: the signing key and the digest it signed.
struct Signature
{
    KeyId signer_key_id = 0;
    Digest digest;

    friend bool operator==(const Signature&, const Signature&) = default;
};

struct CallContext
{
    Address msg_sender;
    Address tx_origin;
    U256 msg_value;
    bool in_constructor = false;
    Bytes msg_data;
    std::optional<Signature> signature;
};

/// Simulated replacement for ecrecover: every EOA owns exactly one key.
class KeyRegistry
{
public:
    KeyId register_key(const Address& owner);

    [[nodiscard]] std::optional<KeyId> key_of(const Address& owner) const;

    /// Signature over keccak256(data). Throws Errc::unknown_key.
    [[nodiscard]] Signature sign(KeyId key, std::span<const std::uint8_t> data) const;

    /// True iff `sig` was made by the key registered to `signer` over keccak256(data).
    [[nodiscard]] bool verify(
        const Signature& sig, const Address& signer, std::span<const std::uint8_t> data) const;

private:
    std::vector<Address> owners_;  // key id k belongs to owners_[k - 1]
};

/// Deterministic single-instance ledger. Not thread-safe; one instance per thread.
class Chain
{
public:
    using Constructor = std::function<void(Chain&, const Address& self)>;

    /// Genesis is block 0 at timestamp 1. `seed` drives address generation.
    explicit Chain(std::uint64_t seed);

    Address create_account(AccountKind kind, const U256& initial_balance);

    /// Starts a new block; all calls until the next advance share it.
    /// Throws Errc::monotonicity when delta_seconds is 0.
    const BlockEnv& advance_block(const U256& delta_seconds, const U256& difficulty,
        const U256& gaslimit, const Address& coinbase);

    [[nodiscard]] const BlockEnv& env() const noexcept { return env_; }

    /// Moves value. Throws Errc::insufficient_funds or Errc::unknown_account
    /// without changing any balance.
    void transfer(const Address& from, const Address& to, const U256& amount);

    /// Creates a contract account and runs `body` as its constructor. During the
    /// constructor the new account reports code size 0; afterwards 1. If `body`
    /// throws, the account disappears, the endowment returns to `creator` and
    /// the exception propagates.
    Address deploy_contract(const Address& creator, const Constructor& body, const U256& endowment);

    /// Unknown addresses report 0.
    [[nodiscard]] std::uint64_t extcodesize(const Address& addr) const noexcept;

    [[nodiscard]] bool is_constructing(const Address& addr) const noexcept;

    [[nodiscard]] const Account* find(const Address& addr) const noexcept;
    [[nodiscard]] const Account& account(const Address& addr) const;
    [[nodiscard]] U256 balance_of(const Address& addr) const;
    [[nodiscard]] const std::map<Address, Account>& accounts() const noexcept { return accounts_; }

    [[nodiscard]] KeyRegistry& keys() noexcept { return keys_; }
    [[nodiscard]] const KeyRegistry& keys() const noexcept { return keys_; }

    /// Top-level call from an EOA; `sign` attaches the sender's own signature over `data`.
    [[nodiscard]] CallContext direct_call(
        const Address& sender, const U256& value, Bytes data = {}, bool sign = false) const;

    /// Call issued by `contract` inside a transaction started by `origin`.
    /// `forwarded` is whatever signature the contract passes along.
    [[nodiscard]] CallContext contract_call(const Address& contract, const Address& origin,
        const U256& value, Bytes data = {}, std::optional<Signature> forwarded = {}) const;

    [[nodiscard]] U256 total_supply() const;
    [[nodiscard]] const U256& minted() const noexcept { return minted_; }

    /// Throws Errc::invariant_violation naming `step` if balances no longer sum
    /// to the minted supply.
    void check_conservation(std::string_view step) const;

    /// Keccak over the canonical serialization of block env and all accounts.
    [[nodiscard]] Digest state_digest() const;

    /// Revert guard for one call: restores the full chain state on destruction
    /// unless commit() was called.
    class CallFrame
    {
    public:
        explicit CallFrame(Chain& chain);
        ~CallFrame();
        CallFrame(const CallFrame&) = delete;
        CallFrame& operator=(const CallFrame&) = delete;

        void commit() noexcept { committed_ = true; }

    private:
        Chain& chain_;
        std::map<Address, Account> accounts_;
        std::set<Address> constructing_;
        KeyRegistry keys_;
        U256 minted_;
        std::mt19937_64 rng_;
        bool committed_ = false;
    };

private:
    Account& mutable_account(const Address& addr);

    std::map<Address, Account> accounts_;
    std::set<Address> constructing_;
    KeyRegistry keys_;
    BlockEnv env_;
    U256 minted_;
    std::mt19937_64 address_rng_;
};
}  // namespace lotsim
