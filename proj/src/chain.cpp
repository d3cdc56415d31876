// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/chain.hpp>
#include <lotsim/error.hpp>

#include <string>

namespace lotsim
{
namespace
{
constexpr std::uint64_t deployed_code_size = 1;

void append(Bytes& out, const U256& v)
{
    const auto b = v.to_be_bytes();
    out.insert(out.end(), b.begin(), b.end());
}

void append(Bytes& out, const Address& a)
{
    out.insert(out.end(), a.bytes.begin(), a.bytes.end());
}
}  // namespace

KeyId KeyRegistry::register_key(const Address& owner)
{
    if (const auto existing = key_of(owner))
        return *existing;
    owners_.push_back(owner);
    return owners_.size();
}

std::optional<KeyId> KeyRegistry::key_of(const Address& owner) const
{
    for (std::size_t i = 0; i < owners_.size(); ++i)
    {
        if (owners_[i] == owner)
            return KeyId{i + 1};
    }
    return std::nullopt;
}

Signature KeyRegistry::sign(KeyId key, std::span<const std::uint8_t> data) const
{
    if (key == 0 || key > owners_.size())
        throw Error{Errc::unknown_key, "no such signing key"};
    return {key, keccak256(data)};
}

bool KeyRegistry::verify(
    const Signature& sig, const Address& signer, std::span<const std::uint8_t> data) const
{
    if (sig.signer_key_id == 0 || sig.signer_key_id > owners_.size())
        return false;
    return owners_[sig.signer_key_id - 1] == signer && sig.digest == keccak256(data);
}

Chain::Chain(std::uint64_t seed) : address_rng_{seed}
{
    env_.number = 0;
    env_.timestamp = 1;
    env_.difficulty = 1;
    env_.gaslimit = 30'000'000;
}

Address Chain::create_account(AccountKind kind, const U256& initial_balance)
{
    Address addr;
    do
    {
        for (std::size_t i = 0; i < Address::size; i += 8)
        {
            const std::uint64_t word = address_rng_();
            for (std::size_t j = 0; j < 8 && i + j < Address::size; ++j)
                addr.bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
        }
    } while (addr.is_zero() || accounts_.contains(addr));

    minted_ += initial_balance;
    accounts_.emplace(addr, Account{addr, initial_balance, 0, kind});
    if (kind == AccountKind::eoa)
        keys_.register_key(addr);
    return addr;
}

const BlockEnv& Chain::advance_block(const U256& delta_seconds, const U256& difficulty,
    const U256& gaslimit, const Address& coinbase)
{
    if (delta_seconds.is_zero())
        throw Error{Errc::monotonicity, "block timestamps must strictly increase"};

    BlockEnv next;
    next.number = env_.number + 1;
    next.timestamp = env_.timestamp + delta_seconds;
    next.difficulty = difficulty;
    next.gaslimit = gaslimit;
    next.coinbase = coinbase;
    env_ = next;
    return env_;
}

void Chain::transfer(const Address& from, const Address& to, const U256& amount)
{
    Account& src = mutable_account(from);
    Account& dst = mutable_account(to);
    if (src.balance < amount)
    {
        throw Error{Errc::insufficient_funds,
            from.to_hex() + " holds " + src.balance.to_dec() + " wei, needs " + amount.to_dec()};
    }
    if (&src == &dst)
        return;
    const U256 credited = dst.balance + amount;  // cannot overflow while supply is conserved
    src.balance = src.balance - amount;
    dst.balance = credited;
}

Address Chain::deploy_contract(const Address& creator, const Constructor& body, const U256& endowment)
{
    CallFrame frame{*this};
    const Address self = create_account(AccountKind::contract, 0);
    transfer(creator, self, endowment);

    constructing_.insert(self);
    if (body)
        body(*this, self);
    constructing_.erase(self);

    mutable_account(self).code_size = deployed_code_size;
    frame.commit();
    return self;
}

std::uint64_t Chain::extcodesize(const Address& addr) const noexcept
{
    const Account* acc = find(addr);
    return acc != nullptr ? acc->code_size : 0;
}

bool Chain::is_constructing(const Address& addr) const noexcept
{
    return constructing_.contains(addr);
}

const Account* Chain::find(const Address& addr) const noexcept
{
    const auto it = accounts_.find(addr);
    return it != accounts_.end() ? &it->second : nullptr;
}

const Account& Chain::account(const Address& addr) const
{
    const Account* acc = find(addr);
    if (acc == nullptr)
        throw Error{Errc::unknown_account, addr.to_hex()};
    return *acc;
}

U256 Chain::balance_of(const Address& addr) const
{
    return account(addr).balance;
}

Account& Chain::mutable_account(const Address& addr)
{
    const auto it = accounts_.find(addr);
    if (it == accounts_.end())
        throw Error{Errc::unknown_account, addr.to_hex()};
    return it->second;
}

CallContext Chain::direct_call(const Address& sender, const U256& value, Bytes data, bool sign) const
{
    CallContext ctx;
    ctx.msg_sender = sender;
    ctx.tx_origin = sender;
    ctx.msg_value = value;
    ctx.in_constructor = false;
    if (sign)
    {
        if (const auto key = keys_.key_of(sender))
            ctx.signature = keys_.sign(*key, data);
    }
    ctx.msg_data = std::move(data);
    return ctx;
}

CallContext Chain::contract_call(const Address& contract, const Address& origin, const U256& value,
    Bytes data, std::optional<Signature> forwarded) const
{
    CallContext ctx;
    ctx.msg_sender = contract;
    ctx.tx_origin = origin;
    ctx.msg_value = value;
    ctx.in_constructor = is_constructing(contract);
    ctx.msg_data = std::move(data);
    ctx.signature = forwarded;
    return ctx;
}

U256 Chain::total_supply() const
{
    U256 sum;
    for (const auto& [addr, acc] : accounts_)
        sum += acc.balance;
    return sum;
}

void Chain::check_conservation(std::string_view step) const
{
    const U256 supply = total_supply();
    if (supply != minted_)
    {
        throw Error{Errc::invariant_violation,
            "conservation broken after " + std::string{step} + ": supply " + supply.to_dec() +
                " != minted " + minted_.to_dec()};
    }
}

Digest Chain::state_digest() const
{
    Bytes buf;
    buf.reserve(5 * 32 + accounts_.size() * (20 + 3 * 32));
    append(buf, env_.number);
    append(buf, env_.timestamp);
    append(buf, env_.difficulty);
    append(buf, env_.gaslimit);
    append(buf, env_.coinbase);
    for (const auto& [addr, acc] : accounts_)
    {
        append(buf, addr);
        append(buf, acc.balance);
        append(buf, U256{acc.code_size});
        append(buf, U256{acc.kind == AccountKind::eoa ? 0u : 1u});
    }
    return keccak256(buf);
}

Chain::CallFrame::CallFrame(Chain& chain)
  : chain_{chain},
    accounts_{chain.accounts_},
    constructing_{chain.constructing_},
    keys_{chain.keys_},
    minted_{chain.minted_},
    rng_{chain.address_rng_}
{}

Chain::CallFrame::~CallFrame()
{
    if (committed_)
        return;
    chain_.accounts_ = std::move(accounts_);
    chain_.constructing_ = std::move(constructing_);
    chain_.keys_ = std::move(keys_);
    chain_.minted_ = minted_;
    chain_.address_rng_ = rng_;
}
}  // namespace lotsim
