// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <lotsim/u256.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace lotsim
{
/// 32-byte Keccak-256 output.
struct Digest
{
    std::array<std::uint8_t, 32> bytes{};

    /// Big-endian interpretation, as `uint256(keccak256(...))` does.
    [[nodiscard]] U256 to_u256() const noexcept { return U256::from_be_bytes(bytes); }
    [[nodiscard]] std::string to_hex() const;  ///< 64 lowercase digits, no prefix

    friend constexpr auto operator<=>(const Digest&, const Digest&) noexcept = default;
};

/// Ethereum's keccak256: Keccak[r=1088, c=512] with the original 0x01 domain
/// padding (not FIPS-202 SHA3-256).
Digest keccak256(std::span<const std::uint8_t> data) noexcept;

/// Hashes every input. Equal-length inputs are grouped four at a time and run
/// through the active 4-way permutation kernel; the result is bit-identical to
/// calling keccak256() on each input.
void keccak256_batch(std::span<const std::span<const std::uint8_t>> inputs, std::span<Digest> out);
}  // namespace lotsim
