// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <string_view>

namespace lotsim
{
/// 20-byte account identifier. The all-zero address is reserved.
struct Address
{
    static constexpr std::size_t size = 20;

    std::array<std::uint8_t, size> bytes{};

    /// Address with every byte equal to `b`, handy for fixed test vectors.
    static constexpr Address filled(std::uint8_t b) noexcept
    {
        Address a;
        a.bytes.fill(b);
        return a;
    }

    /// Parses 40 hex digits with an optional 0x prefix. Throws Errc::parse_error.
    static Address from_hex(std::string_view hex);

    [[nodiscard]] std::string to_hex() const;

    [[nodiscard]] constexpr bool is_zero() const noexcept
    {
        for (const auto b : bytes)
        {
            if (b != 0)
                return false;
        }
        return true;
    }

    friend constexpr auto operator<=>(const Address&, const Address&) noexcept = default;
};
}  // namespace lotsim

template <>
struct std::hash<lotsim::Address>
{
    std::size_t operator()(const lotsim::Address& a) const noexcept
    {
        std::uint64_t h = 0;
        std::memcpy(&h, a.bytes.data(), sizeof(h));
        return static_cast<std::size_t>(h);
    }
};
