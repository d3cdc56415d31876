// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/address.hpp>
#include <lotsim/error.hpp>

namespace lotsim
{
namespace
{
int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}
}  // namespace

Address Address::from_hex(std::string_view hex)
{
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    if (hex.size() != 2 * size)
        throw Error{Errc::parse_error, "address must be 40 hex digits"};

    Address a;
    for (std::size_t i = 0; i < size; ++i)
    {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw Error{Errc::parse_error, "invalid hex digit in address"};
        a.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return a;
}

std::string Address::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    for (const auto b : bytes)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}
}  // namespace lotsim
