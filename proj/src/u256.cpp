// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/error.hpp>
#include <lotsim/u256.hpp>

#include <algorithm>
#include <bit>

namespace lotsim
{
namespace
{
__extension__ typedef unsigned __int128 uint128;

/// Divides by a single 64-bit word.
DivResult divmod_small(const U256& a, std::uint64_t d) noexcept
{
    std::array<std::uint64_t, U256::num_words> q{};
    uint128 rem = 0;
    for (std::size_t i = U256::num_words; i-- > 0;)
    {
        const uint128 cur = (rem << 64) | a.word(i);
        q[i] = static_cast<std::uint64_t>(cur / d);
        rem = cur % d;
    }
    return {U256{q}, U256{static_cast<std::uint64_t>(rem)}};
}

/// Shift-subtract long division for wide divisors.
DivResult divmod_wide(const U256& a, const U256& b) noexcept
{
    if (a < b)
        return {U256{}, a};

    const unsigned shift = a.bit_width() - b.bit_width();
    U256 divisor = b << shift;
    U256 rem = a;
    std::array<std::uint64_t, U256::num_words> q{};
    for (unsigned i = shift + 1; i-- > 0;)
    {
        if (rem >= divisor)
        {
            rem = rem - divisor;
            q[i / 64] |= 1ull << (i % 64);
        }
        divisor = divisor >> 1;
    }
    return {U256{q}, rem};
}
}  // namespace

U256 U256::from_be_bytes(std::span<const std::uint8_t, num_bytes> bytes) noexcept
{
    std::array<std::uint64_t, num_words> w{};
    for (std::size_t i = 0; i < num_bytes; ++i)
    {
        const std::size_t bit = (num_bytes - 1 - i) * 8;
        w[bit / 64] |= std::uint64_t{bytes[i]} << (bit % 64);
    }
    return U256{w};
}

std::array<std::uint8_t, U256::num_bytes> U256::to_be_bytes() const noexcept
{
    std::array<std::uint8_t, num_bytes> out{};
    for (std::size_t i = 0; i < num_bytes; ++i)
    {
        const std::size_t bit = (num_bytes - 1 - i) * 8;
        out[i] = static_cast<std::uint8_t>(words_[bit / 64] >> (bit % 64));
    }
    return out;
}

U256 U256::from_string(std::string_view text)
{
    if (text.empty())
        throw Error{Errc::parse_error, "empty integer literal"};

    U256 result;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
    {
        text.remove_prefix(2);
        for (const char c : text)
        {
            unsigned digit = 0;
            if (c >= '0' && c <= '9')
                digit = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                digit = static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                digit = static_cast<unsigned>(c - 'A' + 10);
            else
                throw Error{Errc::parse_error, "invalid hex digit in integer literal"};
            if (result.bit_width() > 252)
                throw Error{Errc::overflow, "integer literal exceeds 256 bits"};
            result = (result << 4) + U256{digit};
        }
        return result;
    }

    for (const char c : text)
    {
        if (c < '0' || c > '9')
            throw Error{Errc::parse_error, "invalid decimal digit in integer literal"};
        result = result * U256{10} + U256{static_cast<std::uint64_t>(c - '0')};
    }
    return result;
}

std::string U256::to_dec() const
{
    if (is_zero())
        return "0";
    std::string out;
    U256 v = *this;
    while (!v.is_zero())
    {
        const auto [q, r] = divmod_small(v, 10);
        out.push_back(static_cast<char>('0' + r.low64()));
        v = q;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string U256::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "0x";
    for (const auto b : to_be_bytes())
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

unsigned U256::bit_width() const noexcept
{
    for (std::size_t i = num_words; i-- > 0;)
    {
        if (words_[i] != 0)
            return static_cast<unsigned>(i * 64 + std::bit_width(words_[i]));
    }
    return 0;
}

U256 operator+(const U256& a, const U256& b)
{
    std::array<std::uint64_t, U256::num_words> r{};
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < U256::num_words; ++i)
    {
        const uint128 s = uint128{a.words_[i]} + b.words_[i] + carry;
        r[i] = static_cast<std::uint64_t>(s);
        carry = static_cast<std::uint64_t>(s >> 64);
    }
    if (carry != 0)
        throw Error{Errc::overflow, "256-bit addition overflow"};
    return U256{r};
}

U256 operator-(const U256& a, const U256& b)
{
    if (a < b)
        throw Error{Errc::overflow, "256-bit subtraction underflow"};
    std::array<std::uint64_t, U256::num_words> r{};
    std::uint64_t borrow = 0;
    for (std::size_t i = 0; i < U256::num_words; ++i)
    {
        const std::uint64_t x = a.words_[i];
        const std::uint64_t y = b.words_[i];
        r[i] = x - y - borrow;
        borrow = (x < y || (x == y && borrow != 0)) ? 1 : 0;
    }
    return U256{r};
}

U256 operator*(const U256& a, const U256& b)
{
    // Schoolbook over 64-bit words into a 512-bit accumulator.
    std::array<std::uint64_t, 2 * U256::num_words> acc{};
    for (std::size_t i = 0; i < U256::num_words; ++i)
    {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < U256::num_words; ++j)
        {
            const uint128 p = uint128{a.words_[i]} * b.words_[j] + acc[i + j] + carry;
            acc[i + j] = static_cast<std::uint64_t>(p);
            carry = static_cast<std::uint64_t>(p >> 64);
        }
        acc[i + U256::num_words] = carry;
    }
    for (std::size_t i = U256::num_words; i < acc.size(); ++i)
    {
        if (acc[i] != 0)
            throw Error{Errc::overflow, "256-bit multiplication overflow"};
    }
    return U256{{acc[0], acc[1], acc[2], acc[3]}};
}

DivResult divmod(const U256& a, const U256& b)
{
    if (b.is_zero())
        throw Error{Errc::division_by_zero, "division by zero"};
    if (b.fits_u64())
        return divmod_small(a, b.low64());
    return divmod_wide(a, b);
}

U256 operator/(const U256& a, const U256& b)
{
    return divmod(a, b).quot;
}

U256 operator%(const U256& a, const U256& b)
{
    return divmod(a, b).rem;
}

U256 operator<<(const U256& a, unsigned shift) noexcept
{
    if (shift >= 256)
        return {};
    const unsigned word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    std::array<std::uint64_t, U256::num_words> r{};
    for (std::size_t i = U256::num_words; i-- > word_shift;)
    {
        r[i] = a.words_[i - word_shift] << bit_shift;
        if (bit_shift != 0 && i > word_shift)
            r[i] |= a.words_[i - word_shift - 1] >> (64 - bit_shift);
    }
    return U256{r};
}

U256 operator>>(const U256& a, unsigned shift) noexcept
{
    if (shift >= 256)
        return {};
    const unsigned word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    std::array<std::uint64_t, U256::num_words> r{};
    for (std::size_t i = 0; i + word_shift < U256::num_words; ++i)
    {
        r[i] = a.words_[i + word_shift] >> bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < U256::num_words)
            r[i] |= a.words_[i + word_shift + 1] << (64 - bit_shift);
    }
    return U256{r};
}
}  // namespace lotsim
