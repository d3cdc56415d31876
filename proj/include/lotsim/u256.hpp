// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace lotsim
{
/// Unsigned 256-bit integer with EVM/SafeMath semantics: +, - and * are
/// checked and throw Errc::overflow instead of wrapping, / and % truncate and
/// throw Errc::division_by_zero on a zero divisor.
class U256
{
public:
    static constexpr std::size_t num_words = 4;
    static constexpr std::size_t num_bytes = 32;

    constexpr U256() noexcept = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    constexpr U256(std::uint64_t v) noexcept : words_{v, 0, 0, 0} {}

    /// Words are little-endian: words[0] holds the least significant 64 bits.
    constexpr explicit U256(const std::array<std::uint64_t, num_words>& words) noexcept
      : words_{words}
    {}

    static constexpr U256 max() noexcept { return U256{{~0ull, ~0ull, ~0ull, ~0ull}}; }

    static U256 from_be_bytes(std::span<const std::uint8_t, num_bytes> bytes) noexcept;
    [[nodiscard]] std::array<std::uint8_t, num_bytes> to_be_bytes() const noexcept;

    /// Parses a decimal string, or hex when prefixed with 0x. Throws
    /// Errc::parse_error on malformed input and Errc::overflow past 2^256-1.
    static U256 from_string(std::string_view text);

    [[nodiscard]] std::string to_dec() const;
    [[nodiscard]] std::string to_hex() const;  ///< 0x-prefixed, 64 digits

    [[nodiscard]] constexpr std::uint64_t word(std::size_t i) const noexcept { return words_[i]; }
    [[nodiscard]] constexpr const std::array<std::uint64_t, num_words>& words() const noexcept
    {
        return words_;
    }

    [[nodiscard]] constexpr bool is_zero() const noexcept
    {
        return (words_[0] | words_[1] | words_[2] | words_[3]) == 0;
    }
    [[nodiscard]] constexpr bool fits_u64() const noexcept
    {
        return (words_[1] | words_[2] | words_[3]) == 0;
    }
    /// Low 64 bits; the caller is responsible for checking fits_u64() if needed.
    [[nodiscard]] constexpr std::uint64_t low64() const noexcept { return words_[0]; }

    [[nodiscard]] unsigned bit_width() const noexcept;

    friend constexpr bool operator==(const U256&, const U256&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const U256& a, const U256& b) noexcept
    {
        for (std::size_t i = num_words; i-- > 0;)
        {
            if (a.words_[i] != b.words_[i])
                return a.words_[i] <=> b.words_[i];
        }
        return std::strong_ordering::equal;
    }

    friend U256 operator+(const U256& a, const U256& b);
    friend U256 operator-(const U256& a, const U256& b);
    friend U256 operator*(const U256& a, const U256& b);
    friend U256 operator/(const U256& a, const U256& b);
    friend U256 operator%(const U256& a, const U256& b);

    U256& operator+=(const U256& b) { return *this = *this + b; }
    U256& operator-=(const U256& b) { return *this = *this - b; }

    friend U256 operator<<(const U256& a, unsigned shift) noexcept;
    friend U256 operator>>(const U256& a, unsigned shift) noexcept;

private:
    std::array<std::uint64_t, num_words> words_{};
};

struct DivResult
{
    U256 quot;
    U256 rem;
};

/// Truncating division. Throws Errc::division_by_zero.
DivResult divmod(const U256& a, const U256& b);

/// 10^18 wei.
inline constexpr U256 ether{1'000'000'000'000'000'000ull};

/// Exact value of `milli` thousandths of an ether, in wei.
constexpr U256 milli_ether(std::uint64_t milli) noexcept
{
    return U256{milli * 1'000'000'000'000'000ull};
}
}  // namespace lotsim
