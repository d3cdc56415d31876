// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/keccak.hpp>
#include <lotsim/keccak_kernels.hpp>

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <map>
#include <stdexcept>
#include <vector>

namespace lotsim
{
namespace keccak
{
namespace
{
constexpr std::size_t rate_lanes = rate_bytes / 8;

std::uint64_t load_le(const std::uint8_t* p) noexcept
{
    std::uint64_t v = 0;
    for (unsigned i = 0; i < 8; ++i)
        v |= std::uint64_t{p[i]} << (8 * i);
    return v;
}

void store_le(std::uint8_t* p, std::uint64_t v) noexcept
{
    for (unsigned i = 0; i < 8; ++i)
        p[i] = static_cast<std::uint8_t>(v >> (8 * i));
}

/// Final block with the original Keccak multi-rate padding 0x01 .. 0x80.
std::array<std::uint8_t, rate_bytes> padded_tail(std::span<const std::uint8_t> tail) noexcept
{
    std::array<std::uint8_t, rate_bytes> block{};
    if (!tail.empty())
        std::memcpy(block.data(), tail.data(), tail.size());
    block[tail.size()] ^= 0x01;
    block[rate_bytes - 1] ^= 0x80;
    return block;
}

Isa detect_default_isa() noexcept
{
    Isa best = isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    if (const char* env = std::getenv("LOTSIM_SIMD"))
    {
        if (const auto requested = parse_isa(env); requested && isa_supported(*requested))
            best = *requested;
    }
    return best;
}

std::atomic<Isa>& active_isa_slot() noexcept
{
    static std::atomic<Isa> slot{detect_default_isa()};
    return slot;
}

/// Hashes four inputs of identical length with one x4 kernel.
void hash_x4(std::array<std::span<const std::uint8_t>, 4> in, std::span<Digest, 4> out,
    PermuteX4Fn permute_x4) noexcept
{
    const std::size_t len = in[0].size();
    StateX4 st;
    std::size_t offset = 0;
    for (; len - offset >= rate_bytes; offset += rate_bytes)
    {
        for (unsigned k = 0; k < 4; ++k)
        {
            for (std::size_t i = 0; i < rate_lanes; ++i)
                st.lanes[i][k] ^= load_le(in[k].data() + offset + 8 * i);
        }
        permute_x4(st);
    }
    for (unsigned k = 0; k < 4; ++k)
    {
        const auto block = padded_tail(in[k].subspan(offset));
        for (std::size_t i = 0; i < rate_lanes; ++i)
            st.lanes[i][k] ^= load_le(block.data() + 8 * i);
    }
    permute_x4(st);
    for (unsigned k = 0; k < 4; ++k)
    {
        for (std::size_t i = 0; i < 4; ++i)
            store_le(out[k].bytes.data() + 8 * i, st.lanes[i][k]);
    }
}
}  // namespace

std::string_view to_string(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept
{
    if (name == "scalar")
        return Isa::scalar;
    if (name == "avx2")
        return Isa::avx2;
    return std::nullopt;
}

bool isa_supported(Isa isa) noexcept
{
    switch (isa)
    {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(LOTSIM_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept
{
    return active_isa_slot().load(std::memory_order_relaxed);
}

bool set_active_isa(Isa isa) noexcept
{
    if (!isa_supported(isa))
        return false;
    active_isa_slot().store(isa, std::memory_order_relaxed);
    return true;
}

PermuteX4Fn permute_x4_for(Isa isa) noexcept
{
#if defined(LOTSIM_HAVE_AVX2)
    if (isa == Isa::avx2 && isa_supported(Isa::avx2))
        return &permute_x4_avx2;
#else
    (void)isa;
#endif
    return &permute_x4_scalar;
}
}  // namespace keccak

std::string Digest::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (const auto b : bytes)
    {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Digest keccak256(std::span<const std::uint8_t> data) noexcept
{
    using namespace keccak;

    State st{};
    while (data.size() >= rate_bytes)
    {
        for (std::size_t i = 0; i < rate_lanes; ++i)
            st[i] ^= load_le(data.data() + 8 * i);
        permute(st);
        data = data.subspan(rate_bytes);
    }
    const auto block = padded_tail(data);
    for (std::size_t i = 0; i < rate_lanes; ++i)
        st[i] ^= load_le(block.data() + 8 * i);
    permute(st);

    Digest d;
    for (std::size_t i = 0; i < 4; ++i)
        store_le(d.bytes.data() + 8 * i, st[i]);
    return d;
}

void keccak256_batch(std::span<const std::span<const std::uint8_t>> inputs, std::span<Digest> out)
{
    using namespace keccak;

    if (out.size() != inputs.size())
        throw std::invalid_argument{"keccak256_batch: output size mismatch"};

    const auto permute_x4 = permute_x4_for(active_isa());

    std::map<std::size_t, std::vector<std::size_t>> by_length;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        by_length[inputs[i].size()].push_back(i);

    for (const auto& [len, idx] : by_length)
    {
        std::size_t j = 0;
        for (; j + 4 <= idx.size(); j += 4)
        {
            std::array<Digest, 4> digests;
            hash_x4({inputs[idx[j]], inputs[idx[j + 1]], inputs[idx[j + 2]], inputs[idx[j + 3]]},
                digests, permute_x4);
            for (unsigned k = 0; k < 4; ++k)
                out[idx[j + k]] = digests[k];
        }
        for (; j < idx.size(); ++j)
            out[idx[j]] = keccak256(inputs[idx[j]]);
    }
}
}  // namespace lotsim
