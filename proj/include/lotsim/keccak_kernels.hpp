// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Keccak-f[1600] permutation kernels and the runtime ISA selection behind
// keccak256_batch(). Exposed so tests can check every kernel against the
// scalar reference.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace lotsim::keccak
{
inline constexpr std::size_t num_lanes = 25;
inline constexpr std::size_t rate_bytes = 136;  // 1600 - 2*256 bits

using State = std::array<std::uint64_t, num_lanes>;

/// Four independent states, interleaved by lane: x4[lane][k] is lane `lane`
/// of state k. One row maps to one 256-bit vector register.
struct alignas(32) StateX4
{
    std::array<std::array<std::uint64_t, 4>, num_lanes> lanes{};
};

/// Scalar reference permutation.
void permute(State& state) noexcept;

/// Four-way permutation built from four scalar calls. Reference for the
/// vector kernels.
void permute_x4_scalar(StateX4& states) noexcept;

#if defined(LOTSIM_HAVE_AVX2)
/// AVX2 kernel: one state per 64-bit lane of each ymm register.
/// Only call when isa_supported(Isa::avx2).
void permute_x4_avx2(StateX4& states) noexcept;
#endif

enum class Isa
{
    scalar,
    avx2,
};

std::string_view to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;

/// True when the kernel is compiled in and the CPU can execute it.
bool isa_supported(Isa isa) noexcept;

/// The kernel used by keccak256_batch(). Defaults to the best supported ISA;
/// the LOTSIM_SIMD environment variable ("scalar" or "avx2") overrides the
/// default when the named ISA is supported.
Isa active_isa() noexcept;

/// Selects the kernel; returns false (and changes nothing) when unsupported.
bool set_active_isa(Isa isa) noexcept;

using PermuteX4Fn = void (*)(StateX4&) noexcept;

/// Kernel for `isa`, falling back to the scalar one when unsupported.
PermuteX4Fn permute_x4_for(Isa isa) noexcept;
}  // namespace lotsim::keccak
