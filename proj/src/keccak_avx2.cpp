// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2; only reached through permute_x4_for() after a CPU check.

#include "keccak_constants.hpp"

#include <lotsim/keccak_kernels.hpp>

#include <immintrin.h>

namespace lotsim::keccak
{
namespace
{
inline __m256i rotl(__m256i v, unsigned n) noexcept
{
    // Shift counts >= 64 produce zero, so n == 0 yields v | 0.
    return _mm256_or_si256(_mm256_sll_epi64(v, _mm_cvtsi32_si128(static_cast<int>(n))),
        _mm256_srl_epi64(v, _mm_cvtsi32_si128(static_cast<int>(64 - n))));
}

inline __m256i rotl1(__m256i v) noexcept
{
    return _mm256_or_si256(_mm256_slli_epi64(v, 1), _mm256_srli_epi64(v, 63));
}
}  // namespace

void permute_x4_avx2(StateX4& states) noexcept
{
    using namespace detail;

    __m256i a[num_lanes];
    for (unsigned i = 0; i < num_lanes; ++i)
        a[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(states.lanes[i].data()));

    for (const auto rc : round_constants)
    {
        __m256i c[5];
        for (unsigned x = 0; x < 5; ++x)
        {
            c[x] = _mm256_xor_si256(_mm256_xor_si256(a[x], a[x + 5]),
                _mm256_xor_si256(_mm256_xor_si256(a[x + 10], a[x + 15]), a[x + 20]));
        }
        for (unsigned x = 0; x < 5; ++x)
        {
            const __m256i d = _mm256_xor_si256(c[(x + 4) % 5], rotl1(c[(x + 1) % 5]));
            for (unsigned y = 0; y < 25; y += 5)
                a[x + y] = _mm256_xor_si256(a[x + y], d);
        }

        __m256i b[num_lanes];
        for (unsigned i = 0; i < num_lanes; ++i)
            b[pi_targets[i]] = rotl(a[i], rho_offsets[i]);

        for (unsigned y = 0; y < 25; y += 5)
        {
            for (unsigned x = 0; x < 5; ++x)
            {
                a[x + y] = _mm256_xor_si256(
                    b[x + y], _mm256_andnot_si256(b[(x + 1) % 5 + y], b[(x + 2) % 5 + y]));
            }
        }

        a[0] = _mm256_xor_si256(a[0], _mm256_set1_epi64x(static_cast<long long>(rc)));
    }

    for (unsigned i = 0; i < num_lanes; ++i)
        _mm256_store_si256(reinterpret_cast<__m256i*>(states.lanes[i].data()), a[i]);
}
}  // namespace lotsim::keccak
