// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "keccak_constants.hpp"

#include <lotsim/keccak_kernels.hpp>

#include <bit>

namespace lotsim::keccak
{
void permute(State& a) noexcept
{
    using namespace detail;

    for (const auto rc : round_constants)
    {
        // theta
        std::array<std::uint64_t, 5> c{};
        for (unsigned x = 0; x < 5; ++x)
            c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (unsigned x = 0; x < 5; ++x)
        {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (unsigned y = 0; y < 25; y += 5)
                a[x + y] ^= d;
        }

        // rho + pi
        State b;
        for (unsigned i = 0; i < num_lanes; ++i)
            b[pi_targets[i]] = std::rotl(a[i], static_cast<int>(rho_offsets[i]));

        // chi
        for (unsigned y = 0; y < 25; y += 5)
        {
            for (unsigned x = 0; x < 5; ++x)
                a[x + y] = b[x + y] ^ (~b[(x + 1) % 5 + y] & b[(x + 2) % 5 + y]);
        }

        // iota
        a[0] ^= rc;
    }
}

void permute_x4_scalar(StateX4& states) noexcept
{
    for (unsigned k = 0; k < 4; ++k)
    {
        State s;
        for (unsigned i = 0; i < num_lanes; ++i)
            s[i] = states.lanes[i][k];
        permute(s);
        for (unsigned i = 0; i < num_lanes; ++i)
            states.lanes[i][k] = s[i];
    }
}
}  // namespace lotsim::keccak
