// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <lotsim/keccak.hpp>
#include <lotsim/keccak_kernels.hpp>

#include <span>

namespace
{
using lotsim::Digest;
using lotsim::keccak256;
using lotsim::test::bytes_of;
using lotsim::test::iota_bytes;
namespace kk = lotsim::keccak;

// Reference digests from tests/oracles/golden.py.
TEST(Keccak, GoldenVectors)
{
    EXPECT_EQ(keccak256({}).to_hex(),
        "c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470");
    const std::uint8_t zero = 0;
    EXPECT_EQ(keccak256({&zero, 1}).to_hex(),
        "bc36789e7a1e281436464229828f817d6612f7b477d66591ff96a9e064bcc98a");
    EXPECT_EQ(keccak256(bytes_of("abc")).to_hex(),
        "4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45");
}

TEST(Keccak, RateBoundaries)
{
    EXPECT_EQ(keccak256(iota_bytes(135)).to_hex(),
        "cbdfd9dee5faad3818d6b06f95a219fd290b0e1706f6a82e5a595b9ce9faca62");
    EXPECT_EQ(keccak256(iota_bytes(136)).to_hex(),
        "7ce759f1ab7f9ce437719970c26b0a66ff11fe3e38e17df89cf5d29c7d7f807e");
    EXPECT_EQ(keccak256(iota_bytes(200)).to_hex(),
        "bfb0aa97863e797943cf7c33bb7e880bb4543f3d2703c0923c6901c2af57b890");
}

TEST(Keccak, Deterministic)
{
    std::mt19937_64 rng{9};
    for (int i = 0; i < 1000; ++i)
    {
        std::vector<std::uint8_t> v(rng() % 300);
        for (auto& b : v)
            b = static_cast<std::uint8_t>(rng());
        const auto copy = v;
        EXPECT_EQ(keccak256(v), keccak256(copy));
    }
}

kk::StateX4 random_state(std::mt19937_64& rng)
{
    kk::StateX4 st;
    for (auto& lane : st.lanes)
    {
        for (auto& w : lane)
            w = rng();
    }
    return st;
}

TEST(KeccakKernels, X4ScalarMatchesSingleLane)
{
    std::mt19937_64 rng{17};
    for (int round = 0; round < 200; ++round)
    {
        kk::StateX4 st = random_state(rng);
        std::array<kk::State, 4> single;
        for (unsigned k = 0; k < 4; ++k)
        {
            for (std::size_t i = 0; i < 25; ++i)
                single[k][i] = st.lanes[i][k];
            kk::permute(single[k]);
        }
        kk::permute_x4_scalar(st);
        for (unsigned k = 0; k < 4; ++k)
        {
            for (std::size_t i = 0; i < 25; ++i)
                ASSERT_EQ(st.lanes[i][k], single[k][i]);
        }
    }
}

TEST(KeccakKernels, Avx2MatchesScalar)
{
    if (!kk::isa_supported(kk::Isa::avx2))
        GTEST_SKIP() << "no AVX2 on this machine";
    const auto avx2 = kk::permute_x4_for(kk::Isa::avx2);
    std::mt19937_64 rng{23};
    for (int round = 0; round < 500; ++round)
    {
        kk::StateX4 a = random_state(rng);
        kk::StateX4 b = a;
        kk::permute_x4_scalar(a);
        avx2(b);
        for (std::size_t i = 0; i < 25; ++i)
            ASSERT_EQ(a.lanes[i], b.lanes[i]);
    }
}

void check_batch_equals_single(kk::Isa isa)
{
    ASSERT_TRUE(kk::set_active_isa(isa));
    std::mt19937_64 rng{31};
    const std::size_t lengths[] = {0, 1, 31, 32, 52, 64, 84, 135, 136, 137, 271, 272, 500};
    std::vector<std::vector<std::uint8_t>> inputs;
    for (int i = 0; i < 130; ++i)
    {
        std::vector<std::uint8_t> v(lengths[rng() % std::size(lengths)]);
        for (auto& b : v)
            b = static_cast<std::uint8_t>(rng());
        inputs.push_back(std::move(v));
    }
    std::vector<std::span<const std::uint8_t>> views(inputs.begin(), inputs.end());
    std::vector<Digest> out(inputs.size());
    lotsim::keccak256_batch(views, out);
    for (std::size_t i = 0; i < inputs.size(); ++i)
        EXPECT_EQ(out[i], keccak256(inputs[i])) << "input " << i << " len " << inputs[i].size();
}

TEST(KeccakBatch, ScalarKernelEqualsSingle)
{
    const auto saved = kk::active_isa();
    check_batch_equals_single(kk::Isa::scalar);
    kk::set_active_isa(saved);
}

TEST(KeccakBatch, Avx2KernelEqualsSingle)
{
    if (!kk::isa_supported(kk::Isa::avx2))
        GTEST_SKIP() << "no AVX2 on this machine";
    const auto saved = kk::active_isa();
    check_batch_equals_single(kk::Isa::avx2);
    kk::set_active_isa(saved);
}

TEST(KeccakBatch, SizeMismatchThrows)
{
    std::vector<std::span<const std::uint8_t>> views(3);
    std::vector<Digest> out(2);
    EXPECT_THROW(lotsim::keccak256_batch(views, out), std::invalid_argument);
}

TEST(KeccakIsa, ParseNames)
{
    EXPECT_EQ(kk::parse_isa("scalar"), kk::Isa::scalar);
    EXPECT_EQ(kk::parse_isa("avx2"), kk::Isa::avx2);
    EXPECT_FALSE(kk::parse_isa("sse9"));
    EXPECT_TRUE(kk::isa_supported(kk::Isa::scalar));
}
}  // namespace
