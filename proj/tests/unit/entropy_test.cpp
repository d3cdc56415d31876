// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <lotsim/entropy.hpp>

#include <cmath>
#include <set>

namespace
{
using namespace lotsim;
using lotsim::test::error_code_of;
using lotsim::test::random_address;

BlockEnv env_of(std::uint64_t number, std::uint64_t ts, const U256& difficulty,
    std::uint64_t gaslimit, const Address& coinbase)
{
    BlockEnv e;
    e.number = number;
    e.timestamp = ts;
    e.difficulty = difficulty;
    e.gaslimit = gaslimit;
    e.coinbase = coinbase;
    return e;
}

const Address C = Address::filled(0x11);
const Address S = Address::filled(0x22);

TEST(EncodePacked, Lengths)
{
    const auto one = encode_packed({U256{1}});
    ASSERT_EQ(one.size(), 32u);
    EXPECT_EQ(one[31], 1);
    for (std::size_t i = 0; i < 31; ++i)
        EXPECT_EQ(one[i], 0);

    const auto addr = encode_packed({Address::filled(0xaa)});
    EXPECT_EQ(addr, std::vector<std::uint8_t>(20, 0xaa));

    const auto both = encode_packed({U256{1}, Address::filled(0xbb)});
    ASSERT_EQ(both.size(), 52u);
    EXPECT_EQ(both[31], 1);
    EXPECT_EQ(both[32], 0xbb);
    EXPECT_TRUE(encode_packed(std::span<const PackedItem>{}).empty());
}

TEST(AirdropSeed, GoldenSmallEnv)
{
    const auto env = env_of(7, 2, 3, 5, C);
    const U256 seed = airdrop_seed(env, S);
    EXPECT_EQ(seed.to_hex(), "0x745fa0306aaf879c74faed8c832e89f909c5707e002daabdc598c6b5ed99c925");
    EXPECT_EQ(seed % U256{1000}, U256{261});
    EXPECT_EQ(airdrop_seed(env, C).to_hex(),
        "0xdf272504c53090f24517bff1047b26b1339b37a8f9ac619773b7227a2bd763be");
}

TEST(AirdropSeed, GoldenRealisticEnv)
{
    const auto env = env_of(6'100'000, 1'700'000'000, (U256{1} << 40) + U256{17}, 30'000'000, C);
    const U256 seed = airdrop_seed(env, S);
    EXPECT_EQ(seed.to_hex(), "0x8a7165522a1f831cc4dd8ca3987650817b6d62e6222aa64ac1479c60bd23af02");
    EXPECT_EQ(seed % U256{1000}, U256{378});
}

// With timestamp 1 the two hash quotients are full 256-bit words; their sum overflows.
TEST(AirdropSeed, OverflowRevertsLikeSafeMath)
{
    const auto env = env_of(1, 1, 1, 1, Address::filled(0x01));
    EXPECT_EQ(error_code_of([&] { (void)airdrop_seed(env, Address::filled(0x02)); }),
        Errc::overflow);
    const std::vector<BlockEnv> envs{env};
    const std::vector<Address> senders{Address::filled(0x02)};
    EXPECT_FALSE(airdrop_seeds(envs, senders)[0].has_value());
}

TEST(AirdropSeed, DistinctSendersDistinctSeeds)
{
    std::mt19937_64 rng{4};
    const auto env = env_of(10, 1000, 77, 30'000'000, C);
    std::set<U256> seen;
    for (int i = 0; i < 200; ++i)
        seen.insert(airdrop_seed(env, random_address(rng)));
    EXPECT_EQ(seen.size(), 200u);
    EXPECT_EQ(airdrop_seed(env, S), airdrop_seed(env, S));
}

TEST(AirdropSeed, BatchMatchesScalar)
{
    std::mt19937_64 rng{5};
    std::vector<BlockEnv> envs;
    std::vector<Address> senders;
    for (int i = 0; i < 257; ++i)
    {
        const std::uint64_t ts = (i % 17 == 0) ? 1 : 1 + rng() % 2'000'000'000;
        envs.push_back(env_of(rng() % 10'000'000, ts, U256{rng()}, rng() % 50'000'000,
            random_address(rng)));
        senders.push_back(random_address(rng));
    }
    const auto batch = airdrop_seeds(envs, senders);
    for (std::size_t i = 0; i < envs.size(); ++i)
    {
        std::optional<U256> single;
        try
        {
            single = airdrop_seed(envs[i], senders[i]);
        }
        catch (const Error& e)
        {
            ASSERT_EQ(e.code(), Errc::overflow);
        }
        EXPECT_EQ(batch[i], single) << i;
    }
}

TEST(AirdropRoll, Examples)
{
    EXPECT_TRUE(airdrop_roll(U256{12345}, U256{346}));
    EXPECT_FALSE(airdrop_roll(U256{12345}, U256{345}));
    EXPECT_FALSE(airdrop_roll(U256::max(), U256{0}));
    EXPECT_TRUE(airdrop_roll(U256::max(), U256{1000}));
}

// Property: the contract's expression equals seed mod 1000 < tracker.
TEST(AirdropRoll, ResidueIdentity)
{
    std::mt19937_64 rng{6};
    for (int i = 0; i < 10000; ++i)
    {
        const U256 seed = lotsim::test::random_u256(rng);
        const U256 tracker{rng() % 1001};
        EXPECT_EQ(airdrop_roll(seed, tracker), seed % U256{1000} < tracker);
    }
}

// Baseline frequency: residues of real seeds are close to uniform, so the
// hit rate at tracker t is about t/1000.
TEST(AirdropRoll, BaselineFrequency)
{
    std::mt19937_64 rng{8};
    const U256 tracker{250};
    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
    {
        const auto env = env_of(rng() % 1'000'000, 1 + rng() % 2'000'000'000, U256{rng()},
            rng() % 40'000'000, random_address(rng));
        try
        {
            hits += airdrop_roll(airdrop_seed(env, random_address(rng)), tracker);
        }
        catch (const Error&)
        {}
    }
    const double p = 0.25;
    const double rate = static_cast<double>(hits) / n;
    EXPECT_NEAR(rate, p, 3 * std::sqrt(p * (1 - p) / n));
}

TEST(LotteryRandom, Golden)
{
    const auto env = env_of(0, 2, 3, 0, Address{});
    EXPECT_EQ(lottery_random(env, {}).to_hex(),
        "0x88601476d11616a71c5be67555bd1dff4b1cbf21533d2669b768b61518cfe1c3");
    std::vector<Address> players;
    for (std::uint8_t b = 1; b <= 6; ++b)
        players.push_back(Address::filled(b));
    const U256 r = lottery_random(env, players);
    EXPECT_EQ(r.to_hex(), "0x6b5ad0d360ec755a5380245ef97389cf3fbd6f758946b04c29d47fbfb4121ab1");
    EXPECT_EQ(r % U256{6}, U256{5});
}

TEST(LotteryRandom, AppendingPlayerChangesValue)
{
    std::mt19937_64 rng{10};
    for (int i = 0; i < 100; ++i)
    {
        const auto env = env_of(i, 1 + rng() % 1000, U256{rng()}, 0, Address{});
        std::vector<Address> players{random_address(rng)};
        const U256 before = lottery_random(env, players);
        players.push_back(random_address(rng));
        EXPECT_NE(lottery_random(env, players), before);
    }
}

// Block number, gaslimit and coinbase are not inputs to the lottery word.
TEST(LotteryRandom, OnlyDifficultyAndTimestampMatter)
{
    const std::vector<Address> players{C, S};
    const auto a = env_of(1, 50, 9, 100, C);
    const auto b = env_of(999, 50, 9, 12345, S);
    EXPECT_EQ(lottery_random(a, players), lottery_random(b, players));
}
}  // namespace
