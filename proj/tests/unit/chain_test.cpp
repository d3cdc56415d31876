// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <lotsim/chain.hpp>

#include <set>

namespace
{
using namespace lotsim;
using lotsim::test::error_code_of;

TEST(Chain, GenesisAndAdvance)
{
    Chain chain{1};
    EXPECT_EQ(chain.env().number, U256{0});
    EXPECT_EQ(chain.env().timestamp, U256{1});
    const auto& e = chain.advance_block(12, 3, 5, Address::filled(1));
    EXPECT_EQ(e.number, U256{1});
    EXPECT_EQ(e.timestamp, U256{13});
    EXPECT_EQ(e.difficulty, U256{3});
    EXPECT_EQ(e.gaslimit, U256{5});
    EXPECT_EQ(error_code_of([&] { chain.advance_block(0, 1, 1, Address{}); }), Errc::monotonicity);
    EXPECT_EQ(chain.env().number, U256{1});

    std::set<U256> heights;
    for (int i = 0; i < 100; ++i)
        heights.insert(chain.advance_block(1, 1, 1, Address{}).number);
    EXPECT_EQ(heights.size(), 100u);
}

TEST(Chain, CreateAccount)
{
    Chain chain{2};
    const Address a = chain.create_account(AccountKind::eoa, ether);
    const Address b = chain.create_account(AccountKind::eoa, ether);
    EXPECT_NE(a, b);
    EXPECT_FALSE(a.is_zero());
    EXPECT_EQ(chain.balance_of(a), ether);
    EXPECT_EQ(chain.extcodesize(a), 0u);
    EXPECT_TRUE(chain.keys().key_of(a).has_value());

    Chain replay{2};
    EXPECT_EQ(replay.create_account(AccountKind::eoa, ether), a);
    EXPECT_EQ(replay.create_account(AccountKind::eoa, ether), b);
}

TEST(Chain, Transfer)
{
    Chain chain{3};
    const Address a = chain.create_account(AccountKind::eoa, milli_ether(600));
    const Address w = chain.create_account(AccountKind::eoa, ether);
    chain.transfer(a, w, 0);
    EXPECT_EQ(chain.balance_of(a), milli_ether(600));
    chain.transfer(a, w, milli_ether(600));
    EXPECT_EQ(chain.balance_of(a), U256{0});
    EXPECT_EQ(chain.balance_of(w), milli_ether(1600));

    const Digest before = chain.state_digest();
    EXPECT_EQ(error_code_of([&] { chain.transfer(a, w, 1); }), Errc::insufficient_funds);
    EXPECT_EQ(error_code_of([&] { chain.transfer(a, Address::filled(9), 0); }),
        Errc::unknown_account);
    EXPECT_EQ(chain.state_digest(), before);
    EXPECT_EQ(chain.find(Address::filled(9)), nullptr);
    EXPECT_EQ(chain.extcodesize(Address::filled(9)), 0u);
}

TEST(Chain, ConstructorWindowProbe)
{
    Chain chain{4};
    const Address creator = chain.create_account(AccountKind::eoa, ether);
    std::vector<std::uint64_t> inside;
    bool flagged = false;
    const Address c = chain.deploy_contract(
        creator,
        [&](Chain& ch, const Address& self) {
            inside.push_back(ch.extcodesize(self));
            flagged = ch.contract_call(self, creator, 0).in_constructor;
            inside.push_back(ch.extcodesize(self));
        },
        milli_ether(5));
    EXPECT_EQ(inside, (std::vector<std::uint64_t>{0, 0}));
    EXPECT_TRUE(flagged);
    EXPECT_GT(chain.extcodesize(c), 0u);
    EXPECT_FALSE(chain.is_constructing(c));
    EXPECT_EQ(chain.balance_of(c), milli_ether(5));
    EXPECT_FALSE(chain.contract_call(c, creator, 0).in_constructor);
}

TEST(Chain, ConstructorFailureRemovesAccount)
{
    Chain chain{5};
    const Address creator = chain.create_account(AccountKind::eoa, ether);
    Address seen;
    EXPECT_EQ(error_code_of([&] {
        chain.deploy_contract(
            creator,
            [&](Chain&, const Address& self) {
                seen = self;
                throw Error{Errc::require_failed, "boom"};
            },
            milli_ether(100));
    }),
        Errc::require_failed);
    EXPECT_EQ(chain.find(seen), nullptr);
    EXPECT_EQ(chain.balance_of(creator), ether);
    chain.check_conservation("after failed deploy");
}

TEST(Chain, ContextsAndSignatures)
{
    Chain chain{6};
    const Address a = chain.create_account(AccountKind::eoa, ether);
    const Address b = chain.create_account(AccountKind::eoa, ether);
    const Bytes data{1, 2, 3};
    const CallContext ctx = chain.direct_call(a, 7, data, true);
    EXPECT_EQ(ctx.msg_sender, a);
    EXPECT_EQ(ctx.tx_origin, a);
    EXPECT_EQ(ctx.msg_value, U256{7});
    ASSERT_TRUE(ctx.signature);
    EXPECT_TRUE(chain.keys().verify(*ctx.signature, a, data));
    EXPECT_FALSE(chain.keys().verify(*ctx.signature, b, data));
    EXPECT_FALSE(chain.keys().verify(*ctx.signature, a, Bytes{1, 2}));
    EXPECT_EQ(error_code_of([&] { (void)chain.keys().sign(999, data); }), Errc::unknown_key);
    EXPECT_FALSE(chain.direct_call(a, 0).signature);
}

// Property: random operation sequences keep the minted supply and replay identically.
TEST(Chain, ConservationAndDeterminismUnderRandomOps)
{
    auto run = [](std::uint64_t seed) {
        Chain chain{seed};
        std::mt19937_64 rng{seed * 31 + 1};
        std::vector<Address> accts;
        for (int i = 0; i < 5; ++i)
            accts.push_back(chain.create_account(AccountKind::eoa, U256{rng() % 1000}));
        for (int step = 0; step < 500; ++step)
        {
            switch (rng() % 4)
            {
            case 0:
                chain.advance_block(1 + rng() % 20, U256{rng()}, rng() % 100, Address{});
                break;
            case 1:
            {
                const auto& from = accts[rng() % accts.size()];
                const auto& to = accts[rng() % accts.size()];
                try
                {
                    chain.transfer(from, to, U256{rng() % 400});
                }
                catch (const Error& e)
                {
                    EXPECT_EQ(e.code(), Errc::insufficient_funds);
                }
                break;
            }
            case 2:
            {
                const auto& creator = accts[rng() % accts.size()];
                const bool fail = rng() % 2 == 0;
                const U256 endow{rng() % 50};
                try
                {
                    accts.push_back(chain.deploy_contract(
                        creator,
                        [&](Chain& c, const Address& self) {
                            c.transfer(self, creator, 0);
                            if (fail)
                                throw Error{Errc::require_failed, "no"};
                        },
                        endow));
                }
                catch (const Error&)
                {}
                break;
            }
            default:
                accts.push_back(chain.create_account(AccountKind::eoa, U256{rng() % 100}));
            }
            chain.check_conservation("random step");
        }
        return chain.state_digest();
    };
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
        EXPECT_EQ(run(seed), run(seed));
    EXPECT_NE(run(1), run(2));
}

TEST(Chain, FrameRollsBackEverything)
{
    Chain chain{7};
    const Address a = chain.create_account(AccountKind::eoa, ether);
    const Address b = chain.create_account(AccountKind::eoa, ether);
    const Digest before = chain.state_digest();
    {
        Chain::CallFrame frame{chain};
        chain.transfer(a, b, milli_ether(1));
        chain.create_account(AccountKind::eoa, ether);
    }
    EXPECT_EQ(chain.state_digest(), before);
    EXPECT_EQ(chain.minted(), ether * U256{2});
}
}  // namespace
