// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/attacks.hpp>
#include <lotsim/entropy.hpp>
#include <lotsim/error.hpp>
#include <lotsim/harness/runner.hpp>
#include <lotsim/lottery.hpp>
#include <lotsim/mitigations.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <random>
#include <thread>

namespace lotsim::harness
{
namespace
{
constexpr std::uint64_t chain_stream = 0;
constexpr std::uint64_t harness_stream = 1;

/// Scenario-side entropy. Contracts never see this generator, only the
/// block variables drawn from it.
class HarnessRng
{
public:
    explicit HarnessRng(std::uint64_t seed) : gen_{seed} {}

    std::uint64_t next() { return gen_(); }

    U256 next_u256() { return U256{{gen_(), gen_(), gen_(), gen_()}}; }

    Address next_address()
    {
        Address a;
        for (std::size_t i = 0; i < a.bytes.size(); i += 8)
        {
            const std::uint64_t w = gen_();
            for (std::size_t j = 0; j < 8 && i + j < a.bytes.size(); ++j)
                a.bytes[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
        }
        return a;
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

void advance(Chain& chain, HarnessRng& rng, const U256& interval)
{
    const U256 difficulty{rng.next() | 1};
    const U256 gaslimit{15'000'000 + rng.next() % 15'000'000};
    chain.advance_block(interval, difficulty, gaslimit, rng.next_address());
}

struct TrialResult
{
    std::vector<StrategyStats> strategies;
    std::vector<std::uint64_t> draw_wins;
    std::uint64_t draws = 0;
    std::uint64_t forecasts = 0;
    std::uint64_t forecast_hits = 0;
    std::uint64_t rounds_settled = 0;
    std::uint64_t withheld_reveals = 0;
    U256 slashed;
    Digest digest;
};

std::vector<StrategyStats> blank_stats(const ScenarioConfig& config)
{
    std::map<StrategyKind, std::uint64_t> totals;
    for (const auto& s : config.strategies)
        ++totals[s.kind];
    std::map<StrategyKind, std::uint64_t> seen;
    std::vector<StrategyStats> out;
    for (const auto& s : config.strategies)
    {
        StrategyStats st;
        st.kind = std::string{to_string(s.kind)};
        st.name = st.kind;
        if (totals[s.kind] > 1)
            st.name += "_" + std::to_string(seen[s.kind]++);
        out.push_back(std::move(st));
    }
    return out;
}

std::string step_name(std::uint64_t trial, std::uint64_t block, std::string_view what)
{
    return "trial " + std::to_string(trial) + " block " + std::to_string(block) + " " +
           std::string{what};
}

U256 actor_value(const Strategy& s, const U256& fallback)
{
    return s.value_wei.is_zero() ? fallback : s.value_wei;
}

bool skippable(Errc code) noexcept
{
    return code == Errc::round_closed || code == Errc::insufficient_funds;
}

// ---------------------------------------------------------------- fomo

TrialResult run_fomo_trial(const ScenarioConfig& config, std::uint64_t trial)
{
    Chain chain{derive_seed(config.scenario_seed, trial, chain_stream)};
    HarnessRng rng{derive_seed(config.scenario_seed, trial, harness_stream)};
    const auto& fp = config.params.fomo;
    const U256 interval = config.block_interval_seconds;

    TrialResult out;
    out.strategies = blank_stats(config);

    const Address creator = chain.create_account(AccountKind::eoa, config.params.initial_balance);
    std::vector<Address> actors;
    for (std::size_t i = 0; i < config.strategies.size(); ++i)
        actors.push_back(chain.create_account(AccountKind::eoa, config.params.initial_balance));
    std::vector<std::vector<Address>> owned(actors.size());  // attacker contracts

    Fomo3dLite game = Fomo3dLite::create(chain, creator, fp, config.guard);
    const bool sign = config.guard == GuardChoice::signature;

    auto checkpoint = [&](std::uint64_t block, std::string_view what) {
        const std::string step = step_name(trial, block, what);
        chain.check_conservation(step);
        try
        {
            game.check_invariants(chain);
        }
        catch (const Error& e)
        {
            throw Error{Errc::invariant_violation, step + ": " + e.detail()};
        }
    };
    checkpoint(0, "deploy");

    for (std::uint64_t b = 1; b <= config.blocks; ++b)
    {
        advance(chain, rng, interval);

        const auto& st = game.state();
        if (st.round_open && chain.env().timestamp > st.deadline && st.last_buyer)
        {
            game.settle_round(chain);
            game.open_next_round(chain);
            ++out.rounds_settled;
            checkpoint(b, "settle");
        }

        for (std::size_t i = 0; i < config.strategies.size(); ++i)
        {
            const Strategy& s = config.strategies[i];
            if ((b - 1) % s.period != 0)
                continue;
            StrategyStats& stats = out.strategies[i];
            const Address& me = actors[i];
            const U256 value = actor_value(s, fp.airdrop_min_qualifying);
            try
            {
                switch (s.kind)
                {
                case StrategyKind::honest_buyer:
                {
                    const BuyOutcome o =
                        game.buy_key(chain, chain.direct_call(me, value, {'b', 'u', 'y'}, sign));
                    ++stats.attempts;
                    if (o.qualified)
                    {
                        ++stats.qualifying_buys;
                        stats.tracker_sum_at_roll += o.tracker_at_roll.low64();
                    }
                    if (o.airdrop_hit)
                        ++stats.wins;
                    break;
                }
                case StrategyKind::selective_predictor:
                {
                    const U256 tracker = game.state().air_drop_tracker;
                    const BuyDecision d = selective_buy_step(chain, game, me, value);
                    if (d.attempted)
                    {
                        ++stats.attempts;
                        ++stats.qualifying_buys;
                        stats.tracker_sum_at_roll += tracker.low64();
                        if (d.won)
                            ++stats.wins;
                    }
                    break;
                }
                case StrategyKind::constructor_bypass:
                {
                    if (!game.state().round_open ||
                        chain.env().timestamp > game.state().deadline ||
                        chain.balance_of(me) < value)
                        break;
                    const AttackResult r = constructor_bypass_attack(chain, game, me, value);
                    ++stats.attempts;
                    if (r.bypassed)
                        ++stats.wins;
                    if (r.contract)
                        owned[i].push_back(*r.contract);
                    break;
                }
                case StrategyKind::honest_lottery_player:
                case StrategyKind::draw_forecaster:
                    throw Error{Errc::config_error, "lottery strategy in a fomo3d_lite scenario"};
                }
            }
            catch (const Error& e)
            {
                if (!skippable(e.code()))
                    throw;
            }
            checkpoint(b, stats.name);
        }
    }

    for (std::size_t i = 0; i < actors.size(); ++i)
    {
        WeiDelta net = WeiDelta::between(config.params.initial_balance, chain.balance_of(actors[i]));
        for (const auto& c : owned[i])
            net += WeiDelta{chain.balance_of(c), false};
        out.strategies[i].net_balance_delta_wei = net;
    }
    out.digest = chain.state_digest();
    return out;
}

// ---------------------------------------------------------------- lottery

struct LotteryWorld
{
    Chain chain;
    HarnessRng rng;
    std::vector<Address> players;
    Lottery lottery;
    Address escrow;
    RandomOracle oracle;
    RandomOracle::KeyId oracle_key = 0;
};

U256 oracle_draw(LotteryWorld& w)
{
    const U256 nonce = w.rng.next_u256();
    const OracleOutput o = w.oracle.random(w.oracle_key, nonce);
    if (!w.oracle.verify(o.value, o.proof, w.oracle_key, nonce))
        throw Error{Errc::invariant_violation, "oracle proof failed to verify"};
    return o.value;
}

TrialResult run_lottery_trial(const ScenarioConfig& config, std::uint64_t trial)
{
    Chain chain{derive_seed(config.scenario_seed, trial, chain_stream)};
    std::vector<Address> players;
    for (std::uint64_t i = 0; i < config.n_players; ++i)
        players.push_back(chain.create_account(AccountKind::eoa, config.params.initial_balance));
    const Address manager = players.front();
    Lottery lottery = Lottery::create(chain, manager);
    const Address escrow = chain.deploy_contract(manager, {}, 0);

    LotteryWorld w{std::move(chain), HarnessRng{derive_seed(config.scenario_seed, trial, harness_stream)},
        players, lottery, escrow, {}, 0};
    w.oracle_key = w.oracle.register_oracle(w.rng.next_u256());

    const U256 interval = config.block_interval_seconds;
    const U256 deposit = config.params.commit_deposit;

    TrialResult out;
    out.strategies = blank_stats(config);
    out.draw_wins.assign(players.size(), 0);

    std::uint64_t max_lead = 0;
    for (const auto& s : config.strategies)
    {
        if (s.kind == StrategyKind::draw_forecaster)
            max_lead = std::max(max_lead, s.lead_blocks);
    }

    std::uint64_t entries = 0;
    std::vector<BlockEnv> history;
    auto next_block = [&] {
        advance(w.chain, w.rng, interval);
        history.push_back(w.chain.env());
    };

    auto checkpoint = [&](std::uint64_t round, std::string_view what) {
        const std::string step = step_name(trial, round, what);
        w.chain.check_conservation(step);
        try
        {
            w.lottery.check_invariants(w.chain);
        }
        catch (const Error& e)
        {
            throw Error{Errc::invariant_violation, step + ": " + e.detail()};
        }
    };
    checkpoint(0, "deploy");

    for (std::uint64_t round = 1; round <= config.blocks; ++round)
    {
        history.clear();
        next_block();

        for (const auto& p : w.players)
        {
            w.lottery.enter(w.chain, w.chain.direct_call(p, lottery_ticket_price));
            ++entries;
            checkpoint(round, "enter");
        }

        const RandomSource& source =
            config.randomness.schedule.empty()
                ? config.randomness.source
                : rotate_source(config.randomness.schedule, config.randomness.rotation_period,
                      w.chain.env().number);

        std::optional<U256> word;  // unset: block variables at draw time
        bool refunded = false;
        switch (source.kind)
        {
        case SourceKind::block_vars:
            for (std::uint64_t i = 0; i < max_lead; ++i)
                next_block();
            break;
        case SourceKind::oracle:
            for (std::uint64_t i = 0; i < max_lead; ++i)
                next_block();
            word = oracle_draw(w);
            break;
        case SourceKind::multi_source:
        {
            for (std::uint64_t i = 0; i < max_lead; ++i)
                next_block();
            std::vector<U256> parts;
            for (const auto c : source.components)
            {
                if (c == SourceKind::oracle)
                    parts.push_back(oracle_draw(w));
                else
                    parts.push_back(lottery_random(w.chain.env(), w.lottery.players()));
            }
            word = multi_source_random(parts);
            break;
        }
        case SourceKind::commit_reveal:
        {
            const U256 commit_dl = w.chain.env().timestamp;
            const U256 reveal_dl = commit_dl + interval * U256{config.params.reveal_blocks};
            CommitRevealPool pool{commit_dl, reveal_dl};
            std::vector<std::pair<U256, U256>> secrets;
            for (const auto& p : w.players)
            {
                const U256 value = w.rng.next_u256();
                const U256 salt = w.rng.next_u256();
                secrets.emplace_back(value, salt);
                if (!deposit.is_zero())
                    w.chain.transfer(p, w.escrow, deposit);
                pool.commit(p, make_commitment(value, salt), w.chain.env());
            }
            checkpoint(round, "commit");
            next_block();
            for (std::size_t i = 0; i < w.players.size(); ++i)
            {
                if (w.rng.next_unit() < config.params.withhold_probability)
                {
                    ++out.withheld_reveals;
                    continue;
                }
                pool.reveal(w.players[i], secrets[i].first, secrets[i].second, w.chain.env());
            }
            const std::uint64_t waits = std::max(config.params.reveal_blocks, max_lead);
            for (std::uint64_t i = 0; i < waits; ++i)
                next_block();
            if (!deposit.is_zero())
            {
                out.slashed += settle_commit_deposits(w.chain, pool, w.escrow, manager, deposit);
                checkpoint(round, "settle_deposits");
            }
            try
            {
                word = pool.finalize(w.chain.env()).value;
            }
            catch (const Error& e)
            {
                if (e.code() != Errc::no_entropy)
                    throw;
                w.lottery.refund(w.chain, w.chain.direct_call(manager, 0));
                checkpoint(round, "refund");
                refunded = true;
            }
            break;
        }
        }
        if (refunded)
            continue;

        // Forecasters see only block variables, `lead` blocks before the draw.
        std::vector<Address> forecasts;
        for (const auto& s : config.strategies)
        {
            if (s.kind != StrategyKind::draw_forecaster)
                continue;
            const std::size_t back = std::min<std::size_t>(s.lead_blocks, history.size() - 1);
            forecasts.push_back(
                forecast_lottery_winner(history[history.size() - 1 - back], w.lottery.players()));
        }

        const std::vector<Address> entrants = w.lottery.players();
        const CallContext call = w.chain.direct_call(manager, 0);
        const Address winner = word ? w.lottery.pick_winner_with(w.chain, call, *word)
                                    : w.lottery.pick_winner(w.chain, call);
        checkpoint(round, "draw");

        const auto it = std::find(entrants.begin(), entrants.end(), winner);
        ++out.draw_wins[static_cast<std::size_t>(it - entrants.begin())];
        ++out.draws;

        std::size_t f = 0;
        for (std::size_t i = 0; i < config.strategies.size(); ++i)
        {
            if (config.strategies[i].kind != StrategyKind::draw_forecaster)
                continue;
            const bool hit = forecasts[f++] == winner;
            ++out.strategies[i].attempts;
            ++out.forecasts;
            if (hit)
            {
                ++out.strategies[i].wins;
                ++out.forecast_hits;
            }
        }
    }

    WeiDelta players_net;
    for (const auto& p : w.players)
        players_net += WeiDelta::between(config.params.initial_balance, w.chain.balance_of(p));
    for (std::size_t i = 0; i < config.strategies.size(); ++i)
    {
        if (config.strategies[i].kind == StrategyKind::honest_lottery_player)
        {
            out.strategies[i].attempts = entries;
            out.strategies[i].wins = out.draws;
            out.strategies[i].net_balance_delta_wei = players_net;
        }
    }
    out.digest = w.chain.state_digest();
    return out;
}

TrialResult run_trial(const ScenarioConfig& config, std::uint64_t trial)
{
    return config.game == GameKind::lottery ? run_lottery_trial(config, trial)
                                            : run_fomo_trial(config, trial);
}

void fold(SimReport& report, const TrialResult& t)
{
    if (report.strategies.empty())
    {
        report.strategies = t.strategies;
        report.draw_wins = t.draw_wins;
    }
    else
    {
        for (std::size_t i = 0; i < t.strategies.size(); ++i)
        {
            auto& s = report.strategies[i];
            const auto& u = t.strategies[i];
            s.attempts += u.attempts;
            s.wins += u.wins;
            s.net_balance_delta_wei += u.net_balance_delta_wei;
            s.qualifying_buys += u.qualifying_buys;
            s.tracker_sum_at_roll += u.tracker_sum_at_roll;
        }
        for (std::size_t i = 0; i < t.draw_wins.size(); ++i)
            report.draw_wins[i] += t.draw_wins[i];
    }
    report.draws += t.draws;
    report.forecasts += t.forecasts;
    report.forecast_hits += t.forecast_hits;
    report.rounds_settled += t.rounds_settled;
    report.withheld_reveals += t.withheld_reveals;
    report.slashed_deposits += t.slashed;
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t scenario_seed, std::uint64_t trial, std::uint64_t stream)
{
    return keccak256(encode_packed({U256{scenario_seed}, U256{trial}, U256{stream}}))
        .to_u256()
        .low64();
}

SimReport run_scenario(const ScenarioConfig& config, const RunOptions& options)
{
    validate(config);

    std::vector<std::optional<TrialResult>> results(config.trials);
    std::vector<std::exception_ptr> errors(config.trials);

    unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, config.trials));

    if (threads == 1)
    {
        for (std::uint64_t k = 0; k < config.trials; ++k)
        {
            const std::uint64_t t = options.reverse_order ? config.trials - 1 - k : k;
            results[t] = run_trial(config, t);
        }
    }
    else
    {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (std::uint64_t t = next++; t < config.trials; t = next++)
            {
                try
                {
                    results[t] = run_trial(config, t);
                }
                catch (...)
                {
                    errors[t] = std::current_exception();
                }
            }
        };
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        pool.clear();
        for (const auto& e : errors)
        {
            if (e)
                std::rethrow_exception(e);
        }
    }

    SimReport report;
    report.config_echo = to_json(config);
    report.trials = config.trials;
    PackedBytes digests;
    for (const auto& r : results)
    {
        fold(report, *r);
        digests.insert(digests.end(), r->digest.bytes.begin(), r->digest.bytes.end());
    }
    if (report.strategies.empty())
        report.strategies = blank_stats(config);
    report.chain_digest = keccak256(digests);
    report.guard_matrix = run_guard_matrix(config.scenario_seed);
    report.conservation_check = true;  // any failure aborted above
    return report;
}

std::vector<FixtureResult> run_fixtures(std::uint64_t seed)
{
    std::vector<FixtureResult> out;
    auto record = [&](std::string name, bool ok, std::string detail) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    auto setup = [&](Chain& chain, std::vector<Address>& accounts) {
        for (int i = 0; i < 6; ++i)
            accounts.push_back(chain.create_account(AccountKind::eoa, ether * U256{100}));
        Lottery lot = Lottery::create(chain, accounts.front());
        chain.advance_block(12, 1, 30'000'000, Address::filled(0xc0));
        for (const auto& a : accounts)
            lot.enter(chain, chain.direct_call(a, lottery_ticket_price));
        return lot;
    };

    {
        Chain chain{seed};
        std::vector<Address> accounts;
        Lottery lot = setup(chain, accounts);
        const bool ok = lot.pool(chain) == milli_ether(600) && lot.players().size() == 6;
        record("betting", ok,
            "pool " + lot.pool(chain).to_dec() + " wei, " + std::to_string(lot.players().size()) +
                " players");
    }
    {
        Chain chain{seed};
        std::vector<Address> accounts;
        Lottery lot = setup(chain, accounts);
        std::map<Address, U256> before;
        for (const auto& a : accounts)
            before[a] = chain.balance_of(a);
        const Address winner = lot.pick_winner(chain, chain.direct_call(accounts.front(), 0));
        bool ok = lot.pool(chain).is_zero() && lot.players().empty() && before.count(winner) == 1;
        for (const auto& a : accounts)
        {
            const U256 expect = a == winner ? before[a] + milli_ether(600) : before[a];
            ok = ok && chain.balance_of(a) == expect;
        }
        record("draw", ok, "winner " + winner.to_hex());
    }
    {
        Chain chain{seed};
        std::vector<Address> accounts;
        Lottery lot = setup(chain, accounts);
        std::map<Address, U256> before;
        for (const auto& a : accounts)
            before[a] = chain.balance_of(a);
        lot.refund(chain, chain.direct_call(accounts.front(), 0));
        bool ok = lot.pool(chain).is_zero() && lot.players().empty();
        for (const auto& a : accounts)
            ok = ok && chain.balance_of(a) == before[a] + lottery_ticket_price;
        record("refund", ok, "each entrant +100000000000000000 wei");
    }
    {
        Chain chain{seed};
        std::vector<Address> accounts;
        Lottery lot = setup(chain, accounts);
        const Digest before = chain.state_digest();
        bool rejected = false;
        try
        {
            lot.pick_winner(chain, chain.direct_call(accounts[1], 0));
        }
        catch (const Error& e)
        {
            rejected = e.code() == Errc::only_manager;
        }
        const bool ok = rejected && chain.state_digest() == before && lot.players().size() == 6;
        record("draw_by_non_manager_rejected", ok, rejected ? "OnlyManager" : "not rejected");
    }
    return out;
}
}  // namespace lotsim::harness
