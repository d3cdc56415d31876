// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/harness/report.hpp>

#include <cmath>

namespace lotsim::harness
{
WeiDelta WeiDelta::between(const U256& before, const U256& after)
{
    if (after >= before)
        return {after - before, false};
    return {before - after, true};
}

WeiDelta& WeiDelta::operator+=(const WeiDelta& other)
{
    if (negative == other.negative)
    {
        magnitude += other.magnitude;
    }
    else if (magnitude >= other.magnitude)
    {
        magnitude -= other.magnitude;
    }
    else
    {
        magnitude = other.magnitude - magnitude;
        negative = other.negative;
    }
    if (magnitude.is_zero())
        negative = false;
    return *this;
}

std::string WeiDelta::to_string() const
{
    return (negative ? "-" : "") + magnitude.to_dec();
}

Rate make_rate(std::uint64_t successes, std::uint64_t trials) noexcept
{
    Rate r;
    r.successes = successes;
    r.trials = trials;
    if (trials == 0)
        return r;
    const double n = static_cast<double>(trials);
    r.rate = static_cast<double>(successes) / n;
    r.half_width = 3.0 * std::sqrt(r.rate * (1.0 - r.rate) / n);
    return r;
}

RateSummary estimate_rates(const SimReport& report)
{
    RateSummary s;
    for (const auto& st : report.strategies)
    {
        s.strategy_win_rates.emplace_back(st.name, make_rate(st.wins, st.attempts));
        if (st.qualifying_buys > 0)
        {
            const double mean_tracker = static_cast<double>(st.tracker_sum_at_roll) /
                                        static_cast<double>(st.qualifying_buys);
            s.airdrop_rates.emplace_back(
                st.name, std::pair{make_rate(st.wins, st.qualifying_buys), mean_tracker / 1000.0});
        }
    }
    for (const auto wins : report.draw_wins)
        s.draw_frequencies.push_back(make_rate(wins, report.draws));
    if (report.forecasts > 0)
        s.forecast_accuracy = make_rate(report.forecast_hits, report.forecasts);
    return s;
}
}  // namespace lotsim::harness
