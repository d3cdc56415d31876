// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/error.hpp>
#include <lotsim/harness/report.hpp>

#include <fstream>
#include <sstream>

namespace lotsim::harness
{
namespace
{
nlohmann::json rate_json(const Rate& r)
{
    return {{"successes", r.successes}, {"trials", r.trials}, {"rate", r.rate},
        {"half_width_3sigma", r.half_width}};
}

nlohmann::json guard_matrix_json(const GuardMatrix& m)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto c : all_caller_classes)
    {
        for (const auto g : all_guards)
            out[std::string{to_string(c)}][std::string{to_string(g)}] = m.at(c, g);
    }
    return out;
}

// CSV fields here are identifiers and integers; quote only if needed.
std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (const char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}
}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) noexcept
{
    if (name == "json")
        return ReportFormat::json;
    if (name == "csv")
        return ReportFormat::csv;
    return std::nullopt;
}

nlohmann::json to_json(const SimReport& report)
{
    const auto rates = estimate_rates(report);

    nlohmann::json strategies = nlohmann::json::array();
    for (std::size_t i = 0; i < report.strategies.size(); ++i)
    {
        const auto& s = report.strategies[i];
        nlohmann::json j = {{"name", s.name}, {"kind", s.kind}, {"attempts", s.attempts},
            {"wins", s.wins}, {"net_balance_delta_wei", s.net_balance_delta_wei.to_string()},
            {"win_rate", rate_json(rates.strategy_win_rates[i].second)}};
        if (s.qualifying_buys > 0)
        {
            j["qualifying_buys"] = s.qualifying_buys;
            j["tracker_sum_at_roll"] = s.tracker_sum_at_roll;
        }
        strategies.push_back(std::move(j));
    }
    for (const auto& [name, pair] : rates.airdrop_rates)
    {
        for (auto& j : strategies)
        {
            if (j["name"] == name)
            {
                j["airdrop_rate_per_qualifying_buy"] = rate_json(pair.first);
                j["expected_rate_from_tracker_mean"] = pair.second;
            }
        }
    }

    nlohmann::json draws = nlohmann::json::array();
    for (std::size_t i = 0; i < report.draw_wins.size(); ++i)
        draws.push_back({{"player", i}, {"frequency", rate_json(rates.draw_frequencies[i])}});

    nlohmann::json out = {
        {"config_echo", report.config_echo},
        {"trials", report.trials},
        {"strategies", std::move(strategies)},
        {"draws", report.draws},
        {"draw_frequencies", std::move(draws)},
        {"rounds_settled", report.rounds_settled},
        {"withheld_reveals", report.withheld_reveals},
        {"slashed_deposits_wei", report.slashed_deposits.to_dec()},
        {"conservation_check", report.conservation_check},
        {"guard_matrix", guard_matrix_json(report.guard_matrix)},
        {"chain_digest", report.chain_digest.to_hex()},
    };
    if (rates.forecast_accuracy)
        out["mitigation_forecast_accuracy"] = rate_json(*rates.forecast_accuracy);
    else
        out["mitigation_forecast_accuracy"] = nullptr;
    return out;
}

std::string serialize(const SimReport& report, ReportFormat format)
{
    if (format == ReportFormat::json)
        return to_json(report).dump(2) + "\n";

    std::ostringstream os;
    os << "strategy,kind,attempts,wins,net_balance_delta_wei\n";
    for (const auto& s : report.strategies)
    {
        os << csv_field(s.name) << ',' << csv_field(s.kind) << ',' << s.attempts << ','
           << s.wins << ',' << s.net_balance_delta_wei.to_string() << '\n';
    }
    return os.str();
}

void emit_report(const SimReport& report, ReportFormat format, const std::filesystem::path& path)
{
    const std::string text = serialize(report, format);
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out)
        throw Error{Errc::io_error, "cannot open " + path.string() + " for writing"};
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw Error{Errc::io_error, "write failed for " + path.string()};
}
}  // namespace lotsim::harness
