// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/attacks.hpp>
#include <lotsim/error.hpp>
#include <lotsim/harness/runner.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace
{
using namespace lotsim;

constexpr int exit_ok = 0;
constexpr int exit_invariant = 1;
constexpr int exit_config = 2;
constexpr int exit_io = 3;

int exit_code_for(Errc code)
{
    switch (code)
    {
    case Errc::config_error:
    case Errc::parse_error:
    case Errc::validation_error:
        return exit_config;
    case Errc::io_error:
        return exit_io;
    default:
        return exit_invariant;
    }
}

std::optional<std::uint64_t> env_seed()
{
    const char* text = std::getenv("LOTSIM_SEED");
    if (text == nullptr || *text == '\0')
        return std::nullopt;
    const U256 v = U256::from_string(text);
    if (!v.fits_u64())
        throw Error{Errc::config_error, "LOTSIM_SEED does not fit in 64 bits"};
    return v.low64();
}

int cmd_run(const std::string& scenario_path, std::optional<std::uint64_t> seed,
    std::optional<std::uint64_t> trials, const std::string& out_path, const std::string& format,
    unsigned threads)
{
    auto config = harness::load_scenario(scenario_path);
    if (seed)
        config.scenario_seed = *seed;
    else if (const auto s = env_seed())
        config.scenario_seed = *s;
    if (trials)
        config.trials = *trials;

    const auto fmt = harness::parse_format(format);
    if (!fmt)
        throw Error{Errc::config_error, "unknown format '" + format + "'"};

    const auto report = harness::run_scenario(config, {threads, false});
    if (out_path.empty() || out_path == "-")
        std::cout << harness::serialize(report, *fmt);
    else
        harness::emit_report(report, *fmt, out_path);
    return exit_ok;
}

int cmd_attack_demo(const std::string& guard_name, std::uint64_t seed)
{
    const auto guard = parse_guard(guard_name);
    if (!guard || *guard == GuardChoice::none)
        throw Error{Errc::config_error, "unknown guard '" + guard_name + "'"};

    const GuardMatrix m = run_guard_matrix(seed);
    const GuardMatrix expected = expected_guard_matrix();
    std::cout << "caller                    ";
    for (const auto g : all_guards)
        std::cout << (g == *guard ? "*" : " ") << to_string(g) << "  ";
    std::cout << '\n';
    bool matches = true;
    for (const auto c : all_caller_classes)
    {
        std::string label{to_string(c)};
        label.resize(26, ' ');
        std::cout << label;
        for (const auto g : all_guards)
        {
            std::string cell = m.at(c, g) ? " pass" : " BLOCK";
            cell.resize(to_string(g).size() + 3, ' ');
            std::cout << cell;
            matches = matches && m.at(c, g) == expected.at(c, g);
        }
        std::cout << '\n';
    }
    const bool bypass = m.at(CallerClass::contract_in_constructor, *guard);
    std::cout << "constructor bypass against " << to_string(*guard) << ": "
              << (bypass ? "succeeds" : "blocked") << '\n';
    std::cout << "matrix " << (matches ? "matches" : "DIFFERS FROM") << " the expected table\n";
    return matches ? exit_ok : exit_invariant;
}

int cmd_fixtures(std::uint64_t seed)
{
    bool all = true;
    for (const auto& f : harness::run_fixtures(seed))
    {
        std::cout << (f.passed ? "PASS " : "FAIL ") << f.name << ": " << f.detail << '\n';
        all = all && f.passed;
    }
    return all ? exit_ok : exit_invariant;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lotsim: deterministic simulator for on-chain lottery randomness"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out_path;
    std::string format = "json";
    unsigned threads = 1;

    auto* run = app.add_subcommand("run", "run a scenario and emit a report");
    run->add_option("--scenario", scenario_path, "scenario file")->required();
    run->add_option("--seed", seed, "scenario seed (overrides LOTSIM_SEED and the file)");
    run->add_option("--trials", trials, "number of trials")->check(CLI::Range(1ull, 1'000'000ull));
    run->add_option("--out", out_path, "report path (default stdout)");
    run->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    run->add_option("--threads", threads, "worker threads, 0 = all cores");

    std::string guard_name;
    std::uint64_t demo_seed = 1;
    auto* demo = app.add_subcommand("attack-demo", "print the guard bypass matrix");
    demo->add_option("--guard", guard_name, "codesize, origin or sig")
        ->required()
        ->check(CLI::IsMember({"codesize", "origin", "sig", "signature"}));
    demo->add_option("--seed", demo_seed, "chain seed");

    std::uint64_t fixture_seed = 1;
    auto* fixtures = app.add_subcommand("fixtures", "run the six-account betting/draw/refund fixtures");
    fixtures->add_option("--seed", fixture_seed, "chain seed");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (run->parsed())
            return cmd_run(scenario_path, seed, trials, out_path, format, threads);
        if (demo->parsed())
            return cmd_attack_demo(guard_name, demo_seed);
        if (fixtures->parsed())
            return cmd_fixtures(fixture_seed);
    }
    catch (const Error& e)
    {
        std::cerr << "lotsim: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    catch (const std::exception& e)
    {
        std::cerr << "lotsim: " << e.what() << '\n';
        return exit_invariant;
    }
    return exit_ok;
}
