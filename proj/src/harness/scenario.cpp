// lotsim: on-chain lottery randomness simulator
// Copyright 2026 The lotsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <lotsim/error.hpp>
#include <lotsim/harness/scenario.hpp>

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace lotsim::harness
{
namespace
{
constexpr std::uint64_t max_blocks = 10'000'000;
constexpr std::uint64_t max_trials = 1'000'000;
constexpr std::uint64_t max_players = 1'000;

std::string where(const YAML::Node& node, std::string_view field)
{
    std::string out = "field '" + std::string{field} + "'";
    const auto mark = node.Mark();
    if (mark.line >= 0)
        out += " (line " + std::to_string(mark.line + 1) + ")";
    return out;
}

[[noreturn]] void invalid(const YAML::Node& node, std::string_view field, std::string_view why)
{
    throw Error{Errc::validation_error, where(node, field) + ": " + std::string{why}};
}

[[noreturn]] void invalid(std::string_view field, std::string_view why)
{
    throw Error{Errc::validation_error, "field '" + std::string{field} + "': " + std::string{why}};
}

void reject_unknown_keys(
    const YAML::Node& map, std::initializer_list<std::string_view> allowed, std::string_view path)
{
    if (!map.IsMap())
        invalid(map, path, "expected a mapping");
    for (const auto& kv : map)
    {
        const auto key = kv.first.as<std::string>();
        bool known = false;
        for (const auto a : allowed)
            known = known || key == a;
        if (!known)
        {
            const std::string full = path.empty() ? key : std::string{path} + "." + key;
            invalid(kv.first, full, "unknown key");
        }
    }
}

std::string join(std::string_view path, std::string_view key)
{
    return path.empty() ? std::string{key} : std::string{path} + "." + std::string{key};
}

std::uint64_t read_u64(const YAML::Node& node, std::string_view field)
{
    if (!node.IsScalar())
        invalid(node, field, "expected an unsigned integer");
    const auto& s = node.Scalar();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        invalid(node, field, "expected an unsigned integer");
    try
    {
        return node.as<std::uint64_t>();
    }
    catch (const YAML::Exception&)
    {
        invalid(node, field, "integer out of range");
    }
}

U256 read_u256(const YAML::Node& node, std::string_view field)
{
    if (!node.IsScalar())
        invalid(node, field, "expected an integer or integer string");
    try
    {
        return U256::from_string(node.Scalar());
    }
    catch (const Error& e)
    {
        invalid(node, field, e.detail());
    }
}

double read_probability(const YAML::Node& node, std::string_view field)
{
    double p = 0.0;
    try
    {
        p = node.as<double>();
    }
    catch (const YAML::Exception&)
    {
        invalid(node, field, "expected a number");
    }
    if (!(p >= 0.0 && p <= 1.0))
        invalid(node, field, "must lie in [0, 1]");
    return p;
}

std::string read_string(const YAML::Node& node, std::string_view field)
{
    if (!node.IsScalar())
        invalid(node, field, "expected a string");
    return node.Scalar();
}

SourceKind read_source_kind(const YAML::Node& node, std::string_view field)
{
    const auto name = read_string(node, field);
    const auto kind = parse_source_kind(name);
    if (!kind)
        invalid(node, field, "unknown randomness source '" + name + "'");
    return *kind;
}

RandomSource read_source(const YAML::Node& node, std::string_view field)
{
    RandomSource src;
    if (node.IsScalar())
    {
        src.kind = read_source_kind(node, field);
        return src;
    }
    reject_unknown_keys(node, {"kind", "components"}, field);
    if (!node["kind"])
        invalid(node, join(field, "kind"), "missing");
    src.kind = read_source_kind(node["kind"], join(field, "kind"));
    if (const auto comps = node["components"])
    {
        if (!comps.IsSequence())
            invalid(comps, join(field, "components"), "expected a list");
        for (const auto& c : comps)
            src.components.push_back(read_source_kind(c, join(field, "components")));
    }
    return src;
}

SourceConfig read_randomness(const YAML::Node& node)
{
    constexpr std::string_view field = "randomness_source";
    SourceConfig cfg;
    if (node.IsScalar())
    {
        cfg.source.kind = read_source_kind(node, field);
        return cfg;
    }
    reject_unknown_keys(node, {"kind", "components", "schedule", "rotation_period"}, field);
    if (node["kind"])
        cfg.source.kind = read_source_kind(node["kind"], join(field, "kind"));
    if (const auto comps = node["components"])
    {
        if (!comps.IsSequence())
            invalid(comps, join(field, "components"), "expected a list");
        for (const auto& c : comps)
            cfg.source.components.push_back(read_source_kind(c, join(field, "components")));
    }
    if (const auto sched = node["schedule"])
    {
        if (!sched.IsSequence())
            invalid(sched, join(field, "schedule"), "expected a list");
        for (const auto& s : sched)
            cfg.schedule.push_back(read_source(s, join(field, "schedule")));
    }
    if (const auto p = node["rotation_period"])
        cfg.rotation_period = read_u256(p, join(field, "rotation_period"));
    return cfg;
}

Strategy read_strategy(const YAML::Node& node, std::string_view field)
{
    Strategy s;
    const YAML::Node kind_node = node.IsScalar() ? node : node["kind"];
    if (!node.IsScalar())
        reject_unknown_keys(node, {"kind", "params"}, field);
    if (!kind_node)
        invalid(node, join(field, "kind"), "missing");
    const auto kind = read_string(kind_node, join(field, "kind"));
    if (kind == "honest_buyer")
        s.kind = StrategyKind::honest_buyer;
    else if (kind == "selective_predictor")
        s.kind = StrategyKind::selective_predictor;
    else if (kind == "constructor_bypass")
        s.kind = StrategyKind::constructor_bypass;
    else if (kind == "honest_lottery_player")
        s.kind = StrategyKind::honest_lottery_player;
    else if (kind == "draw_forecaster")
        s.kind = StrategyKind::draw_forecaster;
    else
        invalid(kind_node, join(field, "kind"), "unknown strategy '" + kind + "'");

    if (node.IsMap())
    {
        if (const auto params = node["params"])
        {
            const auto ppath = join(field, "params");
            reject_unknown_keys(params, {"period", "value_wei", "lead_blocks"}, ppath);
            if (params["period"])
                s.period = read_u64(params["period"], join(ppath, "period"));
            if (params["value_wei"])
                s.value_wei = read_u256(params["value_wei"], join(ppath, "value_wei"));
            if (params["lead_blocks"])
                s.lead_blocks = read_u64(params["lead_blocks"], join(ppath, "lead_blocks"));
        }
    }
    return s;
}

void read_game_params(const YAML::Node& node, GameParams& gp)
{
    constexpr std::string_view path = "game_params";
    reject_unknown_keys(node,
        {"key_price", "round_extension", "round_cap", "airdrop_min_qualifying", "tracker_init",
            "airdrop_pot_fraction", "initial_balance", "reveal_blocks", "withhold_probability",
            "commit_deposit"},
        path);
    auto& f = gp.fomo;
    if (node["key_price"])
        f.key_price = read_u256(node["key_price"], join(path, "key_price"));
    if (node["round_extension"])
        f.round_extension = read_u256(node["round_extension"], join(path, "round_extension"));
    if (node["round_cap"])
        f.round_cap = read_u256(node["round_cap"], join(path, "round_cap"));
    if (node["airdrop_min_qualifying"])
    {
        f.airdrop_min_qualifying =
            read_u256(node["airdrop_min_qualifying"], join(path, "airdrop_min_qualifying"));
    }
    if (node["tracker_init"])
    {
        f.tracker_init = read_u256(node["tracker_init"], join(path, "tracker_init"));
        if (f.tracker_init >= U256{1000})
            invalid(node["tracker_init"], join(path, "tracker_init"), "must be < 1000");
    }
    if (node["airdrop_pot_fraction"])
    {
        f.airdrop_pot_percent =
            read_u256(node["airdrop_pot_fraction"], join(path, "airdrop_pot_fraction"));
    }
    if (node["initial_balance"])
        gp.initial_balance = read_u256(node["initial_balance"], join(path, "initial_balance"));
    if (node["reveal_blocks"])
        gp.reveal_blocks = read_u64(node["reveal_blocks"], join(path, "reveal_blocks"));
    if (node["withhold_probability"])
    {
        gp.withhold_probability =
            read_probability(node["withhold_probability"], join(path, "withhold_probability"));
    }
    if (node["commit_deposit"])
        gp.commit_deposit = read_u256(node["commit_deposit"], join(path, "commit_deposit"));
}

bool is_lottery_strategy(StrategyKind k) noexcept
{
    return k == StrategyKind::honest_lottery_player || k == StrategyKind::draw_forecaster;
}

void validate_source(const RandomSource& src, std::string_view field)
{
    if (src.kind == SourceKind::multi_source)
    {
        if (src.components.empty())
            invalid(field, "multi_source needs at least one component");
        for (const auto c : src.components)
        {
            if (c != SourceKind::block_vars && c != SourceKind::oracle)
                invalid(field, "multi_source components must be block_vars or oracle");
        }
    }
    else if (!src.components.empty())
    {
        invalid(field, "components are only valid for multi_source");
    }
}
}  // namespace

std::string_view to_string(GameKind g) noexcept
{
    switch (g)
    {
    case GameKind::lottery:
        return "lottery";
    case GameKind::fomo3d_lite:
        return "fomo3d_lite";
    }
    return "unknown";
}

std::string_view to_string(StrategyKind k) noexcept
{
    switch (k)
    {
    case StrategyKind::honest_buyer:
        return "honest_buyer";
    case StrategyKind::selective_predictor:
        return "selective_predictor";
    case StrategyKind::constructor_bypass:
        return "constructor_bypass";
    case StrategyKind::honest_lottery_player:
        return "honest_lottery_player";
    case StrategyKind::draw_forecaster:
        return "draw_forecaster";
    }
    return "unknown";
}

ScenarioConfig parse_scenario(std::string_view text, std::string_view origin)
{
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string{text});
    }
    catch (const YAML::ParserException& e)
    {
        throw Error{Errc::parse_error, std::string{origin} + ":" + std::to_string(e.mark.line + 1) +
                                           ":" + std::to_string(e.mark.column + 1) + ": " + e.msg};
    }
    if (!root.IsMap())
        throw Error{Errc::parse_error, std::string{origin} + ": top level must be a mapping"};

    reject_unknown_keys(root,
        {"name", "scenario_seed", "trials", "blocks", "block_interval_seconds", "n_players", "game",
            "guard", "randomness_source", "strategies", "game_params"},
        "");

    ScenarioConfig cfg;
    if (root["name"])
        cfg.name = read_string(root["name"], "name");
    if (root["scenario_seed"])
        cfg.scenario_seed = read_u64(root["scenario_seed"], "scenario_seed");
    if (root["trials"])
        cfg.trials = read_u64(root["trials"], "trials");
    if (root["blocks"])
        cfg.blocks = read_u64(root["blocks"], "blocks");
    if (root["block_interval_seconds"])
        cfg.block_interval_seconds = read_u256(root["block_interval_seconds"], "block_interval_seconds");
    if (root["n_players"])
        cfg.n_players = read_u64(root["n_players"], "n_players");
    if (root["game"])
    {
        const auto g = read_string(root["game"], "game");
        if (g == "lottery")
            cfg.game = GameKind::lottery;
        else if (g == "fomo3d_lite")
            cfg.game = GameKind::fomo3d_lite;
        else
            invalid(root["game"], "game", "expected lottery or fomo3d_lite");
    }
    if (root["guard"])
    {
        const auto g = parse_guard(read_string(root["guard"], "guard"));
        if (!g)
            invalid(root["guard"], "guard", "expected none, codesize, signature or origin");
        cfg.guard = *g;
    }
    if (root["randomness_source"])
        cfg.randomness = read_randomness(root["randomness_source"]);
    if (root["game_params"])
        read_game_params(root["game_params"], cfg.params);
    if (const auto strategies = root["strategies"])
    {
        if (!strategies.IsSequence())
            invalid(strategies, "strategies", "expected a list");
        for (std::size_t i = 0; i < strategies.size(); ++i)
        {
            cfg.strategies.push_back(
                read_strategy(strategies[i], "strategies[" + std::to_string(i) + "]"));
        }
    }

    validate(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw Error{Errc::io_error, "cannot open scenario " + path.string()};
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.string());
}

void validate(const ScenarioConfig& c)
{
    if (c.trials == 0 || c.trials > max_trials)
        invalid("trials", "must be in [1, 1000000]");
    if (c.blocks == 0 || c.blocks > max_blocks)
        invalid("blocks", "must be in [1, 10000000]");
    if (c.block_interval_seconds.is_zero() || c.block_interval_seconds > U256{86'400})
        invalid("block_interval_seconds", "must be in [1, 86400]");
    if (c.n_players == 0 || c.n_players > max_players)
        invalid("n_players", "must be in [1, 1000]");
    if (c.strategies.empty())
        invalid("strategies", "at least one strategy is required");

    const auto& f = c.params.fomo;
    if (f.tracker_init >= U256{1000})
        invalid("game_params.tracker_init", "must be < 1000");
    if (f.airdrop_pot_percent > U256{100})
        invalid("game_params.airdrop_pot_fraction", "must be <= 100 (percent)");
    if (f.key_price.is_zero())
        invalid("game_params.key_price", "must be positive");
    if (f.round_cap.is_zero())
        invalid("game_params.round_cap", "must be positive");
    if (c.params.reveal_blocks == 0 || c.params.reveal_blocks > 1000)
        invalid("game_params.reveal_blocks", "must be in [1, 1000]");

    std::size_t lottery_players = 0;
    for (std::size_t i = 0; i < c.strategies.size(); ++i)
    {
        const auto& s = c.strategies[i];
        const std::string field = "strategies[" + std::to_string(i) + "]";
        const bool lottery_kind = is_lottery_strategy(s.kind);
        if ((c.game == GameKind::lottery) != lottery_kind)
        {
            invalid(field + ".kind", std::string{to_string(s.kind)} + " does not apply to game " +
                                         std::string{to_string(c.game)});
        }
        if (s.period == 0)
            invalid(field + ".params.period", "must be positive");
        if (s.kind == StrategyKind::honest_lottery_player)
            ++lottery_players;
        if (s.lead_blocks > 1000)
            invalid(field + ".params.lead_blocks", "must be <= 1000");
    }
    if (c.game == GameKind::lottery && lottery_players != 1)
        invalid("strategies", "a lottery scenario needs exactly one honest_lottery_player");

    validate_source(c.randomness.source, "randomness_source");
    for (std::size_t i = 0; i < c.randomness.schedule.size(); ++i)
        validate_source(c.randomness.schedule[i], "randomness_source.schedule");
    if (!c.randomness.schedule.empty() && c.randomness.rotation_period.is_zero())
        invalid("randomness_source.rotation_period", "must be positive");
}

nlohmann::json to_json(const ScenarioConfig& c)
{
    using nlohmann::json;

    auto source_json = [](const RandomSource& s) {
        json j;
        j["kind"] = to_string(s.kind);
        json comps = json::array();
        for (const auto k : s.components)
            comps.push_back(to_string(k));
        j["components"] = comps;
        return j;
    };

    json j;
    j["name"] = c.name;
    j["scenario_seed"] = c.scenario_seed;
    j["trials"] = c.trials;
    j["blocks"] = c.blocks;
    j["block_interval_seconds"] = c.block_interval_seconds.to_dec();
    j["n_players"] = c.n_players;
    j["game"] = to_string(c.game);
    j["guard"] = to_string(c.guard);

    json rs = source_json(c.randomness.source);
    json sched = json::array();
    for (const auto& s : c.randomness.schedule)
        sched.push_back(source_json(s));
    rs["schedule"] = sched;
    rs["rotation_period"] = c.randomness.rotation_period.to_dec();
    j["randomness_source"] = rs;

    const auto& f = c.params.fomo;
    json gp;
    gp["key_price"] = f.key_price.to_dec();
    gp["round_extension"] = f.round_extension.to_dec();
    gp["round_cap"] = f.round_cap.to_dec();
    gp["airdrop_min_qualifying"] = f.airdrop_min_qualifying.to_dec();
    gp["tracker_init"] = f.tracker_init.to_dec();
    gp["airdrop_pot_fraction"] = f.airdrop_pot_percent.to_dec();
    gp["initial_balance"] = c.params.initial_balance.to_dec();
    gp["reveal_blocks"] = c.params.reveal_blocks;
    gp["withhold_probability"] = c.params.withhold_probability;
    gp["commit_deposit"] = c.params.commit_deposit.to_dec();
    j["game_params"] = gp;

    json strategies = json::array();
    for (const auto& s : c.strategies)
    {
        json sj;
        sj["kind"] = to_string(s.kind);
        sj["period"] = s.period;
        sj["value_wei"] = s.value_wei.to_dec();
        sj["lead_blocks"] = s.lead_blocks;
        strategies.push_back(sj);
    }
    j["strategies"] = strategies;
    return j;
}
}  // namespace lotsim::harness
