#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "deduction/bench/config.hpp"
#include "deduction/bench/csvio.hpp"
#include "deduction/bench/decision_log.hpp"
#include "deduction/bench/runner.hpp"
#include "deduction/errors.hpp"
#include "deduction/games/registry.hpp"
#include "deduction/games/treasure_hunt.hpp"
#include "deduction/rng.hpp"

using namespace deduction;
using namespace deduction::bench;

namespace {

BenchmarkConfig tiny_config() {
    BenchmarkConfig config;
    games::GameSpec treasure;
    treasure.name = "treasure_hunt";
    treasure.scale = "8";
    config.games.push_back(treasure);
    AgentSpec full;
    full.name = "full_ises";
    full.label = "full_ises";
    config.agents.push_back(full);
    AgentSpec random;
    random.name = "random";
    random.label = "random";
    config.agents.push_back(random);
    config.trials = 3;
    config.master_seed = 7;
    config.record_timings = false;
    return config;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    return lines;
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag)
        : path(std::filesystem::temp_directory_path() /
               ("deduction-test-" + tag + "-" + std::to_string(::getpid()))) {
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

// ------------------------------------------------------------------- csv I/O

TEST_CASE("csv escaping follows RFC 4180") {
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("with,comma") == "\"with,comma\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
    CHECK(csv_escape("") == "");

    std::ostringstream out;
    write_csv_row(out, {"a", "b,c", "d"});
    CHECK(out.str() == "a,\"b,c\",d\n");
}

TEST_CASE("fixed-point formatting is stable") {
    CHECK(format_fixed(0.0, 3) == "0.000");
    CHECK(format_fixed(1.0 / 3.0, 9) == "0.333333333");
    CHECK(format_fixed(2.5, 0) == "2");
    CHECK(format_fixed(-1.25, 2) == "-1.25");
}

// ------------------------------------------------------------------- configs

TEST_CASE("config parsing applies documented defaults") {
    const std::string text = R"({
        "games": [{"name": "treasure_hunt", "scale": "8"}],
        "agents": [
            {"name": "random"},
            {"name": "sampled_ises"},
            {"name": "ismcts"}
        ],
        "master_seed": 5
    })";
    const BenchmarkConfig config = parse_config(text);
    CHECK(config.trials == 500);
    CHECK(config.step_cap_multiplier == 10.0);
    CHECK(config.output_dir == "bench-out");
    CHECK(config.workers == 0);
    CHECK(config.record_timings == true);
    CHECK(config.write_traces == false);

    CHECK(config.agents[0].label == "random");
    // Omitted sample sizes mean "score everything" — the deadline is the
    // only default budget.
    CHECK(!config.agents[1].state_sample.has_value());
    CHECK(!config.agents[1].action_sample.has_value());
    CHECK(*config.agents[1].deadline_ms == 100.0);
    CHECK(*config.agents[2].deadline_ms == 100.0);
    CHECK(config.agents[2].rollout_cap == 0);
}

TEST_CASE("config parsing rejects unknown keys at every level") {
    CHECK_THROWS_AS(parse_config(R"({"games": [], "agents": [], "master_seed": 1,
                                     "typo_key": true})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8",
                                                "color": "red"}],
                                     "agents": [{"name": "random"}], "master_seed": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "random", "deadline_ms": 5}],
                                     "master_seed": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "full_ises", "state_sample": 4}],
                                     "master_seed": 1})"),
                    ConfigError);
}

TEST_CASE("config parsing rejects structural mistakes") {
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"agents": [{"name": "random"}], "master_seed": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "master_seed": 1})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "random"}]})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "random"}], "master_seed": 1,
                                     "trials": 0})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "no_such_agent"}],
                                     "master_seed": 1})"),
                    ConfigError);
    // Zero decision budgets are rejected up front.
    CHECK_THROWS_AS(parse_config(R"({"games": [{"name": "treasure_hunt", "scale": "8"}],
                                     "agents": [{"name": "ismcts", "deadline_ms": 0}],
                                     "master_seed": 1})"),
                    ConfigError);
}

TEST_CASE("duplicate agent labels are rejected") {
    const std::string text = R"({
        "games": [{"name": "treasure_hunt", "scale": "8"}],
        "agents": [{"name": "random", "label": "a"}, {"name": "full_ises", "label": "a"}],
        "master_seed": 1
    })";
    CHECK_THROWS_AS(parse_config(text), ConfigError);
}

TEST_CASE("make_agent covers the advertised names and rejects others") {
    for (const std::string& name : known_agents()) {
        AgentSpec spec;
        spec.name = name;
        spec.label = name;
        const auto agent = make_agent(spec);
        CHECK(agent->name() == name);
    }
    AgentSpec bogus;
    bogus.name = "alphazero";
    CHECK_THROWS_AS(make_agent(bogus), ConfigError);
}

// ----------------------------------------------------------------- decisions

TEST_CASE("decision lines can zero wall times for determinism") {
    const games::TreasureHunt game(8);
    DecisionRecord rec;
    rec.agent = "full_ises";
    rec.wall_ms = 3.25;
    rec.states_used = 8;
    rec.actions_scored = 2;
    rec.scored = {{ActionToken{3}, 2.0}, {ActionToken{0}, 2.456}};
    rec.chosen = ActionToken{3};

    const auto timed = nlohmann::json::parse(decision_to_jsonl(game, rec, false));
    CHECK(timed.at("wall_ms").get<double>() == 3.25);
    CHECK(timed.at("game") == "treasure_hunt(8)");
    CHECK(timed.at("chosen") == "probe3");
    CHECK(timed.at("scored").size() == 2);

    const auto zeroed = nlohmann::json::parse(decision_to_jsonl(game, rec, true));
    CHECK(zeroed.at("wall_ms").get<double>() == 0.0);
}

// -------------------------------------------------------------------- runner

TEST_CASE("secrets derive deterministically from the episode seed") {
    const games::TreasureHunt game(8);
    const SecretToken a = draw_secret(game, 12345);
    const SecretToken b = draw_secret(game, 12345);
    CHECK(a == b);
    CHECK(game.initial_set().contains(a));
    // Different seeds eventually hit different cells.
    std::set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < 64; ++s) seen.insert(draw_secret(game, s).value);
    CHECK(seen.size() > 1);
}

TEST_CASE("a one-trial grid plays exactly one episode") {
    BenchmarkConfig config = tiny_config();
    config.agents.resize(1);
    config.trials = 1;
    const RunResult result = run_grid(config);
    CHECK(result.failures.empty());
    REQUIRE(result.episodes.size() == 1);
    const EpisodeRecord& rec = result.episodes[0].record;
    CHECK(rec.game == "treasure_hunt");
    CHECK(rec.scale == "8");
    CHECK(rec.agent == "full_ises");
    CHECK(rec.seed == derive_seed(7, 0, 0, 0));
    CHECK(rec.solved);
    CHECK(rec.steps == 3);
}

TEST_CASE("episode seeds are distinct across the grid") {
    BenchmarkConfig config = tiny_config();
    config.trials = 25;
    const RunResult result = run_grid(config);
    std::set<std::uint64_t> seeds;
    for (const auto& ep : result.episodes) seeds.insert(ep.record.seed);
    CHECK(seeds.size() == result.episodes.size());
}

TEST_CASE("grid output is independent of the worker count") {
    BenchmarkConfig config = tiny_config();
    config.trials = 8;

    config.workers = 1;
    const RunResult serial = run_grid(config);
    config.workers = 4;
    const RunResult parallel = run_grid(config);

    std::ostringstream a, b;
    write_episodes_csv(a, config, serial);
    write_episodes_csv(b, config, parallel);
    CHECK(a.str() == b.str());

    std::ostringstream sa, sb;
    write_summary_csv(sa, config, serial);
    write_summary_csv(sb, config, parallel);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("agent labels name the rows") {
    BenchmarkConfig config = tiny_config();
    config.trials = 1;
    config.agents[0].label = "exact";
    const RunResult result = run_grid(config);
    CHECK(result.episodes[0].record.agent == "exact");
    std::ostringstream out;
    write_summary_csv(out, config, result);
    CHECK(out.str().find("exact") != std::string::npos);
}

TEST_CASE("a four-agent grid over three treasure scales yields twelve summary rows") {
    BenchmarkConfig config;
    for (const char* scale : {"8", "16", "32"}) {
        games::GameSpec spec;
        spec.name = "treasure_hunt";
        spec.scale = scale;
        config.games.push_back(spec);
    }
    for (const char* name : {"full_ises", "sampled_ises", "ismcts", "random"}) {
        AgentSpec spec;
        spec.name = name;
        spec.label = name;
        if (spec.name == "sampled_ises") {
            spec.state_sample = 16;
            spec.action_sample = 16;
        }
        if (spec.name == "ismcts") spec.deadline_ms = 2.0;
        config.agents.push_back(spec);
    }
    config.trials = 2;  // the full 500-trial grid runs under the benchmark CLI
    config.master_seed = 11;
    config.record_timings = false;

    const RunResult result = run_grid(config);
    CHECK(result.failures.empty());
    CHECK(result.episodes.size() == 3 * 4 * 2);
    std::ostringstream out;
    write_summary_csv(out, config, result);
    CHECK(count_lines(out.str()) == 13);  // header + 12 groups
}

TEST_CASE("run_benchmark writes identical bytes for identical configs") {
    TempDir dir_a("bytes-a");
    TempDir dir_b("bytes-b");

    BenchmarkConfig config = tiny_config();
    config.write_traces = true;
    config.decision_log = "decisions.jsonl";

    config.output_dir = dir_a.path.string();
    config.workers = 1;
    run_benchmark(config);

    config.output_dir = dir_b.path.string();
    config.workers = 4;
    run_benchmark(config);

    for (const std::string name :
         {"episodes.csv", "summary.csv", "traces.jsonl", "decisions.jsonl"}) {
        CAPTURE(name);
        CHECK(slurp(dir_a.path / name) == slurp(dir_b.path / name));
    }
    // The manifest echoes output_dir and workers, which differ by design;
    // everything derived from the run itself must agree.
    const auto ma = nlohmann::json::parse(slurp(dir_a.path / "manifest.json"));
    const auto mb = nlohmann::json::parse(slurp(dir_b.path / "manifest.json"));
    CHECK(ma.at("cells") == mb.at("cells"));
    CHECK(ma.at("games") == mb.at("games"));
    CHECK(ma.at("failures") == mb.at("failures"));
    CHECK(ma.at("seed_scheme") == mb.at("seed_scheme"));
}

TEST_CASE("the manifest makes the run reproducible") {
    TempDir dir("manifest");
    BenchmarkConfig config = tiny_config();
    config.output_dir = dir.path.string();
    const RunResult result = run_benchmark(config);

    const auto manifest = nlohmann::json::parse(slurp(dir.path / "manifest.json"));
    CHECK(manifest.at("config").at("master_seed").get<std::uint64_t>() == 7);
    CHECK(manifest.at("config").at("trials").get<int>() == 3);
    CHECK(manifest.at("games").size() == 1);
    CHECK(manifest.at("games")[0].at("universe").get<int>() == 8);
    CHECK(manifest.at("failures").empty());

    // Every recorded per-cell seed matches the documented derivation.
    const auto& cells = manifest.at("cells");
    REQUIRE(cells.size() == 2);
    for (std::size_t a = 0; a < 2; ++a) {
        const auto& seeds = cells[a].at("seeds");
        REQUIRE(seeds.size() == 3);
        for (std::size_t t = 0; t < 3; ++t) {
            CHECK(seeds[t].get<std::uint64_t>() == derive_seed(7, 0, a, t));
        }
    }
    // And the CSV rows carry exactly those seeds.
    std::size_t row = 0;
    for (const auto& ep : result.episodes) {
        CHECK(ep.record.seed == derive_seed(7, 0, ep.agent_index, ep.trial));
        ++row;
    }
    CHECK(row == 6);
}

TEST_CASE("episode csv timing columns zero out when timings are off") {
    BenchmarkConfig config = tiny_config();
    config.trials = 1;
    config.agents.resize(1);
    const RunResult result = run_grid(config);
    std::ostringstream out;
    write_episodes_csv(out, config, result);
    const std::string text = out.str();
    CHECK(text.find(",0.000,0.000\n") != std::string::npos);
}

TEST_CASE("failed cells surface in the manifest") {
    BenchmarkConfig config = tiny_config();
    RunResult result;
    result.failures.push_back({"treasure_hunt", "8", "full_ises", 2, "boom"});
    std::ostringstream out;
    write_manifest(out, config, result);
    const auto manifest = nlohmann::json::parse(out.str());
    REQUIRE(manifest.at("failures").size() == 1);
    CHECK(manifest.at("failures")[0].at("trial").get<int>() == 2);
    CHECK(manifest.at("failures")[0].at("message") == "boom");
}
