#include "deduction/bench/runner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "deduction/analysis/analysis.hpp"
#include "deduction/bench/csvio.hpp"
#include "deduction/bench/decision_log.hpp"
#include "deduction/errors.hpp"
#include "deduction/games/registry.hpp"
#include "deduction/rng.hpp"
#include "deduction/version.hpp"

#include "config_json.hpp"

namespace deduction::bench {
namespace {

// Keeps the secret stream decorrelated from the agent stream that is
// seeded with the raw episode seed.
constexpr std::uint64_t kSecretStreamSalt = 0x736563726574ULL;

int resolve_workers(int workers) {
#ifdef _OPENMP
    if (workers <= 0) return omp_get_max_threads();
    return workers;
#else
    (void)workers;
    return 1;
#endif
}

struct EpisodeTiming {
    double mean_ms = 0.0;
    double max_ms = 0.0;
};

EpisodeTiming episode_timing(const EpisodeRecord& rec) {
    EpisodeTiming t;
    if (rec.wall_times_ms.empty()) return t;
    double sum = 0.0;
    for (double ms : rec.wall_times_ms) {
        sum += ms;
        t.max_ms = std::max(t.max_ms, ms);
    }
    t.mean_ms = sum / static_cast<double>(rec.wall_times_ms.size());
    return t;
}

}  // namespace

SecretToken draw_secret(const GameDef& game, std::uint64_t episode_seed) {
    const auto& universe = game.initial_candidates();
    if (universe.empty()) throw ContractViolation("draw_secret: empty universe");
    Rng rng(mix64(episode_seed ^ kSecretStreamSalt));
    return universe[static_cast<std::size_t>(rng.below(universe.size()))];
}

RunResult run_grid(const BenchmarkConfig& config) {
    config.validate();

    std::vector<std::unique_ptr<GameDef>> games;
    games.reserve(config.games.size());
    for (const auto& spec : config.games) games.push_back(make_game(spec));

    // Shared agents are only safe when decisions are played one per agent
    // stream; with a decision log we need per-episode buffering anyway, so
    // fresh agents per episode keep output independent of scheduling.
    std::vector<std::unique_ptr<AgentPolicy>> shared_agents;
    const bool per_episode_agents = !config.decision_log.empty();
    if (!per_episode_agents) {
        shared_agents.reserve(config.agents.size());
        for (const auto& spec : config.agents) shared_agents.push_back(make_agent(spec));
    }

    const std::size_t n_games = games.size();
    const std::size_t n_agents = config.agents.size();
    const std::size_t n_trials = static_cast<std::size_t>(config.trials);
    const std::size_t n_tasks = n_games * n_agents * n_trials;

    // Episode seeds, canonical order; fail loudly on the (astronomically
    // unlikely) collision rather than silently correlating streams.
    std::vector<std::uint64_t> seeds(n_tasks);
    {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(n_tasks * 2);
        std::size_t e = 0;
        for (std::size_t g = 0; g < n_games; ++g)
            for (std::size_t a = 0; a < n_agents; ++a)
                for (std::size_t t = 0; t < n_trials; ++t, ++e) {
                    seeds[e] = derive_seed(config.master_seed, g, a, t);
                    if (!seen.insert(seeds[e]).second)
                        throw ContractViolation("run_grid: episode seed collision");
                }
    }

    std::vector<std::size_t> step_caps(n_games);
    for (std::size_t g = 0; g < n_games; ++g)
        step_caps[g] = default_step_cap(games[g]->initial_candidates().size(),
                                        config.step_cap_multiplier);

    std::vector<std::optional<GridEpisode>> slots(n_tasks);
    std::vector<std::optional<CellFailure>> failure_slots(n_tasks);
    std::vector<std::vector<std::string>> line_slots(per_episode_agents ? n_tasks : 0);

    const int workers = resolve_workers(config.workers);
    (void)workers;

    const long long total = static_cast<long long>(n_tasks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (long long e = 0; e < total; ++e) {
        const std::size_t idx = static_cast<std::size_t>(e);
        const std::size_t g = idx / (n_agents * n_trials);
        const std::size_t a = (idx / n_trials) % n_agents;
        const std::size_t t = idx % n_trials;
        const GameDef& game = *games[g];
        const AgentSpec& aspec = config.agents[a];
        try {
            const std::uint64_t seed = seeds[idx];
            const SecretToken secret = draw_secret(game, seed);

            BufferingDecisionSink sink(!config.record_timings);
            AgentPolicy* agent = nullptr;
            std::unique_ptr<AgentPolicy> own;
            if (per_episode_agents) {
                own = make_agent(aspec);
                own->set_decision_sink(&sink);
                agent = own.get();
            } else {
                agent = shared_agents[a].get();
            }

            EpisodeRecord rec = play_episode(game, *agent, secret, seed, step_caps[g]);
            rec.agent = aspec.label;

            GridEpisode ge;
            ge.game_index = g;
            ge.agent_index = a;
            ge.trial = static_cast<int>(t);
            ge.record = std::move(rec);
            slots[idx] = std::move(ge);
            if (per_episode_agents) line_slots[idx] = sink.take_lines();
        } catch (const std::exception& ex) {
            CellFailure f;
            f.game = game.name();
            f.scale = game.scale_id();
            f.agent = aspec.label;
            f.trial = static_cast<int>(t);
            f.message = ex.what();
            failure_slots[idx] = std::move(f);
        }
    }

    RunResult result;
    result.episodes.reserve(n_tasks);
    for (auto& slot : slots)
        if (slot) result.episodes.push_back(std::move(*slot));
    for (auto& slot : failure_slots)
        if (slot) result.failures.push_back(std::move(*slot));
    if (per_episode_agents)
        for (auto& lines : line_slots)
            for (auto& line : lines) result.decision_lines.push_back(std::move(line));
    return result;
}

void write_episodes_csv(std::ostream& out, const BenchmarkConfig& config,
                        const RunResult& result) {
    write_csv_row(out, {"game", "scale", "agent", "trial", "seed", "steps", "reward",
                        "solved", "mean_decision_ms", "max_decision_ms"});
    for (const auto& ep : result.episodes) {
        const EpisodeRecord& r = ep.record;
        EpisodeTiming t;
        if (config.record_timings) t = episode_timing(r);
        write_csv_row(out, {r.game, r.scale, r.agent, std::to_string(ep.trial),
                            std::to_string(r.seed), std::to_string(r.steps),
                            format_fixed(r.reward, 9), r.solved ? "1" : "0",
                            format_fixed(t.mean_ms, 3), format_fixed(t.max_ms, 3)});
    }
}

void write_summary_csv(std::ostream& out, const BenchmarkConfig& config,
                       const RunResult& result) {
    std::vector<EpisodeRecord> records;
    records.reserve(result.episodes.size());
    for (const auto& ep : result.episodes) records.push_back(ep.record);
    const auto rows = analysis::summarize(records);

    write_csv_row(out, {"game", "scale", "agent", "episodes", "mean_steps", "stddev_steps",
                        "mean_reward", "mean_decision_ms", "unsolved"});
    for (const auto& row : rows) {
        const double mean_ms = config.record_timings ? row.mean_decision_ms : 0.0;
        write_csv_row(out, {row.game, row.scale, row.agent, std::to_string(row.episodes),
                            format_fixed(row.mean_steps, 6), format_fixed(row.stddev_steps, 6),
                            format_fixed(row.mean_reward, 6), format_fixed(mean_ms, 6),
                            std::to_string(row.unsolved)});
    }
}

void write_manifest(std::ostream& out, const BenchmarkConfig& config, const RunResult& result) {
    using nlohmann::json;
    json doc;
    doc["code_version"] = {{"semver", kVersion}, {"revision", kGitRevision}};
    doc["config"] = config_to_json(config);
    doc["seed_scheme"] = {
        {"description",
         "episode_seed = mix(mix(mix(mix(master_seed) ^ game_index) ^ agent_index) ^ "
         "trial_index) with the splitmix64 finalizer; the agent stream is "
         "mt19937_64(episode_seed); the secret is universe[below(|universe|)] on "
         "mt19937_64(mix(episode_seed ^ secret_salt))"},
        {"secret_salt", kSecretStreamSalt},
    };

    std::vector<std::unique_ptr<GameDef>> games;
    games.reserve(config.games.size());
    for (const auto& spec : config.games) games.push_back(make_game(spec));

    json games_json = json::array();
    for (std::size_t g = 0; g < games.size(); ++g) {
        const GameDef& game = *games[g];
        const auto& universe = game.initial_candidates();
        games_json.push_back({
            {"name", game.name()},
            {"scale", game.scale_id()},
            {"universe", universe.size()},
            {"step_cap", default_step_cap(universe.size(), config.step_cap_multiplier)},
            {"root_actions", game.legal_actions(game.initial_set(), 0).size()},
        });
    }
    doc["games"] = std::move(games_json);

    json agents_json = json::array();
    for (const auto& spec : config.agents)
        agents_json.push_back({{"label", spec.label}, {"name", spec.name}});
    doc["agents"] = std::move(agents_json);

    const std::size_t n_trials = static_cast<std::size_t>(config.trials);
    json cells = json::array();
    for (std::size_t g = 0; g < games.size(); ++g) {
        for (std::size_t a = 0; a < config.agents.size(); ++a) {
            json seeds = json::array();
            for (std::size_t t = 0; t < n_trials; ++t)
                seeds.push_back(derive_seed(config.master_seed, g, a, t));
            cells.push_back({{"game", games[g]->name()},
                             {"scale", games[g]->scale_id()},
                             {"agent", config.agents[a].label},
                             {"seeds", std::move(seeds)}});
        }
    }
    doc["cells"] = std::move(cells);

    json failures = json::array();
    for (const auto& f : result.failures)
        failures.push_back({{"game", f.game},
                            {"scale", f.scale},
                            {"agent", f.agent},
                            {"trial", f.trial},
                            {"message", f.message}});
    doc["failures"] = std::move(failures);

    out << doc.dump(2) << '\n';
}

void write_traces_jsonl(std::ostream& out, const BenchmarkConfig& config,
                        const RunResult& result) {
    using nlohmann::json;
    for (const auto& ep : result.episodes) {
        const EpisodeRecord& r = ep.record;
        json line;
        line["game"] = r.game;
        line["scale"] = r.scale;
        line["agent"] = r.agent;
        line["trial"] = ep.trial;
        line["seed"] = r.seed;
        line["initial_entropy_bits"] = r.initial_entropy_bits;
        line["solved"] = r.solved;
        line["reward"] = r.reward;
        json steps = json::array();
        for (const auto& st : r.trace)
            steps.push_back({{"step", st.step},
                             {"action", st.action.value},
                             {"observation", st.observation.value},
                             {"entropy_bits", st.entropy_bits}});
        line["trace"] = std::move(steps);
        if (config.record_timings) line["wall_times_ms"] = r.wall_times_ms;
        out << line.dump() << '\n';
    }
}

RunResult run_benchmark(const BenchmarkConfig& config) {
    RunResult result = run_grid(config);

    namespace fs = std::filesystem;
    const fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + config.output_dir +
                              "': " + ec.message());

    auto open = [&](const char* name) {
        std::ofstream f(dir / name, std::ios::binary);
        if (!f) throw ConfigError(std::string("cannot open output file '") + name + "'");
        return f;
    };

    {
        auto f = open("episodes.csv");
        write_episodes_csv(f, config, result);
    }
    {
        auto f = open("summary.csv");
        write_summary_csv(f, config, result);
    }
    {
        auto f = open("manifest.json");
        write_manifest(f, config, result);
    }
    if (config.write_traces) {
        auto f = open("traces.jsonl");
        write_traces_jsonl(f, config, result);
    }
    if (!config.decision_log.empty()) {
        fs::path log_path(config.decision_log);
        if (log_path.is_relative()) log_path = dir / log_path;
        std::ofstream f(log_path, std::ios::binary);
        if (!f)
            throw ConfigError("cannot open decision log '" + log_path.string() + "'");
        for (const auto& line : result.decision_lines) f << line << '\n';
    }

    // A cell whose every trial failed produces no summary row; make that
    // loud on stderr so thin CSVs are explainable.
    if (!result.failures.empty()) {
        std::unordered_set<std::string> ok_cells;
        for (const auto& ep : result.episodes)
            ok_cells.insert(ep.record.game + "\x1f" + ep.record.scale + "\x1f" + ep.record.agent);
        std::unordered_set<std::string> reported;
        for (const auto& f : result.failures) {
            const std::string key = f.game + "\x1f" + f.scale + "\x1f" + f.agent;
            if (!ok_cells.count(key) && reported.insert(key).second)
                std::cerr << "warning: every trial failed for " << f.game << "(" << f.scale
                          << ") / " << f.agent << "; cell omitted from summary.csv\n";
        }
        std::cerr << "warning: " << result.failures.size()
                  << " episode(s) failed; see manifest.json\n";
    }
    return result;
}

}  // namespace deduction::bench
