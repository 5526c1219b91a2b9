// Benchmark harness entry point.
//
//   deduction-bench run --config grid.json
//   deduction-bench profile --game mastermind --scale 3x3
//   deduction-bench trajectory --game treasure_hunt --scale 8 --agent full_ises
//
// Exit status: 0 success, 2 config/refusal error, 3 partial episode failures.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deduction/analysis/analysis.hpp"
#include "deduction/bench/config.hpp"
#include "deduction/bench/csvio.hpp"
#include "deduction/bench/runner.hpp"
#include "deduction/episode.hpp"
#include "deduction/errors.hpp"
#include "deduction/games/registry.hpp"
#include "deduction/rng.hpp"
#include "deduction/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

using namespace deduction;

// Streams CSV rows to --out, or stdout when no path was given.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

struct GameOptions {
    std::string game;
    std::string scale;
    std::string dictionary;
    bool consistent = false;

    games::GameSpec spec() const {
        games::GameSpec s;
        s.name = game;
        s.scale = scale;
        s.consistent_guesses_only = consistent;
        s.dictionary_path = dictionary;
        return s;
    }
};

void add_game_options(CLI::App& cmd, GameOptions& opts) {
    cmd.add_option("--game", opts.game, "Game name")->required();
    cmd.add_option("--scale", opts.scale, "Scale string, e.g. 4x6 or 8")->required();
    cmd.add_option("--dict", opts.dictionary, "Dictionary file (wordle only)");
    cmd.add_flag("--consistent", opts.consistent,
                 "Restrict guesses to live candidates (code-guessing games)");
}

int cmd_run(const std::string& config_path) {
    bench::BenchmarkConfig config = bench::load_config_file(config_path);
    if (const char* dir = std::getenv("DEDUCTION_OUT_DIR"); dir != nullptr && *dir != '\0') {
        config.output_dir = dir;
    }
    const bench::RunResult result = bench::run_benchmark(config);
    std::cout << "wrote " << result.episodes.size() << " episode(s) to " << config.output_dir
              << " (" << result.failures.size() << " failed)\n";
    return result.failures.empty() ? kExitOk : kExitPartial;
}

int cmd_profile(const GameOptions& opts, std::size_t cap, const std::string& out_path) {
    const auto game = games::make_game(opts.spec());
    const analysis::FirstMoveProfile profile = analysis::first_move_profile(*game, cap);
    const auto rows = analysis::sorted_rows(profile);

    OutputTarget target(out_path);
    std::ostream& out = target.stream();
    bench::write_csv_row(out, {"action", "posterior_bits", "change_bits"});
    for (const analysis::ProfileRow& row : rows) {
        bench::write_csv_row(out, {game->format_action(row.action),
                                   bench::format_fixed(row.posterior_bits, 9),
                                   bench::format_fixed(row.change_bits, 9)});
    }
    return kExitOk;
}

struct TrajectoryOptions {
    GameOptions game;
    std::string agent;
    int episodes = 20;
    std::uint64_t seed = 0;
    double step_cap_multiplier = 10.0;
    // Agent knobs; only the ones the named agent understands are used.
    std::optional<std::size_t> state_sample;
    std::optional<std::size_t> action_sample;
    std::optional<double> deadline_ms;
    double exploration = 1.4142135623730951;
    int rollout_cap = 0;
    bool parallel = false;
    std::string out_path;
};

int cmd_trajectory(const TrajectoryOptions& opts) {
    const auto game = games::make_game(opts.game.spec());

    bench::AgentSpec aspec;
    aspec.name = opts.agent;
    aspec.label = opts.agent;
    aspec.state_sample = opts.state_sample;
    aspec.action_sample = opts.action_sample;
    aspec.deadline_ms = opts.deadline_ms;
    aspec.exploration = opts.exploration;
    aspec.rollout_cap = opts.rollout_cap;
    aspec.parallel = opts.parallel;
    const auto agent = bench::make_agent(aspec);

    const int step_cap =
        default_step_cap(game->initial_candidates().size(), opts.step_cap_multiplier);
    std::vector<EpisodeRecord> records;
    records.reserve(static_cast<std::size_t>(opts.episodes));
    for (int t = 0; t < opts.episodes; ++t) {
        const std::uint64_t episode_seed =
            derive_seed(opts.seed, 0, 0, static_cast<std::uint64_t>(t));
        const SecretToken secret = bench::draw_secret(*game, episode_seed);
        records.push_back(play_episode(*game, *agent, secret, episode_seed, step_cap));
    }

    const analysis::TrajectoryBand band = analysis::trajectory_band(records);
    OutputTarget target(opts.out_path);
    std::ostream& out = target.stream();
    bench::write_csv_row(out, {"step", "min_bits", "mean_bits", "max_bits"});
    for (const analysis::BandRow& row : band.rows) {
        bench::write_csv_row(out, {std::to_string(row.step), bench::format_fixed(row.min_bits, 6),
                                   bench::format_fixed(row.mean_bits, 6),
                                   bench::format_fixed(row.max_bits, 6)});
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deduction-game benchmark harness"};
    app.set_version_flag("--version", std::string(kVersion) + " (" + kGitRevision + ")");
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Play a benchmark grid from a JSON config");
    std::string config_path;
    run->add_option("--config", config_path, "JSON benchmark config")->required();

    auto* profile = app.add_subcommand("profile", "Exhaustive first-move entropy profile (CSV)");
    GameOptions profile_game;
    add_game_options(*profile, profile_game);
    std::size_t cap = analysis::kDefaultEnumerationCap;
    std::string profile_out;
    profile->add_option("--cap", cap, "Enumeration cap on |actions| * |candidates|");
    profile->add_option("--out", profile_out, "Output file (default stdout)");

    auto* trajectory =
        app.add_subcommand("trajectory", "Entropy band over repeated episodes (CSV)");
    TrajectoryOptions topts;
    add_game_options(*trajectory, topts.game);
    trajectory->add_option("--agent", topts.agent, "Agent name")
        ->required()
        ->check(CLI::IsMember(bench::known_agents()));
    trajectory->add_option("--episodes", topts.episodes, "Episode count (default 20)")
        ->check(CLI::PositiveNumber);
    trajectory->add_option("--seed", topts.seed, "Master seed (default 0)");
    trajectory->add_option("--step-cap-mult", topts.step_cap_multiplier,
                           "Step cap multiplier (default 10)");
    std::size_t m = 0, n = 0;
    double deadline = -1.0;
    auto* m_opt = trajectory->add_option("--state-sample", m, "sampled_ises: states per decision");
    auto* n_opt =
        trajectory->add_option("--action-sample", n, "sampled_ises: actions per decision");
    auto* d_opt = trajectory->add_option("--deadline-ms", deadline,
                                         "sampled_ises/ismcts: decision budget in ms");
    trajectory->add_option("--exploration", topts.exploration, "ismcts: UCB1 constant");
    trajectory->add_option("--rollout-cap", topts.rollout_cap,
                           "ismcts: rollout depth cap (0 = derived)");
    trajectory->add_flag("--parallel", topts.parallel, "full_ises: OpenMP scoring kernel");
    trajectory->add_option("--out", topts.out_path, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) return cmd_run(config_path);
        if (*profile) return cmd_profile(profile_game, cap, profile_out);
        if (*m_opt) topts.state_sample = m;
        if (*n_opt) topts.action_sample = n;
        if (*d_opt) topts.deadline_ms = deadline;
        return cmd_trajectory(topts);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitConfig;
    }
}
