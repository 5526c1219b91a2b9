#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "deduction/bench/config.hpp"
#include "deduction/episode.hpp"

namespace deduction::bench {

struct CellFailure {
    std::string game;
    std::string scale;
    std::string agent;
    int trial = 0;
    std::string message;
};

struct GridEpisode {
    std::size_t game_index = 0;
    std::size_t agent_index = 0;
    int trial = 0;
    EpisodeRecord record;  // record.agent carries the agent label
};

struct RunResult {
    // Canonical (game, agent, trial) order; failed episodes are absent
    // here and listed in `failures` instead.
    std::vector<GridEpisode> episodes;
    std::vector<CellFailure> failures;
    // One line per logged decision, canonical episode order; filled only
    // when the config names a decision log.
    std::vector<std::string> decision_lines;
};

// The secret an episode hides, drawn uniformly from the universe on a
// stream derived from (but distinct from) the agent's stream.
SecretToken draw_secret(const GameDef& game, std::uint64_t episode_seed);

// Play every (game, agent, trial) cell of the grid. Per-episode failures
// are collected, not fatal. Throws ConfigError for bad configs.
RunResult run_grid(const BenchmarkConfig& config);

// run_grid plus artifacts under config.output_dir: episodes.csv,
// summary.csv, manifest.json, optional traces.jsonl and decision log.
RunResult run_benchmark(const BenchmarkConfig& config);

void write_episodes_csv(std::ostream& out, const BenchmarkConfig& config,
                        const RunResult& result);
void write_summary_csv(std::ostream& out, const BenchmarkConfig& config,
                       const RunResult& result);
void write_manifest(std::ostream& out, const BenchmarkConfig& config, const RunResult& result);
void write_traces_jsonl(std::ostream& out, const BenchmarkConfig& config,
                        const RunResult& result);

}  // namespace deduction::bench
