#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deduction/agent.hpp"
#include "deduction/games/registry.hpp"

namespace deduction::bench {

// One agent entry. `name` picks the algorithm, `label` names the CSV
// rows (defaults to `name`; must be unique across the run).
struct AgentSpec {
    std::string name;
    std::string label;
    // sampled_ises
    std::optional<std::size_t> state_sample;
    std::optional<std::size_t> action_sample;
    // sampled_ises + ismcts
    std::optional<double> deadline_ms;
    // ismcts
    double exploration = 1.4142135623730951;
    int rollout_cap = 0;
    // full_ises: score actions with the OpenMP kernel
    bool parallel = false;
};

struct BenchmarkConfig {
    std::vector<games::GameSpec> games;
    std::vector<AgentSpec> agents;
    int trials = 500;
    std::uint64_t master_seed = 0;
    double step_cap_multiplier = 10.0;
    std::string output_dir = "bench-out";
    int workers = 0;  // 0 = one per available core
    // Write measured decision times. Off, the timing columns print as
    // zero so output bytes are a pure function of config + seed.
    bool record_timings = true;
    bool write_traces = false;
    std::string decision_log;  // path relative to output_dir; empty = off

    void validate() const;  // throws ConfigError
};

// Strict JSON parsing: unknown keys anywhere are errors.
BenchmarkConfig parse_config(const std::string& json_text);
BenchmarkConfig load_config_file(const std::string& path);

// Agent names accepted in configs.
const std::vector<std::string>& known_agents();

// Instantiate an agent. Rejects unknown names and parameters that do not
// belong to the named agent.
std::unique_ptr<AgentPolicy> make_agent(const AgentSpec& spec);

}  // namespace deduction::bench
