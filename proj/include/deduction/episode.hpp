#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deduction/agent.hpp"
#include "deduction/game.hpp"
#include "deduction/tokens.hpp"

namespace deduction {

struct TraceEntry {
    int step = 0;  // 1-based
    ActionToken action{};
    ObservationToken observation{};
    // Entropy of the information set after this step's update.
    EntropyBits entropy_bits = 0.0;
};

struct EpisodeRecord {
    std::string game;
    std::string scale;
    std::string agent;
    std::uint64_t seed = 0;
    int steps = 0;
    bool solved = false;
    // 1/steps when solved (1.0 if the game was already over at step 0),
    // 0.0 when the step cap was hit.
    double reward = 0.0;
    EntropyBits initial_entropy_bits = 0.0;
    std::vector<TraceEntry> trace;          // one entry per step
    std::vector<double> wall_times_ms;      // one entry per decision
};

// Default episode step cap: ceil(multiplier * log2 |universe|), at least 1.
int default_step_cap(std::size_t universe_size, double multiplier = 10.0);

// Play one episode to termination or to the step cap. `secret` must be a
// member of the game's universe; `seed` feeds the agent's random stream.
EpisodeRecord play_episode(const GameDef& game,
                           const AgentPolicy& agent,
                           SecretToken secret,
                           std::uint64_t seed,
                           int step_cap);

}  // namespace deduction
