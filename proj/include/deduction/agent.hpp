#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deduction/game.hpp"
#include "deduction/rng.hpp"
#include "deduction/tokens.hpp"

namespace deduction {

// One record per decision, for the optional decision log.
struct DecisionRecord {
    std::string agent;
    double wall_ms = 0.0;
    // How much of the budget was actually used.
    std::size_t states_used = 0;
    std::size_t actions_scored = 0;
    // Per-action score table (entropy bits for ISES, root visits for
    // tree search); empty for agents that do not score.
    std::vector<std::pair<ActionToken, double>> scored;
    ActionToken chosen{};
    // A degenerate budget forced a uniform-random choice.
    bool fallback = false;
};

class DecisionSink {
public:
    virtual ~DecisionSink() = default;
    virtual void record(const GameDef& game, const DecisionRecord& rec) = 0;
};

// A decision procedure over information sets. select() must be a pure
// function of (set, actions, game, rng state, configuration) so episodes
// replay exactly from a seed, and must be safe to call concurrently from
// multiple threads (each with its own Rng).
class AgentPolicy {
public:
    virtual ~AgentPolicy() = default;

    virtual std::string name() const = 0;
    virtual ActionToken select(const EnumeratedInfoSet& set,
                               std::span<const ActionToken> actions,
                               const GameDef& game,
                               Rng& rng) const = 0;

    void set_decision_sink(DecisionSink* sink) noexcept { sink_ = sink; }

protected:
    DecisionSink* sink_ = nullptr;
};

}  // namespace deduction
