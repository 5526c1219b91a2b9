#pragma once

#include <chrono>

#include "deduction/agent.hpp"
#include "deduction/errors.hpp"

namespace deduction::agents {

inline ActionToken random_select(std::span<const ActionToken> actions, Rng& rng) {
    if (actions.empty()) {
        throw ContractViolation("random_select: action list must be non-empty");
    }
    return actions[rng.below(actions.size())];
}

// Uniform-random baseline.
class RandomAgent final : public AgentPolicy {
public:
    std::string name() const override { return "random"; }

    ActionToken select(const EnumeratedInfoSet&,
                       std::span<const ActionToken> actions,
                       const GameDef& game,
                       Rng& rng) const override {
        const auto t0 = std::chrono::steady_clock::now();
        const ActionToken chosen = random_select(actions, rng);
        if (sink_) {
            DecisionRecord rec;
            rec.agent = name();
            rec.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            rec.chosen = chosen;
            sink_->record(game, rec);
        }
        return chosen;
    }
};

}  // namespace deduction::agents
