#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "deduction/agent.hpp"
#include "deduction/game.hpp"
#include "deduction/rng.hpp"

namespace deduction::agents {

// Single-observer information-set Monte-Carlo tree search.
struct MctsConfig {
    double exploration = 1.4142135623730951;  // UCB1 constant, > 0
    // Random-rollout depth limit; 0 derives ceil(4 * log2 |universe|).
    int rollout_cap = 0;
    // Wall-clock budget per decision. 0 means no search at all: the
    // selection degrades to a uniform-random fallback.
    double deadline_ms = 100.0;

    void validate() const;
};

struct MctsSelection {
    ActionToken action{};
    std::size_t iterations = 0;
    // (action, root visit count) per root child, in canonical order.
    std::vector<std::pair<ActionToken, double>> visits;
    bool fallback = false;
};

// One decision: repeatedly determinize a secret from the information
// set, walk the tree by UCB1, expand one untried action, finish with a
// uniform-random rollout, and back up reward 1/steps (0 when the rollout
// cap is hit). Returns the root action with the most visits; ties break
// toward the canonically earlier action.
MctsSelection ismcts_scored(const EnumeratedInfoSet& set,
                            std::span<const ActionToken> actions,
                            const GameDef& game,
                            const MctsConfig& config,
                            Rng& rng);
ActionToken ismcts_select(const EnumeratedInfoSet& set,
                          std::span<const ActionToken> actions,
                          const GameDef& game,
                          const MctsConfig& config,
                          Rng& rng);

class IsmctsAgent final : public AgentPolicy {
public:
    explicit IsmctsAgent(MctsConfig config);

    std::string name() const override { return "ismcts"; }
    const MctsConfig& config() const noexcept { return config_; }
    ActionToken select(const EnumeratedInfoSet& set,
                       std::span<const ActionToken> actions,
                       const GameDef& game,
                       Rng& rng) const override;

private:
    MctsConfig config_;
};

namespace detail {

struct UcbChild {
    double total_reward = 0.0;
    int visits = 0;
};

// Index of the child maximising mean + c * sqrt(ln(parent) / visits).
// Every child must have been visited; ties go to the smaller index.
std::size_t ucb_pick(std::span<const UcbChild> children, int parent_visits, double exploration);

}  // namespace detail

}  // namespace deduction::agents
