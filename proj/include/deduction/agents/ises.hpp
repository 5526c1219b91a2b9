#pragma once

#include <optional>

#include "deduction/agent.hpp"
#include "deduction/game.hpp"
#include "deduction/rng.hpp"

namespace deduction::agents {

// Budgets for the sampled variant. Unset fields mean "use everything".
struct SamplerConfig {
    std::optional<std::size_t> state_sample;   // states drawn per decision
    std::optional<std::size_t> action_sample;  // actions scored per decision
    std::optional<double> deadline_ms;         // wall-clock budget per decision

    void validate() const;
};

// Full result of one selection, for logging and tests.
struct IsesSelection {
    ActionToken action{};
    // (action, expected posterior entropy) for each scored action, in
    // the order they were scored.
    std::vector<std::pair<ActionToken, double>> scored;
    std::size_t states_used = 0;
    // True when a degenerate budget forced a uniform-random choice.
    bool fallback = false;
};

// Entropy-greedy choice: score every action exactly, pick the argmin.
// Ties break toward actions that declare a live candidate (declaration
// games only), then toward the earlier action. `parallel` switches the
// scoring loop to the OpenMP kernel; the choice is identical either way.
IsesSelection ises_full_scored(const EnumeratedInfoSet& set,
                               std::span<const ActionToken> actions,
                               const GameDef& game,
                               bool parallel = false);
ActionToken ises_full_select(const EnumeratedInfoSet& set,
                             std::span<const ActionToken> actions,
                             const GameDef& game,
                             bool parallel = false);

// Budgeted variant: draw up to m states and n actions (each uniform,
// without replacement), score actions against the sampled states, stop
// early on the deadline. The first action is always scored in full, so a
// short deadline degrades the choice but never invalidates it. With both
// budgets unset (or at least the full sizes) and no deadline, the choice
// equals ises_full_select exactly.
IsesSelection ises_sampled_scored(const EnumeratedInfoSet& set,
                                  std::span<const ActionToken> actions,
                                  const GameDef& game,
                                  const SamplerConfig& config,
                                  Rng& rng);
ActionToken ises_sampled_select(const EnumeratedInfoSet& set,
                                std::span<const ActionToken> actions,
                                const GameDef& game,
                                const SamplerConfig& config,
                                Rng& rng);

class FullIsesAgent final : public AgentPolicy {
public:
    explicit FullIsesAgent(bool parallel = false) : parallel_(parallel) {}

    std::string name() const override { return "full_ises"; }
    ActionToken select(const EnumeratedInfoSet& set,
                       std::span<const ActionToken> actions,
                       const GameDef& game,
                       Rng& rng) const override;

private:
    bool parallel_;
};

class SampledIsesAgent final : public AgentPolicy {
public:
    explicit SampledIsesAgent(SamplerConfig config);

    std::string name() const override { return "sampled_ises"; }
    const SamplerConfig& config() const noexcept { return config_; }
    ActionToken select(const EnumeratedInfoSet& set,
                       std::span<const ActionToken> actions,
                       const GameDef& game,
                       Rng& rng) const override;

private:
    SamplerConfig config_;
};

}  // namespace deduction::agents
