#pragma once

#include <string>
#include <vector>

#include "deduction/errors.hpp"
#include "deduction/game.hpp"

namespace deduction::games {

// The treasure sits in one of `cells` cells 0..N-1. Probing cell q
// answers whether the treasure is at or before q. Knowledge game: play
// until the cell is pinned down.
class TreasureHunt : public GameDef {
public:
    static constexpr std::uint64_t kAtOrBefore = 0;
    static constexpr std::uint64_t kAfter = 1;

    explicit TreasureHunt(int cells) : cells_(cells) {
        if (cells < 2 || cells > 1 << 20) {
            throw ContractViolation("treasure_hunt: cells must be in [2, 2^20]");
        }
        universe_.reserve(cells);
        for (int i = 0; i < cells; ++i) {
            universe_.push_back(SecretToken{static_cast<std::uint64_t>(i)});
        }
    }

    std::string name() const override { return "treasure_hunt"; }
    std::string scale_id() const override { return std::to_string(cells_); }
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }

    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet&, int) const override {
        std::vector<ActionToken> probes;
        probes.reserve(cells_);
        for (int q = 0; q < cells_; ++q) {
            probes.push_back(ActionToken{static_cast<std::uint64_t>(q)});
        }
        return probes;
    }

    ObservationToken oracle(SecretToken secret, ActionToken action) const override {
        if (action.value >= static_cast<std::uint64_t>(cells_)) {
            throw InvalidAction("treasure_hunt: probe " + std::to_string(action.value) +
                                " is outside the board of " + std::to_string(cells_) + " cells");
        }
        return ObservationToken{secret.value <= action.value ? kAtOrBefore : kAfter};
    }

    TerminationMode termination_mode() const override { return TerminationMode::kKnowledge; }

    std::string format_secret(SecretToken secret) const override {
        return "cell" + std::to_string(secret.value);
    }
    std::string format_action(ActionToken action) const override {
        return "probe" + std::to_string(action.value);
    }
    std::string format_observation(ObservationToken obs) const override {
        return obs.value == kAtOrBefore ? "at-or-before" : "after";
    }

    int cells() const noexcept { return cells_; }

private:
    int cells_;
    std::vector<SecretToken> universe_;
};

}  // namespace deduction::games
