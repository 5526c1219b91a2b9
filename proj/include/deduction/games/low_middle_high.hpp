#pragma once

#include <string>
#include <vector>

#include "deduction/errors.hpp"
#include "deduction/game.hpp"

namespace deduction::games {

// Guess a hidden number in 1..N; each guess is answered LOW, CORRECT or
// HIGH. Declaration game: the episode ends only when a guess hits the
// number exactly.
class LowMiddleHigh : public GameDef {
public:
    static constexpr std::uint64_t kLow = 0;      // guess is below the number
    static constexpr std::uint64_t kCorrect = 1;
    static constexpr std::uint64_t kHigh = 2;     // guess is above the number

    explicit LowMiddleHigh(int top) : top_(top) {
        if (top < 2 || top > 1 << 20) {
            throw ContractViolation("low_middle_high: N must be in [2, 2^20]");
        }
        universe_.reserve(top);
        for (int v = 1; v <= top; ++v) {
            universe_.push_back(SecretToken{static_cast<std::uint64_t>(v)});
        }
    }

    std::string name() const override { return "low_middle_high"; }
    std::string scale_id() const override { return std::to_string(top_); }
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }

    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet&, int) const override {
        std::vector<ActionToken> guesses;
        guesses.reserve(top_);
        for (int v = 1; v <= top_; ++v) {
            guesses.push_back(ActionToken{static_cast<std::uint64_t>(v)});
        }
        return guesses;
    }

    ObservationToken oracle(SecretToken secret, ActionToken action) const override {
        if (action.value < 1 || action.value > static_cast<std::uint64_t>(top_)) {
            throw InvalidAction("low_middle_high: guess " + std::to_string(action.value) +
                                " is outside 1.." + std::to_string(top_));
        }
        if (action.value < secret.value) return ObservationToken{kLow};
        if (action.value > secret.value) return ObservationToken{kHigh};
        return ObservationToken{kCorrect};
    }

    TerminationMode termination_mode() const override { return TerminationMode::kDeclaration; }

    bool declaration_success(ActionToken, ObservationToken obs) const override {
        return obs.value == kCorrect;
    }

    std::optional<SecretToken> action_as_declaration(ActionToken action) const override {
        return SecretToken{action.value};
    }

    std::string format_observation(ObservationToken obs) const override {
        switch (obs.value) {
            case kLow: return "low";
            case kCorrect: return "correct";
            case kHigh: return "high";
            default: return std::to_string(obs.value);
        }
    }

    int top() const noexcept { return top_; }

private:
    int top_;
    std::vector<SecretToken> universe_;
};

}  // namespace deduction::games
