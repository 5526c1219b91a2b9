#pragma once

#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Bulls and Cows: the secret is a sequence of `digits` distinct symbols
// from an alphabet of `alphabet` symbols. Feedback counts bulls (right
// symbol, right place) and cows (right symbol, wrong place). Declaration
// game: ends when a guess scores all bulls.
//
// Codes are encoded with position i in the i-th base-`alphabet` digit;
// canonical order is lexicographic by position sequence. Observations
// are bulls * (digits + 1) + cows.
class BullsCows : public GameDef {
public:
    BullsCows(int digits, int alphabet, bool consistent_guesses_only = false);

    std::string name() const override { return "bulls_cows"; }
    std::string scale_id() const override;
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }
    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet& set, int step) const override;
    ObservationToken oracle(SecretToken secret, ActionToken action) const override;
    TerminationMode termination_mode() const override { return TerminationMode::kDeclaration; }
    bool declaration_success(ActionToken action, ObservationToken obs) const override;
    std::optional<SecretToken> action_as_declaration(ActionToken action) const override;

    std::string format_secret(SecretToken secret) const override;
    std::string format_action(ActionToken action) const override;
    std::string format_observation(ObservationToken obs) const override;

    int digits() const noexcept { return digits_; }
    int alphabet() const noexcept { return alphabet_; }

private:
    int digits_;
    int alphabet_;
    bool consistent_only_;
    std::vector<SecretToken> universe_;
};

}  // namespace deduction::games
