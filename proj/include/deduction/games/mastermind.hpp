#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Classic Mastermind: guess a code of `pegs` pegs over `colors` colors
// (repeats allowed); feedback is (black, white) = (exact matches,
// color-only matches). Codes are encoded with peg i in the i-th base-C
// digit, so canonical order is ascending code value.
class Mastermind : public GameDef {
public:
    Mastermind(int pegs, int colors, bool consistent_guesses_only = false);

    std::string name() const override { return "mastermind"; }
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

    int pegs() const noexcept { return pegs_; }
    int colors() const noexcept { return colors_; }

    static std::vector<int> decode(std::uint64_t code, int pegs, int colors);
    static std::uint64_t encode(const std::vector<int>& digits, int colors);

private:
    int pegs_;
    int colors_;
    bool consistent_only_;
    std::vector<SecretToken> universe_;
};

// Mastermind without the white-peg channel: feedback is only the count
// of pegs correct in both color and position.
class SimpleMastermind : public GameDef {
public:
    SimpleMastermind(int pegs, int colors, bool consistent_guesses_only = false);

    std::string name() const override { return "simple_mastermind"; }
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

    int pegs() const noexcept { return pegs_; }
    int colors() const noexcept { return colors_; }

private:
    int pegs_;
    int colors_;
    bool consistent_only_;
    std::vector<SecretToken> universe_;
};

}  // namespace deduction::games
