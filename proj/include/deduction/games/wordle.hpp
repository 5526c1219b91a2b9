#pragma once

#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Wordle over an explicit dictionary: guess words from the dictionary,
// feedback marks each letter green (right letter, right spot), yellow
// (in the word, other spot) or gray, with the standard two-pass rule for
// repeated letters. Declaration game: ends on an all-green guess.
//
// Secrets and actions are dictionary indices; observations pack one trit
// per position, position 0 least significant (0 gray, 1 yellow, 2 green).
class Wordle : public GameDef {
public:
    static constexpr std::uint64_t kGray = 0;
    static constexpr std::uint64_t kYellow = 1;
    static constexpr std::uint64_t kGreen = 2;

    Wordle(int length, std::vector<std::string> words, bool consistent_guesses_only = false);

    std::string name() const override { return "wordle"; }
    std::string scale_id() const override { return std::to_string(length_); }
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }
    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet& set, int step) const override;
    ObservationToken oracle(SecretToken secret, ActionToken action) const override;
    TerminationMode termination_mode() const override { return TerminationMode::kDeclaration; }
    bool declaration_success(ActionToken action, ObservationToken obs) const override;
    std::optional<SecretToken> action_as_declaration(ActionToken action) const override;

    std::string format_secret(SecretToken secret) const override;
    std::string format_action(ActionToken action) const override;
    std::string format_observation(ObservationToken obs) const override;

    int length() const noexcept { return length_; }
    const std::vector<std::string>& words() const noexcept { return words_; }

    // Reads one word per line; blank lines are skipped. Words must be
    // lowercase a-z, all the same length, and free of duplicates.
    static std::vector<std::string> load_dictionary(const std::string& path);

private:
    int length_;
    bool consistent_only_;
    std::vector<std::string> words_;
    std::vector<SecretToken> universe_;
    std::uint64_t all_green_;
};

}  // namespace deduction::games
