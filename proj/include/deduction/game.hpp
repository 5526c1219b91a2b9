#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deduction/info_set.hpp"
#include "deduction/tokens.hpp"

namespace deduction {

enum class TerminationMode {
    // The episode ends once the information set's entropy reaches the
    // game's entropy target (default: a singleton).
    kKnowledge,
    // The episode ends once a declaring action is answered by the
    // success observation (an exact match of the hidden secret).
    kDeclaration,
};

// A single-player deduction game: a finite universe of secrets, a finite
// action space, and a deterministic, truthful referee. Implementations
// must be immutable after construction so one instance can serve many
// threads concurrently.
class GameDef {
public:
    virtual ~GameDef() = default;

    virtual std::string name() const = 0;
    virtual std::string scale_id() const = 0;
    // "name(scale)", e.g. "mastermind(3x3)".
    std::string game_id() const;

    // The full universe of secrets, duplicate-free, in canonical order.
    virtual const std::vector<SecretToken>& initial_candidates() const = 0;

    // Actions available at `step` (1-based) given the current set.
    // Non-empty in canonical order for every reachable state.
    virtual std::vector<ActionToken> legal_actions(const EnumeratedInfoSet& set,
                                                   int step) const = 0;

    // Deterministic referee: the feedback `action` earns when the hidden
    // configuration is `secret`. Raises InvalidAction for malformed
    // actions; total over (universe x legal actions).
    virtual ObservationToken oracle(SecretToken secret, ActionToken action) const = 0;

    virtual TerminationMode termination_mode() const = 0;

    // Knowledge games stop at entropy <= target (bits). Zero means the
    // secret must be pinned down exactly.
    virtual EntropyBits entropy_target() const { return 0.0; }

    // Declaration games: does (action, observation) close the episode?
    virtual bool declaration_success(ActionToken action, ObservationToken obs) const;

    // Declaration games: the secret this action claims, if any.
    virtual std::optional<SecretToken> action_as_declaration(ActionToken action) const;

    virtual std::string format_secret(SecretToken secret) const;
    virtual std::string format_action(ActionToken action) const;
    virtual std::string format_observation(ObservationToken obs) const;

    // Fresh information set holding the whole universe.
    EnumeratedInfoSet initial_set() const;
};

}  // namespace deduction
