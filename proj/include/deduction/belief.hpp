#pragma once

#include <optional>

#include "deduction/game.hpp"
#include "deduction/info_set.hpp"
#include "deduction/tokens.hpp"

namespace deduction {

// Keep exactly the candidates consistent with (action, observation),
// preserving canonical order. Raises InconsistentUpdate if nothing
// survives (the referee is truthful, so that is always a caller bug).
EnumeratedInfoSet update_enumerated(const EnumeratedInfoSet& set,
                                    ActionToken action,
                                    ObservationToken obs,
                                    const GameDef& game);

// Zero the mass of inconsistent cells and renormalise. An observation
// consistent with every positive-mass cell leaves the table unchanged.
TabularInfoSet update_tabular(const TabularInfoSet& table,
                              ActionToken action,
                              ObservationToken obs,
                              const GameDef& game);

// Expected entropy after playing `action`: the observation-class sizes
// n_o induced by the candidates give sum(n_o * log2 n_o) / n.
EntropyBits expected_posterior_entropy(const EnumeratedInfoSet& set,
                                       ActionToken action,
                                       const GameDef& game);

// Whether the episode is over. Declaration games need the step that was
// just played; knowledge games ignore it.
bool is_terminal(const EnumeratedInfoSet& set, const GameDef& game,
                 std::optional<ActionToken> last_action = std::nullopt,
                 std::optional<ObservationToken> last_obs = std::nullopt);
bool is_terminal(const TabularInfoSet& table, const GameDef& game,
                 std::optional<ActionToken> last_action = std::nullopt,
                 std::optional<ObservationToken> last_obs = std::nullopt);

}  // namespace deduction
