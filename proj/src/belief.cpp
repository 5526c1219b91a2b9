#include "deduction/belief.hpp"

#include <string>
#include <vector>

#include "deduction/errors.hpp"
#include "deduction/scoring.hpp"

namespace deduction {

namespace {

[[noreturn]] void throw_inconsistent(const GameDef& game, ActionToken action,
                                     ObservationToken obs) {
    throw InconsistentUpdate("update eliminates every candidate in " + game.game_id() +
                             " for action " + game.format_action(action) +
                             " with observation " + game.format_observation(obs) +
                             "; the referee is truthful, so the caller fed a foreign "
                             "observation or a secret outside the universe");
}

}  // namespace

EnumeratedInfoSet update_enumerated(const EnumeratedInfoSet& set,
                                    ActionToken action,
                                    ObservationToken obs,
                                    const GameDef& game) {
    std::vector<SecretToken> kept;
    kept.reserve(set.size());
    for (SecretToken c : set.candidates()) {
        if (game.oracle(c, action) == obs) kept.push_back(c);
    }
    if (kept.empty()) throw_inconsistent(game, action, obs);
    return EnumeratedInfoSet(std::move(kept));
}

TabularInfoSet update_tabular(const TabularInfoSet& table,
                              ActionToken action,
                              ObservationToken obs,
                              const GameDef& game) {
    std::vector<double> mass = table.mass();
    double total = 0.0;
    for (std::size_t i = 0; i < mass.size(); ++i) {
        if (mass[i] <= 0.0) continue;
        if (game.oracle(table.cell_secrets()[i], action) == obs) {
            total += mass[i];
        } else {
            mass[i] = 0.0;
        }
    }
    if (total <= 0.0) throw_inconsistent(game, action, obs);
    for (double& p : mass) p /= total;
    return TabularInfoSet(table.axes(), table.cell_secrets(), std::move(mass));
}

EntropyBits expected_posterior_entropy(const EnumeratedInfoSet& set,
                                       ActionToken action,
                                       const GameDef& game) {
    return exact_posterior_bits(game, set.candidates(), action);
}

bool is_terminal(const EnumeratedInfoSet& set, const GameDef& game,
                 std::optional<ActionToken> last_action,
                 std::optional<ObservationToken> last_obs) {
    if (game.termination_mode() == TerminationMode::kKnowledge) {
        return set.entropy_bits() <= game.entropy_target() + kEntropyTolerance;
    }
    return last_action && last_obs && game.declaration_success(*last_action, *last_obs);
}

bool is_terminal(const TabularInfoSet& table, const GameDef& game,
                 std::optional<ActionToken> last_action,
                 std::optional<ObservationToken> last_obs) {
    if (game.termination_mode() == TerminationMode::kKnowledge) {
        return table.entropy_bits() <= game.entropy_target() + kEntropyTolerance;
    }
    return last_action && last_obs && game.declaration_success(*last_action, *last_obs);
}

}  // namespace deduction
