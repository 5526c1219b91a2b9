#include "deduction/episode.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "deduction/belief.hpp"
#include "deduction/errors.hpp"

namespace deduction {

int default_step_cap(std::size_t universe_size, double multiplier) {
    if (multiplier <= 0.0) {
        throw ContractViolation("default_step_cap: multiplier must be positive");
    }
    const double bits = std::log2(static_cast<double>(std::max<std::size_t>(universe_size, 1)));
    const int cap = static_cast<int>(std::ceil(multiplier * bits));
    return std::max(cap, 1);
}

EpisodeRecord play_episode(const GameDef& game,
                           const AgentPolicy& agent,
                           SecretToken secret,
                           std::uint64_t seed,
                           int step_cap) {
    if (step_cap < 1) throw ContractViolation("play_episode: step cap must be at least 1");

    EpisodeRecord rec;
    rec.game = game.name();
    rec.scale = game.scale_id();
    rec.agent = agent.name();
    rec.seed = seed;

    EnumeratedInfoSet set = game.initial_set();
    if (!set.contains(secret)) {
        throw ContractViolation("play_episode: secret is not in the universe of " + game.game_id());
    }
    rec.initial_entropy_bits = set.entropy_bits();

    if (is_terminal(set, game)) {
        rec.solved = true;
        rec.reward = 1.0;
        return rec;
    }

    Rng rng(seed);
    for (int step = 1; step <= step_cap; ++step) {
        const std::vector<ActionToken> actions = game.legal_actions(set, step);
        if (actions.empty()) {
            throw ContractViolation(game.game_id() + " produced no legal actions at step " +
                                    std::to_string(step));
        }
        const auto t0 = std::chrono::steady_clock::now();
        const ActionToken action = agent.select(set, actions, game, rng);
        const auto t1 = std::chrono::steady_clock::now();
        rec.wall_times_ms.push_back(
            std::chrono::duration<double, std::milli>(t1 - t0).count());

        const ObservationToken obs = game.oracle(secret, action);
        set = update_enumerated(set, action, obs, game);
        rec.trace.push_back({step, action, obs, set.entropy_bits()});
        rec.steps = step;
        if (is_terminal(set, game, action, obs)) {
            rec.solved = true;
            break;
        }
    }
    rec.reward = rec.solved ? 1.0 / static_cast<double>(rec.steps) : 0.0;
    return rec;
}

}  // namespace deduction
