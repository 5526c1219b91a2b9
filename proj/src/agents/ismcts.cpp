#include "deduction/agents/ismcts.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <numeric>

#include "deduction/agents/random_agent.hpp"
#include "deduction/belief.hpp"
#include "deduction/episode.hpp"
#include "deduction/errors.hpp"

namespace deduction::agents {

namespace detail {

std::size_t ucb_pick(std::span<const UcbChild> children, int parent_visits, double exploration) {
    if (children.empty()) {
        throw ContractViolation("ucb_pick: child list must be non-empty");
    }
    const double log_parent = std::log(static_cast<double>(parent_visits));
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < children.size(); ++i) {
        const UcbChild& ch = children[i];
        if (ch.visits <= 0) {
            throw ContractViolation("ucb_pick: every child needs at least one visit");
        }
        const double value = ch.total_reward / ch.visits +
                             exploration * std::sqrt(log_parent / ch.visits);
        if (value > best_value) {
            best_value = value;
            best = i;
        }
    }
    return best;
}

}  // namespace detail

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    int visits = 0;
    double total_reward = 0.0;
    // Canonical action indices not yet expanded here.
    std::vector<std::uint32_t> untried;
    // (canonical action index, subtree), in expansion order.
    std::vector<std::pair<std::uint32_t, std::unique_ptr<Node>>> children;
};

void init_untried(Node* node, std::size_t action_count) {
    node->untried.resize(action_count);
    std::iota(node->untried.begin(), node->untried.end(), 0u);
}

}  // namespace

void MctsConfig::validate() const {
    if (exploration <= 0.0) {
        throw ContractViolation("MctsConfig: exploration constant must be positive");
    }
    if (rollout_cap < 0) {
        throw ContractViolation("MctsConfig: rollout_cap must be non-negative");
    }
    if (deadline_ms < 0.0) {
        throw ContractViolation("MctsConfig: deadline_ms must be non-negative");
    }
}

MctsSelection ismcts_scored(const EnumeratedInfoSet& set,
                            std::span<const ActionToken> actions,
                            const GameDef& game,
                            const MctsConfig& config,
                            Rng& rng) {
    if (actions.empty()) {
        throw ContractViolation("ismcts_scored: action list must be non-empty");
    }
    config.validate();
    if (actions.size() == 1) {
        return {actions[0], 0, {{actions[0], 0.0}}, false};
    }

    const auto t0 = Clock::now();
    const auto deadline_passed = [&] {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() >=
               config.deadline_ms;
    };
    const int cap = config.rollout_cap > 0
                        ? config.rollout_cap
                        : default_step_cap(game.initial_candidates().size(), 4.0);

    Node root;
    init_untried(&root, actions.size());
    std::vector<Node*> path;
    std::vector<detail::UcbChild> scratch;
    std::size_t iterations = 0;

    while (!deadline_passed()) {
        // Determinize: commit this iteration to one live candidate.
        const SecretToken secret = set.candidates()[rng.below(set.size())];

        path.clear();
        path.push_back(&root);
        Node* node = &root;
        EnumeratedInfoSet belief = set;
        bool terminal = false;
        int steps = 0;

        const auto apply = [&](std::uint32_t action_index) {
            const ActionToken action = actions[action_index];
            const ObservationToken obs = game.oracle(secret, action);
            belief = update_enumerated(belief, action, obs, game);
            ++steps;
            terminal = is_terminal(belief, game, action, obs);
        };

        // Selection: descend fully expanded nodes by UCB1.
        while (!terminal && node->untried.empty() && !node->children.empty()) {
            scratch.clear();
            for (const auto& [ai, child] : node->children) {
                scratch.push_back({child->total_reward, child->visits});
            }
            const std::size_t pick = detail::ucb_pick(scratch, node->visits, config.exploration);
            apply(node->children[pick].first);
            node = node->children[pick].second.get();
            path.push_back(node);
        }

        // Expansion: attach one untried action, chosen uniformly.
        if (!terminal && !node->untried.empty()) {
            const std::size_t pick = rng.below(node->untried.size());
            const std::uint32_t ai = node->untried[pick];
            node->untried[pick] = node->untried.back();
            node->untried.pop_back();
            node->children.emplace_back(ai, std::make_unique<Node>());
            Node* child = node->children.back().second.get();
            init_untried(child, actions.size());
            apply(ai);
            node = child;
            path.push_back(node);
        }

        // Rollout: uniform-random actions to termination or the cap.
        for (int depth = 0; !terminal && depth < cap; ++depth) {
            apply(static_cast<std::uint32_t>(rng.below(actions.size())));
        }

        const double reward = terminal ? 1.0 / static_cast<double>(steps) : 0.0;
        for (Node* n : path) {
            ++n->visits;
            n->total_reward += reward;
        }
        ++iterations;
    }

    MctsSelection out;
    out.iterations = iterations;
    if (iterations == 0) {
        // Degenerate budget: no evidence gathered, fall back to a
        // uniform-random move.
        out.action = random_select(actions, rng);
        out.fallback = true;
        return out;
    }
    // Most-visited root action; ties break to the canonically earlier one.
    std::vector<int> visits_by_action(actions.size(), -1);
    for (const auto& [ai, child] : root.children) {
        visits_by_action[ai] = child->visits;
    }
    std::size_t best = actions.size();
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (visits_by_action[i] < 0) continue;
        if (best == actions.size() || visits_by_action[i] > visits_by_action[best]) best = i;
        out.visits.emplace_back(actions[i], static_cast<double>(visits_by_action[i]));
    }
    out.action = actions[best];
    return out;
}

ActionToken ismcts_select(const EnumeratedInfoSet& set,
                          std::span<const ActionToken> actions,
                          const GameDef& game,
                          const MctsConfig& config,
                          Rng& rng) {
    return ismcts_scored(set, actions, game, config, rng).action;
}

IsmctsAgent::IsmctsAgent(MctsConfig config) : config_(config) {
    config_.validate();
}

ActionToken IsmctsAgent::select(const EnumeratedInfoSet& set,
                                std::span<const ActionToken> actions,
                                const GameDef& game,
                                Rng& rng) const {
    const auto t0 = Clock::now();
    const MctsSelection sel = ismcts_scored(set, actions, game, config_, rng);
    if (sink_) {
        DecisionRecord rec;
        rec.agent = name();
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        rec.states_used = sel.iterations;
        rec.actions_scored = sel.visits.size();
        rec.scored = sel.visits;
        rec.chosen = sel.action;
        rec.fallback = sel.fallback;
        sink_->record(game, rec);
    }
    return sel.action;
}

}  // namespace deduction::agents
