#include "deduction/agents/ises.hpp"

#include <chrono>
#include <unordered_set>

#include "deduction/agents/random_agent.hpp"
#include "deduction/errors.hpp"
#include "deduction/scoring.hpp"

namespace deduction::agents {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct ScoredEntry {
    std::size_t canonical_index;
    ActionToken action;
    double bits;
};

// Argmin over expected posterior entropy. Ties prefer an action that
// declares a live candidate (declaration games only: on a solved set the
// scores all vanish, and only the declaring guess actually ends the
// episode), then the canonically earlier action.
ActionToken pick_best(const std::vector<ScoredEntry>& entries,
                      const EnumeratedInfoSet& set,
                      const GameDef& game) {
    const bool declaration = game.termination_mode() == TerminationMode::kDeclaration;
    std::unordered_set<std::uint64_t> live;
    if (declaration) {
        live.reserve(set.size() * 2);
        for (SecretToken s : set.candidates()) live.insert(s.value);
    }
    const auto declares_live = [&](const ScoredEntry& e) {
        if (!declaration) return false;
        const auto claim = game.action_as_declaration(e.action);
        return claim && live.count(claim->value) > 0;
    };
    const ScoredEntry* best = nullptr;
    bool best_declares = false;
    for (const ScoredEntry& e : entries) {
        if (!best) {
            best = &e;
            best_declares = declares_live(e);
            continue;
        }
        if (e.bits > best->bits) continue;
        if (e.bits < best->bits) {
            best = &e;
            best_declares = declares_live(e);
            continue;
        }
        const bool e_declares = declares_live(e);
        if (e_declares != best_declares) {
            if (e_declares) {
                best = &e;
                best_declares = true;
            }
            continue;
        }
        if (e.canonical_index < best->canonical_index) best = &e;
    }
    return best->action;
}

IsesSelection finish(std::vector<ScoredEntry> entries,
                     const EnumeratedInfoSet& set,
                     const GameDef& game,
                     std::size_t states_used) {
    IsesSelection out;
    out.action = pick_best(entries, set, game);
    out.states_used = states_used;
    out.scored.reserve(entries.size());
    for (const ScoredEntry& e : entries) out.scored.emplace_back(e.action, e.bits);
    return out;
}

}  // namespace

void SamplerConfig::validate() const {
    if (state_sample && *state_sample == 0) {
        throw ContractViolation("SamplerConfig: state_sample must be at least 1");
    }
    if (action_sample && *action_sample == 0) {
        throw ContractViolation("SamplerConfig: action_sample must be at least 1");
    }
    if (deadline_ms && *deadline_ms < 0.0) {
        throw ContractViolation("SamplerConfig: deadline_ms must be non-negative");
    }
}

IsesSelection ises_full_scored(const EnumeratedInfoSet& set,
                               std::span<const ActionToken> actions,
                               const GameDef& game,
                               bool parallel) {
    if (actions.empty()) {
        throw ContractViolation("ises_full_scored: action list must be non-empty");
    }
    const std::vector<double> bits =
        parallel ? score_actions_parallel(game, set.candidates(), actions)
                 : score_actions_serial(game, set.candidates(), actions);
    std::vector<ScoredEntry> entries;
    entries.reserve(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
        entries.push_back({i, actions[i], bits[i]});
    }
    return finish(std::move(entries), set, game, set.size());
}

ActionToken ises_full_select(const EnumeratedInfoSet& set,
                             std::span<const ActionToken> actions,
                             const GameDef& game,
                             bool parallel) {
    return ises_full_scored(set, actions, game, parallel).action;
}

IsesSelection ises_sampled_scored(const EnumeratedInfoSet& set,
                                  std::span<const ActionToken> actions,
                                  const GameDef& game,
                                  const SamplerConfig& config,
                                  Rng& rng) {
    if (actions.empty()) {
        throw ContractViolation("ises_sampled_scored: action list must be non-empty");
    }
    config.validate();
    const auto t0 = Clock::now();

    // State sample, drawn once for every action (uniform, without
    // replacement). A budget that covers the whole set degenerates to
    // exact scoring against all candidates.
    const std::size_t m =
        std::min(config.state_sample.value_or(set.size()), set.size());
    const bool exact_states = m >= set.size();
    std::vector<SecretToken> sample;
    if (!exact_states) {
        sample.reserve(m);
        for (std::size_t idx : rng.sample_indices(set.size(), m)) {
            sample.push_back(set.candidates()[idx]);
        }
    }

    // Action sample. Random draw order matters whenever the scoring loop
    // can stop early, so a deadline forces a permutation even if every
    // action fits the budget.
    const std::size_t n = std::min(config.action_sample.value_or(actions.size()), actions.size());
    std::vector<std::size_t> order;
    if (n < actions.size() || config.deadline_ms) {
        order = rng.sample_indices(actions.size(), n);
    }

    std::vector<ScoredEntry> entries;
    entries.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        // The first action is always scored in full so a short deadline
        // can degrade the decision but never leave it empty.
        if (k > 0 && config.deadline_ms && ms_since(t0) >= *config.deadline_ms) break;
        const std::size_t idx = order.empty() ? k : order[k];
        const ActionToken action = actions[idx];
        const double bits =
            exact_states ? exact_posterior_bits(game, set.candidates(), action)
                         : sampled_posterior_bits(game, set.candidates(), sample, action);
        entries.push_back({idx, action, bits});
    }
    if (entries.empty()) {
        // Unreachable given the first-action guarantee; kept as a safety
        // net so a broken clock can never strand the caller.
        IsesSelection out;
        out.action = random_select(actions, rng);
        out.fallback = true;
        return out;
    }
    return finish(std::move(entries), set, game, exact_states ? set.size() : m);
}

ActionToken ises_sampled_select(const EnumeratedInfoSet& set,
                                std::span<const ActionToken> actions,
                                const GameDef& game,
                                const SamplerConfig& config,
                                Rng& rng) {
    return ises_sampled_scored(set, actions, game, config, rng).action;
}

namespace {

void log_selection(DecisionSink* sink, const GameDef& game, const std::string& agent,
                   const IsesSelection& sel, std::size_t actions_scored, double wall_ms) {
    if (!sink) return;
    DecisionRecord rec;
    rec.agent = agent;
    rec.wall_ms = wall_ms;
    rec.states_used = sel.states_used;
    rec.actions_scored = actions_scored;
    rec.scored = sel.scored;
    rec.chosen = sel.action;
    rec.fallback = sel.fallback;
    sink->record(game, rec);
}

}  // namespace

ActionToken FullIsesAgent::select(const EnumeratedInfoSet& set,
                                  std::span<const ActionToken> actions,
                                  const GameDef& game,
                                  Rng&) const {
    const auto t0 = Clock::now();
    const IsesSelection sel = ises_full_scored(set, actions, game, parallel_);
    log_selection(sink_, game, name(), sel, sel.scored.size(), ms_since(t0));
    return sel.action;
}

SampledIsesAgent::SampledIsesAgent(SamplerConfig config) : config_(config) {
    config_.validate();
}

ActionToken SampledIsesAgent::select(const EnumeratedInfoSet& set,
                                     std::span<const ActionToken> actions,
                                     const GameDef& game,
                                     Rng& rng) const {
    const auto t0 = Clock::now();
    const IsesSelection sel = ises_sampled_scored(set, actions, game, config_, rng);
    log_selection(sink_, game, name(), sel, sel.scored.size(), ms_since(t0));
    return sel.action;
}

}  // namespace deduction::agents
