#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "deduction/agents/ises.hpp"
#include "deduction/agents/ismcts.hpp"
#include "deduction/agents/random_agent.hpp"
#include "deduction/belief.hpp"
#include "deduction/episode.hpp"
#include "deduction/errors.hpp"
#include "deduction/games/low_middle_high.hpp"
#include "deduction/games/mastermind.hpp"
#include "deduction/games/registry.hpp"
#include "deduction/games/treasure_hunt.hpp"
#include "deduction/rng.hpp"

using namespace deduction;
using namespace deduction::agents;

namespace {

const std::string kWords3Path = std::string(DEDUCTION_DATA_DIR) + "/words3.txt";

// The selection rule, restated independently: lowest expected posterior
// entropy; ties prefer an action declaring a live candidate; then the
// earlier action.
ActionToken ref_best(const EnumeratedInfoSet& set,
                     std::span<const std::pair<ActionToken, double>> scored,
                     const GameDef& game) {
    REQUIRE_FALSE(scored.empty());
    std::unordered_set<std::uint64_t> live;
    for (const SecretToken s : set.candidates()) live.insert(s.value);
    auto declares_live = [&](ActionToken a) {
        if (game.termination_mode() != TerminationMode::kDeclaration) return false;
        const auto claim = game.action_as_declaration(a);
        return claim.has_value() && live.count(claim->value) > 0;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < scored.size(); ++i) {
        const auto& [ba, bb] = scored[best];
        const auto& [ca, cb] = scored[i];
        if (cb < bb - 1e-12) {
            best = i;
        } else if (std::abs(cb - bb) <= 1e-12) {
            const bool cd = declares_live(ca), bd = declares_live(ba);
            if (cd != bd ? cd : ca.value < ba.value) best = i;
        }
    }
    return scored[best].first;
}

// Minimal deduction game whose universe can be a single secret, for the
// already-terminal episode path.
class OneCellGame final : public GameDef {
public:
    OneCellGame() : universe_{SecretToken{0}} {}
    std::string name() const override { return "one_cell"; }
    std::string scale_id() const override { return "1"; }
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }
    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet&, int) const override {
        return {ActionToken{0}};
    }
    ObservationToken oracle(SecretToken, ActionToken) const override {
        return ObservationToken{0};
    }
    TerminationMode termination_mode() const override { return TerminationMode::kKnowledge; }

private:
    std::vector<SecretToken> universe_;
};

}  // namespace

TEST_CASE("full ISES opens treasure hunt at the midpoint probe") {
    const games::TreasureHunt game(8);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    CHECK(ises_full_select(set, actions, game) == ActionToken{3});

    const auto selection = ises_full_scored(set, actions, game);
    CHECK(selection.action == ActionToken{3});
    CHECK(selection.states_used == 8);
    CHECK(selection.fallback == false);
    REQUIRE(selection.scored.size() == 8);
    // Canonical order, argmin value exactly 2 bits.
    CHECK(selection.scored[3].first == ActionToken{3});
    CHECK(selection.scored[3].second == 2.0);
}

TEST_CASE("full ISES opens mastermind with a two-distinct-color guess") {
    const games::Mastermind game(3, 3);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    const ActionToken chosen = ises_full_select(set, actions, game);
    const auto digits = games::Mastermind::decode(chosen.value, 3, 3);
    const std::set<int> colors(digits.begin(), digits.end());
    CHECK(colors.size() == 2);
}

TEST_CASE("on a singleton set the declaring action wins the tie") {
    const games::LowMiddleHigh game(15);
    const EnumeratedInfoSet point(std::vector<SecretToken>{SecretToken{8}});
    const auto actions = game.legal_actions(point, 3);
    // Every guess leaves zero entropy; only guessing 8 can end the game.
    const auto selection = ises_full_scored(point, actions, game);
    for (const auto& [a, bits] : selection.scored) CHECK(bits == 0.0);
    CHECK(selection.action == ActionToken{8});
}

TEST_CASE("full ISES matches a brute-force argmin on random reachable sets") {
    const games::Mastermind game(3, 3);
    Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        // Walk a couple of random steps to reach a non-trivial set.
        EnumeratedInfoSet set = game.initial_set();
        const SecretToken secret =
            game.initial_candidates()[rng.below(game.initial_candidates().size())];
        for (int step = 0; step < 2 && set.size() > 1; ++step) {
            const auto actions = game.legal_actions(set, step + 1);
            const ActionToken a = actions[rng.below(actions.size())];
            set = update_enumerated(set, a, game.oracle(secret, a), game);
        }
        const auto actions = game.legal_actions(set, 3);
        const auto selection = ises_full_scored(set, actions, game);
        CHECK(selection.action == ref_best(set, selection.scored, game));
        // And the scores themselves match the one-action scorer.
        for (std::size_t i = 0; i < actions.size(); i += 7) {
            CHECK(selection.scored[i].second ==
                  expected_posterior_entropy(set, actions[i], game));
        }
    }
}

TEST_CASE("parallel and serial full ISES choose identically") {
    const games::Mastermind game(3, 3);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    const auto serial = ises_full_scored(set, actions, game, false);
    const auto parallel = ises_full_scored(set, actions, game, true);
    CHECK(serial.action == parallel.action);
    REQUIRE(serial.scored.size() == parallel.scored.size());
    for (std::size_t i = 0; i < serial.scored.size(); ++i) {
        CHECK(serial.scored[i].first == parallel.scored[i].first);
        CHECK(serial.scored[i].second == parallel.scored[i].second);
    }
}

TEST_CASE("unbudgeted sampling equals the full search exactly") {
    games::GameSpec spec;
    for (const std::string& name : games::known_games()) {
        spec.name = name;
        spec.scale = games::smallest_desk_scale(name);
        spec.dictionary_path = name == "wordle" ? kWords3Path : "";
        const auto game = games::make_game(spec);

        Rng walk(7);
        EnumeratedInfoSet set = game->initial_set();
        for (int step = 1; step <= 2; ++step) {
            const auto actions = game->legal_actions(set, step);
            SamplerConfig unbudgeted;  // no caps, no deadline
            Rng sampler(99);
            const auto sampled = ises_sampled_scored(set, actions, *game, unbudgeted, sampler);
            const auto full = ises_full_scored(set, actions, *game);
            CHECK(sampled.action == full.action);
            CHECK(sampled.states_used == set.size());

            if (set.size() == 1) break;
            const SecretToken secret = set.candidates()[walk.below(set.size())];
            const ActionToken a = actions[walk.below(actions.size())];
            set = update_enumerated(set, a, game->oracle(secret, a), *game);
        }
    }
}

TEST_CASE("oversized sample budgets clamp to the full sizes") {
    const games::TreasureHunt game(8);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    SamplerConfig config;
    config.state_sample = 1000;
    config.action_sample = 1000;
    Rng rng(5);
    const auto selection = ises_sampled_scored(set, actions, game, config, rng);
    CHECK(selection.action == ActionToken{3});
    CHECK(selection.states_used == 8);
    CHECK(selection.scored.size() == 8);
}

TEST_CASE("a two-action budget picks the better of the two sampled actions") {
    const games::TreasureHunt game(16);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    SamplerConfig config;
    config.action_sample = 2;  // states stay exact
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const auto selection = ises_sampled_scored(set, actions, game, config, rng);
        REQUIRE(selection.scored.size() == 2);
        CHECK(selection.action == ref_best(set, selection.scored, game));
        // With exact states the scores are the exact posteriors.
        for (const auto& [a, bits] : selection.scored) {
            CHECK(bits == expected_posterior_entropy(set, a, game));
        }
    }
}

TEST_CASE("a state sample caps the states actually scored") {
    const games::Mastermind game(3, 3);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    SamplerConfig config;
    config.state_sample = 6;
    Rng rng(11);
    const auto selection = ises_sampled_scored(set, actions, game, config, rng);
    CHECK(selection.states_used == 6);
    CHECK(selection.scored.size() == actions.size());
    const double prior = set.entropy_bits();
    for (const auto& [a, bits] : selection.scored) {
        CHECK(bits >= 0.0);
        CHECK(bits <= prior + kEntropyTolerance);
    }
}

TEST_CASE("a zero deadline still scores the first action") {
    const games::Mastermind game(3, 3);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    SamplerConfig config;
    config.deadline_ms = 0.0;
    Rng rng(3);
    const auto selection = ises_sampled_scored(set, actions, game, config, rng);
    CHECK(selection.fallback == false);
    CHECK(selection.scored.size() >= 1);
    CHECK(selection.action == selection.scored.front().first);
}

TEST_CASE("sampler and search configs validate their budgets") {
    SamplerConfig zero_states;
    zero_states.state_sample = 0;
    CHECK_THROWS_AS(zero_states.validate(), ContractViolation);
    SamplerConfig zero_actions;
    zero_actions.action_sample = 0;
    CHECK_THROWS_AS(zero_actions.validate(), ContractViolation);
    SamplerConfig negative_deadline;
    negative_deadline.deadline_ms = -1.0;
    CHECK_THROWS_AS(negative_deadline.validate(), ContractViolation);

    MctsConfig bad_exploration;
    bad_exploration.exploration = 0.0;
    CHECK_THROWS_AS(bad_exploration.validate(), ContractViolation);
    MctsConfig bad_cap;
    bad_cap.rollout_cap = -1;
    CHECK_THROWS_AS(bad_cap.validate(), ContractViolation);
    MctsConfig bad_deadline;
    bad_deadline.deadline_ms = -0.5;
    CHECK_THROWS_AS(bad_deadline.validate(), ContractViolation);
}

TEST_CASE("selections refuse an empty action list") {
    const games::TreasureHunt game(4);
    const auto set = game.initial_set();
    Rng rng(1);
    SamplerConfig config;
    MctsConfig mcts;
    CHECK_THROWS_AS(ises_full_scored(set, {}, game), ContractViolation);
    CHECK_THROWS_AS(ises_sampled_scored(set, {}, game, config, rng), ContractViolation);
    CHECK_THROWS_AS(ismcts_scored(set, {}, game, mcts, rng), ContractViolation);
    CHECK_THROWS_AS(random_select({}, rng), ContractViolation);
}

TEST_CASE("agents replay identically from the same seed") {
    const games::Mastermind game(3, 3);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);

    SamplerConfig sampler_config;
    sampler_config.state_sample = 8;
    sampler_config.action_sample = 8;

    // Only agents whose decision is a pure function of (seed, inputs) replay
    // exactly; a wall-clock-budgeted search completes a load-dependent number
    // of iterations, so it is deliberately absent here.
    const FullIsesAgent full;
    const SampledIsesAgent sampled(sampler_config);
    const RandomAgent random;
    for (const AgentPolicy* agent :
         std::initializer_list<const AgentPolicy*>{&full, &sampled, &random}) {
        Rng a(42), b(42);
        CHECK(agent->select(set, actions, game, a) == agent->select(set, actions, game, b));
    }
}

TEST_CASE("the random baseline is near-uniform over four actions") {
    const games::TreasureHunt game(4);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    REQUIRE(actions.size() == 4);
    Rng rng(1234);
    std::map<std::uint64_t, int> counts;
    for (int i = 0; i < 10000; ++i) ++counts[random_select(actions, rng).value];
    // Mean 2500, sigma = sqrt(10000 * 1/4 * 3/4) ~ 43.3; allow 4 sigma.
    for (const auto& [action, count] : counts) {
        CHECK(count > 2500 - 174);
        CHECK(count < 2500 + 174);
    }
}

TEST_CASE("ucb_pick maximises the exploitation term when c is tiny") {
    std::vector<detail::UcbChild> children{{1.0, 2}, {3.0, 4}, {1.0, 1}};
    // Means: 0.5, 0.75, 1.0.
    CHECK(detail::ucb_pick(children, 7, 1e-12) == 2);
    // Identical statistics tie toward the smaller index.
    std::vector<detail::UcbChild> tied{{1.0, 2}, {1.0, 2}};
    CHECK(detail::ucb_pick(tied, 4, 1e-12) == 0);
    // A large constant favours the least-visited child.
    std::vector<detail::UcbChild> spread{{10.0, 100}, {0.0, 1}};
    CHECK(detail::ucb_pick(spread, 101, 100.0) == 1);
    CHECK_THROWS_AS(detail::ucb_pick({}, 1, 1.0), ContractViolation);
    std::vector<detail::UcbChild> unvisited{{0.0, 0}};
    CHECK_THROWS_AS(detail::ucb_pick(unvisited, 1, 1.0), ContractViolation);
}

TEST_CASE("tree search short-circuits a forced move") {
    const games::TreasureHunt game(8);
    const EnumeratedInfoSet set = game.initial_set();
    const std::vector<ActionToken> only{ActionToken{5}};
    MctsConfig config;
    Rng rng(9);
    const auto selection = ismcts_scored(set, only, game, config, rng);
    CHECK(selection.action == ActionToken{5});
    CHECK(selection.iterations == 0);
    CHECK(selection.fallback == false);
}

TEST_CASE("a zero search budget degrades to a flagged random choice") {
    const games::TreasureHunt game(8);
    const auto set = game.initial_set();
    const auto actions = game.legal_actions(set, 1);
    MctsConfig config;
    config.deadline_ms = 0.0;
    Rng rng(17);
    const auto selection = ismcts_scored(set, actions, game, config, rng);
    CHECK(selection.fallback == true);
    CHECK(std::find(actions.begin(), actions.end(), selection.action) != actions.end());
}

TEST_CASE("tree search solves low-middle-high within the step cap") {
    const games::LowMiddleHigh game(15);
    MctsConfig config;
    config.deadline_ms = 20.0;
    const IsmctsAgent agent(config);
    const int cap = default_step_cap(15);
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const SecretToken secret = game.initial_candidates()[(trial * 5) % 15];
        const auto rec = play_episode(game, agent, secret, derive_seed(1, 0, 0, trial), cap);
        CHECK(rec.solved);
        CHECK(rec.steps >= 1);
        CHECK(rec.reward == doctest::Approx(1.0 / rec.steps));
    }
}

TEST_CASE("full ISES plays treasure hunt as exact binary search") {
    const games::TreasureHunt game(8);
    const FullIsesAgent agent;
    for (const SecretToken secret : game.initial_candidates()) {
        const auto rec = play_episode(game, agent, secret, 99, default_step_cap(8));
        CHECK(rec.solved);
        CHECK(rec.steps == 3);
        CHECK(rec.reward == doctest::Approx(1.0 / 3.0));
        REQUIRE(rec.trace.size() == 3);
        CHECK(rec.initial_entropy_bits == 3.0);
        CHECK(rec.trace[0].entropy_bits == 2.0);
        CHECK(rec.trace[1].entropy_bits == 1.0);
        CHECK(rec.trace[2].entropy_bits == 0.0);
        CHECK(rec.wall_times_ms.size() == 3);
    }
}

TEST_CASE("an already-terminal episode ends at step zero with full reward") {
    const OneCellGame game;
    const FullIsesAgent agent;
    const auto rec = play_episode(game, agent, SecretToken{0}, 1, 5);
    CHECK(rec.solved);
    CHECK(rec.steps == 0);
    CHECK(rec.reward == 1.0);
    CHECK(rec.trace.empty());
}

TEST_CASE("play_episode validates its inputs") {
    const games::TreasureHunt game(4);
    const FullIsesAgent agent;
    CHECK_THROWS_AS(play_episode(game, agent, SecretToken{99}, 1, 10), ContractViolation);
    CHECK_THROWS_AS(play_episode(game, agent, SecretToken{1}, 1, 0), ContractViolation);
}

TEST_CASE("an unsolved episode scores zero reward") {
    const games::TreasureHunt game(16);
    const RandomAgent agent;
    // A one-step cap cannot pin down 16 cells.
    const auto rec = play_episode(game, agent, SecretToken{9}, 4, 1);
    CHECK_FALSE(rec.solved);
    CHECK(rec.steps == 1);
    CHECK(rec.reward == 0.0);
}

TEST_CASE("decision sinks observe every selection") {
    struct CountingSink final : DecisionSink {
        int count = 0;
        DecisionRecord last;
        void record(const GameDef&, const DecisionRecord& rec) override {
            ++count;
            last = rec;
        }
    };
    const games::TreasureHunt game(8);
    CountingSink sink;
    FullIsesAgent agent;
    agent.set_decision_sink(&sink);
    const auto rec = play_episode(game, agent, SecretToken{2}, 5, 30);
    CHECK(rec.solved);
    CHECK(sink.count == rec.steps);
    CHECK(sink.last.agent == "full_ises");
    CHECK(sink.last.actions_scored > 0);
    CHECK(sink.last.fallback == false);
}
