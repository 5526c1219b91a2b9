#include "deduction/analysis/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "deduction/errors.hpp"
#include "deduction/scoring.hpp"

namespace deduction::analysis {

FirstMoveProfile first_move_profile(const GameDef& game, std::size_t cap) {
    const EnumeratedInfoSet set = game.initial_set();
    const std::vector<ActionToken> actions = game.legal_actions(set, 1);
    const std::size_t pairs = actions.size() * set.size();
    if (pairs > cap) {
        throw EnumerationCapExceeded(
            "first-move profile of " + game.game_id() + " needs " + std::to_string(pairs) +
            " (action, candidate) pairs, above the cap of " + std::to_string(cap));
    }
    FirstMoveProfile profile;
    profile.initial_bits = set.entropy_bits();
    profile.rows.reserve(actions.size());
    const std::vector<double> bits = score_actions_parallel(game, set.candidates(), actions);
    for (std::size_t i = 0; i < actions.size(); ++i) {
        double change = profile.initial_bits - bits[i];
        // An uninformative action gains exactly zero; keep float dust
        // from turning that into a negative gain.
        if (change < 0.0 && change > -1e-9) change = 0.0;
        profile.rows.push_back({actions[i], bits[i], change});
    }
    return profile;
}

std::vector<ProfileRow> sorted_rows(const FirstMoveProfile& profile) {
    std::vector<ProfileRow> rows = profile.rows;
    std::stable_sort(rows.begin(), rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
        return a.change_bits > b.change_bits;
    });
    return rows;
}

std::vector<ProfileGroup> group_rows(const FirstMoveProfile& profile, double tol) {
    std::vector<ProfileGroup> groups;
    for (const ProfileRow& row : sorted_rows(profile)) {
        if (!groups.empty() && std::abs(groups.back().change_bits - row.change_bits) <= tol) {
            ++groups.back().count;
            continue;
        }
        groups.push_back({row.change_bits, 1, row.action});
    }
    return groups;
}

TrajectoryBand trajectory_band(std::span<const EpisodeRecord> episodes) {
    if (episodes.empty()) {
        throw InvalidBatch("trajectory_band: episode batch must be non-empty");
    }
    const EpisodeRecord& first = episodes.front();
    std::size_t max_steps = 0;
    for (const EpisodeRecord& e : episodes) {
        if (e.game != first.game || e.scale != first.scale || e.agent != first.agent) {
            throw InvalidBatch("trajectory_band: episodes mix (game, scale, agent) cells");
        }
        max_steps = std::max(max_steps, e.trace.size());
    }
    TrajectoryBand band;
    band.rows.reserve(max_steps + 1);
    for (std::size_t step = 0; step <= max_steps; ++step) {
        BandRow row;
        row.step = static_cast<int>(step);
        double total = 0.0;
        std::size_t count = 0;
        for (const EpisodeRecord& e : episodes) {
            if (step > e.trace.size()) continue;
            const double bits =
                step == 0 ? e.initial_entropy_bits : e.trace[step - 1].entropy_bits;
            if (count == 0) {
                row.min_bits = row.max_bits = bits;
            } else {
                row.min_bits = std::min(row.min_bits, bits);
                row.max_bits = std::max(row.max_bits, bits);
            }
            total += bits;
            ++count;
        }
        row.mean_bits = total / static_cast<double>(count);
        band.rows.push_back(row);
    }
    return band;
}

std::vector<SummaryRow> summarize(std::span<const EpisodeRecord> episodes) {
    struct Accumulator {
        std::size_t n = 0;
        double steps_sum = 0.0;
        double steps_sq_sum = 0.0;
        double reward_sum = 0.0;
        double wall_sum = 0.0;
        std::size_t decisions = 0;
        std::size_t unsolved = 0;
    };
    std::vector<SummaryRow> rows;
    std::vector<Accumulator> accs;
    std::unordered_map<std::string, std::size_t> index;
    for (const EpisodeRecord& e : episodes) {
        const std::string key = e.game + '\x1f' + e.scale + '\x1f' + e.agent;
        const auto [it, inserted] = index.try_emplace(key, rows.size());
        if (inserted) {
            SummaryRow row;
            row.game = e.game;
            row.scale = e.scale;
            row.agent = e.agent;
            rows.push_back(std::move(row));
            accs.emplace_back();
        }
        Accumulator& acc = accs[it->second];
        ++acc.n;
        acc.steps_sum += e.steps;
        acc.steps_sq_sum += static_cast<double>(e.steps) * e.steps;
        acc.reward_sum += e.reward;
        for (double ms : e.wall_times_ms) acc.wall_sum += ms;
        acc.decisions += e.wall_times_ms.size();
        if (!e.solved) ++acc.unsolved;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Accumulator& acc = accs[i];
        SummaryRow& row = rows[i];
        row.episodes = acc.n;
        row.mean_steps = acc.steps_sum / static_cast<double>(acc.n);
        const double variance =
            acc.steps_sq_sum / static_cast<double>(acc.n) - row.mean_steps * row.mean_steps;
        row.stddev_steps = std::sqrt(std::max(variance, 0.0));
        row.mean_reward = acc.reward_sum / static_cast<double>(acc.n);
        row.mean_decision_ms =
            acc.decisions > 0 ? acc.wall_sum / static_cast<double>(acc.decisions) : 0.0;
        row.unsolved = acc.unsolved;
    }
    return rows;
}

}  // namespace deduction::analysis
