#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "deduction/episode.hpp"
#include "deduction/game.hpp"

namespace deduction::analysis {

// Exhaustive profiles refuse to enumerate more than this many
// (action, candidate) pairs.
inline constexpr std::size_t kDefaultEnumerationCap = 100000;

struct ProfileRow {
    ActionToken action{};
    double posterior_bits = 0.0;
    // Expected information gained: initial entropy minus posterior.
    double change_bits = 0.0;
};

// Expected posterior entropy of every opening action.
struct FirstMoveProfile {
    double initial_bits = 0.0;
    std::vector<ProfileRow> rows;  // canonical action order
};

// Profile the opening position exhaustively. Raises
// EnumerationCapExceeded when |actions| * |candidates| exceeds `cap`.
FirstMoveProfile first_move_profile(const GameDef& game,
                                    std::size_t cap = kDefaultEnumerationCap);

// Rows ordered by change descending; ties keep canonical action order.
std::vector<ProfileRow> sorted_rows(const FirstMoveProfile& profile);

struct ProfileGroup {
    double change_bits = 0.0;
    std::size_t count = 0;
    ActionToken representative{};  // canonically first member
};

// Rows bucketed by change within `tol`, best group first.
std::vector<ProfileGroup> group_rows(const FirstMoveProfile& profile, double tol = 1e-9);

struct BandRow {
    int step = 0;  // 0 = before the first action
    double min_bits = 0.0;
    double mean_bits = 0.0;
    double max_bits = 0.0;
};

// Entropy envelope over a batch of episodes of one (game, scale, agent)
// cell. Step 0 aggregates initial entropies; step k aggregates the
// episodes that lasted at least k steps.
struct TrajectoryBand {
    std::vector<BandRow> rows;
};

TrajectoryBand trajectory_band(std::span<const EpisodeRecord> episodes);

struct SummaryRow {
    std::string game;
    std::string scale;
    std::string agent;
    std::size_t episodes = 0;
    double mean_steps = 0.0;
    double stddev_steps = 0.0;  // population
    double mean_reward = 0.0;
    // Total decision wall time over total decisions.
    double mean_decision_ms = 0.0;
    std::size_t unsolved = 0;
};

// One row per (game, scale, agent) cell, in first-appearance order.
std::vector<SummaryRow> summarize(std::span<const EpisodeRecord> episodes);

}  // namespace deduction::analysis
