#pragma once

#include <span>
#include <vector>

#include "deduction/game.hpp"
#include "deduction/tokens.hpp"

namespace deduction {

// Exact expected posterior entropy of `action` over a uniform candidate
// list: candidates are grouped by the observation they would produce and
// the class sizes accumulated as sum(n_o * log2 n_o) / n in ascending
// observation order. The fixed grouping and summation order make the
// result a pure function of (candidates, action), bit-for-bit.
double exact_posterior_bits(const GameDef& game,
                            std::span<const SecretToken> candidates,
                            ActionToken action);

// Monte-Carlo variant: average, over `sample`, of the entropy the full
// candidate list would retain after seeing the observation the sampled
// state produces. Sampled states must come from `candidates`.
double sampled_posterior_bits(const GameDef& game,
                              std::span<const SecretToken> candidates,
                              std::span<const SecretToken> sample,
                              ActionToken action);

// Reference kernel: exact scores for every action, computed sequentially.
std::vector<double> score_actions_serial(const GameDef& game,
                                         std::span<const SecretToken> candidates,
                                         std::span<const ActionToken> actions);

// OpenMP kernel. Parallelism is across actions only; each per-action
// score runs the exact serial computation, so the output is bit-identical
// to score_actions_serial for any thread count. num_threads <= 0 uses the
// OpenMP default.
std::vector<double> score_actions_parallel(const GameDef& game,
                                           std::span<const SecretToken> candidates,
                                           std::span<const ActionToken> actions,
                                           int num_threads = 0);

}  // namespace deduction
