#include "deduction/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <utility>

#include "deduction/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deduction {

namespace {

// (observation value, class size) pairs in ascending observation order.
std::vector<std::pair<std::uint64_t, std::size_t>> observation_classes(
    const GameDef& game, std::span<const SecretToken> candidates, ActionToken action) {
    std::vector<std::uint64_t> obs;
    obs.reserve(candidates.size());
    for (SecretToken c : candidates) obs.push_back(game.oracle(c, action).value);
    std::sort(obs.begin(), obs.end());
    std::vector<std::pair<std::uint64_t, std::size_t>> classes;
    for (std::size_t i = 0; i < obs.size();) {
        std::size_t j = i;
        while (j < obs.size() && obs[j] == obs[i]) ++j;
        classes.emplace_back(obs[i], j - i);
        i = j;
    }
    return classes;
}

}  // namespace

double exact_posterior_bits(const GameDef& game,
                            std::span<const SecretToken> candidates,
                            ActionToken action) {
    if (candidates.empty()) {
        throw ContractViolation("exact_posterior_bits: candidate list must be non-empty");
    }
    double acc = 0.0;
    for (const auto& [obs, count] : observation_classes(game, candidates, action)) {
        acc += static_cast<double>(count) * std::log2(static_cast<double>(count));
    }
    return acc / static_cast<double>(candidates.size());
}

double sampled_posterior_bits(const GameDef& game,
                              std::span<const SecretToken> candidates,
                              std::span<const SecretToken> sample,
                              ActionToken action) {
    if (candidates.empty() || sample.empty()) {
        throw ContractViolation("sampled_posterior_bits: candidates and sample must be non-empty");
    }
    const auto classes = observation_classes(game, candidates, action);
    double acc = 0.0;
    for (SecretToken s : sample) {
        const std::uint64_t o = game.oracle(s, action).value;
        const auto it = std::lower_bound(
            classes.begin(), classes.end(), o,
            [](const auto& cls, std::uint64_t v) { return cls.first < v; });
        if (it == classes.end() || it->first != o) {
            throw ContractViolation("sampled_posterior_bits: sampled state is not a candidate");
        }
        acc += std::log2(static_cast<double>(it->second));
    }
    return acc / static_cast<double>(sample.size());
}

std::vector<double> score_actions_serial(const GameDef& game,
                                         std::span<const SecretToken> candidates,
                                         std::span<const ActionToken> actions) {
    std::vector<double> out(actions.size());
    for (std::size_t i = 0; i < actions.size(); ++i) {
        out[i] = exact_posterior_bits(game, candidates, actions[i]);
    }
    return out;
}

std::vector<double> score_actions_parallel(const GameDef& game,
                                           std::span<const SecretToken> candidates,
                                           std::span<const ActionToken> actions,
                                           int num_threads) {
    if (candidates.empty()) {
        throw ContractViolation("score_actions_parallel: candidate list must be non-empty");
    }
    std::vector<double> out(actions.size());
    std::exception_ptr failure;
#ifdef _OPENMP
    const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
#else
    (void)num_threads;
    const int threads = 1;
    (void)threads;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(actions.size()); ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                exact_posterior_bits(game, candidates, actions[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(score_actions_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace deduction
