#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "deduction/errors.hpp"

namespace deduction {

// splitmix64 finalizer. Bijective on 64-bit words, so distinct inputs can
// never collide after mixing.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Episode seeds derive from (master, game, agent, trial) so any single
// episode can be replayed without running the rest of the grid.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t game_index,
                                    std::uint64_t agent_index,
                                    std::uint64_t trial_index) noexcept {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ game_index);
    s = mix64(s ^ agent_index);
    s = mix64(s ^ trial_index);
    return s;
}

// Deterministic random stream. mt19937_64 output is fully specified by
// the standard, and the bounded draw below avoids the implementation-
// defined std::uniform_int_distribution, so sequences are identical
// across platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw in [0, n) by rejection sampling.
    std::size_t below(std::size_t n) {
        if (n == 0) throw ContractViolation("Rng::below: range must be non-empty");
        const std::uint64_t span = n;
        constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
        // Largest value v such that [0, v] holds a whole number of spans.
        const std::uint64_t cutoff = kMax - (kMax % span + 1) % span;
        std::uint64_t x = engine_();
        while (x > cutoff) x = engine_();
        return static_cast<std::size_t>(x % span);
    }

    // k distinct indices from [0, n), uniform without replacement, in
    // draw order (partial Fisher-Yates). k > n is clamped to n.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) k = n;
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + below(n - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace deduction
