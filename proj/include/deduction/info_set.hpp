#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "deduction/tokens.hpp"

namespace deduction {

// Entropy in bits: log base 2 throughout.
using EntropyBits = double;

// Entropy comparisons (termination checks, partition identities) use this
// slack so float round-off never flips a decision.
inline constexpr double kEntropyTolerance = 1e-9;
// Probability tables must sum to one within this slack.
inline constexpr double kMassTolerance = 1e-9;

// Explicit candidate list with an implicit uniform belief. Order is
// canonical: it is the order induced by the game's initial universe and
// is preserved by every update.
class EnumeratedInfoSet {
public:
    explicit EnumeratedInfoSet(std::vector<SecretToken> candidates);

    const std::vector<SecretToken>& candidates() const noexcept { return candidates_; }
    std::size_t size() const noexcept { return candidates_.size(); }
    bool is_singleton() const noexcept { return candidates_.size() == 1; }
    bool contains(SecretToken secret) const noexcept;

    EntropyBits entropy_bits() const noexcept;

private:
    std::vector<SecretToken> candidates_;
};

// H = log2 n for a uniform set of n candidates.
EntropyBits entropy_enumerated(const EnumeratedInfoSet& set);

// One factored dimension of a tabular belief.
struct TabularAxis {
    std::string name;
    std::size_t size = 0;
    // Optional display names; empty, or exactly `size` entries.
    std::vector<std::string> labels;
};

// Probability table over the cross product of its axes. Cells are laid
// out row-major (last axis fastest) and stay aligned with cell_secrets.
class TabularInfoSet {
public:
    TabularInfoSet(std::vector<TabularAxis> axes,
                   std::vector<SecretToken> cell_secrets,
                   std::vector<double> mass);

    static TabularInfoSet uniform(std::vector<TabularAxis> axes,
                                  std::vector<SecretToken> cell_secrets);
    // Single-axis uniform table over an enumerated set's candidates.
    static TabularInfoSet uniform_from(const EnumeratedInfoSet& set);

    const std::vector<TabularAxis>& axes() const noexcept { return axes_; }
    const std::vector<SecretToken>& cell_secrets() const noexcept { return cell_secrets_; }
    const std::vector<double>& mass() const noexcept { return mass_; }
    std::size_t cell_count() const noexcept { return mass_.size(); }

    EntropyBits entropy_bits() const noexcept;
    // Candidates that still carry positive mass, in cell order.
    std::vector<SecretToken> support() const;

private:
    std::vector<TabularAxis> axes_;
    std::vector<SecretToken> cell_secrets_;
    std::vector<double> mass_;
};

// H = -sum p log2 p over the table's cells.
EntropyBits entropy_tabular(const TabularInfoSet& table);

// Shannon entropy of a raw mass vector, with the 0*log(0) = 0 convention.
// Validates the vector: negative mass or a sum outside kMassTolerance of
// one raises InvalidDistribution.
EntropyBits shannon_entropy_bits(std::span<const double> mass);

}  // namespace deduction
