#include "deduction/info_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "deduction/errors.hpp"

namespace deduction {

EnumeratedInfoSet::EnumeratedInfoSet(std::vector<SecretToken> candidates)
    : candidates_(std::move(candidates)) {
    if (candidates_.empty()) {
        throw ContractViolation("EnumeratedInfoSet: candidate list must be non-empty");
    }
}

bool EnumeratedInfoSet::contains(SecretToken secret) const noexcept {
    return std::find(candidates_.begin(), candidates_.end(), secret) != candidates_.end();
}

EntropyBits EnumeratedInfoSet::entropy_bits() const noexcept {
    return std::log2(static_cast<double>(candidates_.size()));
}

EntropyBits entropy_enumerated(const EnumeratedInfoSet& set) {
    return set.entropy_bits();
}

EntropyBits shannon_entropy_bits(std::span<const double> mass) {
    double total = 0.0;
    for (double p : mass) {
        if (p < 0.0) throw InvalidDistribution("probability mass must be non-negative");
        total += p;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        std::ostringstream msg;
        msg << "probability mass sums to " << total << ", expected 1 within " << kMassTolerance;
        throw InvalidDistribution(msg.str());
    }
    double h = 0.0;
    for (double p : mass) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h > 0.0 ? h : 0.0;  // fold -0.0 from a point mass into +0.0
}

TabularInfoSet::TabularInfoSet(std::vector<TabularAxis> axes,
                               std::vector<SecretToken> cell_secrets,
                               std::vector<double> mass)
    : axes_(std::move(axes)), cell_secrets_(std::move(cell_secrets)), mass_(std::move(mass)) {
    if (axes_.empty()) throw InvalidDistribution("tabular set needs at least one axis");
    std::size_t cells = 1;
    for (const TabularAxis& ax : axes_) {
        if (ax.size == 0) throw InvalidDistribution("tabular axis '" + ax.name + "' has zero size");
        if (!ax.labels.empty() && ax.labels.size() != ax.size) {
            throw InvalidDistribution("tabular axis '" + ax.name + "' label count mismatch");
        }
        cells *= ax.size;
    }
    if (cell_secrets_.size() != cells) {
        throw InvalidDistribution("tabular cell_secrets length does not match axis product");
    }
    if (mass_.size() != cells) {
        throw InvalidDistribution("tabular mass length does not match axis product");
    }
    shannon_entropy_bits(mass_);  // validates non-negativity and normalisation
}

TabularInfoSet TabularInfoSet::uniform(std::vector<TabularAxis> axes,
                                       std::vector<SecretToken> cell_secrets) {
    std::vector<double> mass(cell_secrets.size(),
                             1.0 / static_cast<double>(cell_secrets.size()));
    return TabularInfoSet(std::move(axes), std::move(cell_secrets), std::move(mass));
}

TabularInfoSet TabularInfoSet::uniform_from(const EnumeratedInfoSet& set) {
    TabularAxis axis{"candidate", set.size(), {}};
    return uniform({axis}, set.candidates());
}

EntropyBits TabularInfoSet::entropy_bits() const noexcept {
    double h = 0.0;
    for (double p : mass_) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h > 0.0 ? h : 0.0;
}

std::vector<SecretToken> TabularInfoSet::support() const {
    std::vector<SecretToken> out;
    for (std::size_t i = 0; i < mass_.size(); ++i) {
        if (mass_[i] > 0.0) out.push_back(cell_secrets_[i]);
    }
    return out;
}

EntropyBits entropy_tabular(const TabularInfoSet& table) {
    return table.entropy_bits();
}

}  // namespace deduction
