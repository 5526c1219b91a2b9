#include "deduction/games/fake_coin.hpp"

#include <bit>

#include "deduction/errors.hpp"

namespace deduction::games {

namespace {

// Subsets of {0..coins-1} with exactly `size` bits, ascending as integers.
std::vector<std::uint32_t> masks_of_size(int coins, int size) {
    std::vector<std::uint32_t> out;
    const std::uint32_t limit = 1u << coins;
    for (std::uint32_t m = 0; m < limit; ++m) {
        if (std::popcount(m) == size) out.push_back(m);
    }
    return out;
}

std::string mask_to_string(std::uint32_t mask) {
    std::string out;
    for (int c = 0; mask != 0; ++c, mask >>= 1) {
        if (mask & 1u) {
            if (!out.empty()) out += '+';
            out += std::to_string(c);
        }
    }
    return out;
}

}  // namespace

FakeCoin::FakeCoin(int coins) : coins_(coins) {
    if (coins < 2 || coins > 12) {
        throw ContractViolation("fake_coin: coins must be in [2, 12]");
    }
    universe_.reserve(static_cast<std::size_t>(coins) * 2);
    for (int k = 0; k < coins; ++k) {
        universe_.push_back(SecretToken{static_cast<std::uint64_t>(k) * 2});      // lighter
        universe_.push_back(SecretToken{static_cast<std::uint64_t>(k) * 2 + 1});  // heavier
    }
    // Pan size runs from 1 to floor(coins / 2); for each size, left and
    // right masks ascend. A weighing and its mirror give the same
    // information, so only the variant whose left pan holds the smallest
    // involved coin is kept.
    for (int size = 1; size <= coins / 2; ++size) {
        const auto masks = masks_of_size(coins, size);
        for (std::uint32_t left : masks) {
            for (std::uint32_t right : masks) {
                if ((left & right) != 0) continue;
                const std::uint32_t lowest = (left | right) & ~((left | right) - 1);
                if ((left & lowest) == 0) continue;
                weighings_.push_back(make_weighing(left, right));
            }
        }
    }
}

std::vector<ActionToken> FakeCoin::legal_actions(const EnumeratedInfoSet&, int) const {
    return weighings_;
}

ObservationToken FakeCoin::oracle(SecretToken secret, ActionToken action) const {
    const std::uint32_t left = left_pan(action);
    const std::uint32_t right = right_pan(action);
    const std::uint32_t all = (coins_ >= 32) ? 0xffffffffu : ((1u << coins_) - 1u);
    if (left == 0 || right == 0 || (left & right) != 0 ||
        std::popcount(left) != std::popcount(right) || ((left | right) & ~all) != 0) {
        throw InvalidAction("fake_coin: weighing must put equal-sized disjoint non-empty "
                            "pans of real coins on the scale");
    }
    const int coin = static_cast<int>(secret.value >> 1);
    const bool heavier = (secret.value & 1) != 0;
    const std::uint32_t bit = 1u << coin;
    if (left & bit) {
        return ObservationToken{heavier ? kLeftHeavy : kRightHeavy};
    }
    if (right & bit) {
        return ObservationToken{heavier ? kRightHeavy : kLeftHeavy};
    }
    return ObservationToken{kBalanced};
}

std::string FakeCoin::format_secret(SecretToken secret) const {
    const auto coin = secret.value >> 1;
    return "coin" + std::to_string(coin) + ((secret.value & 1) ? "(heavy)" : "(light)");
}

std::string FakeCoin::format_action(ActionToken action) const {
    return mask_to_string(left_pan(action)) + "v" + mask_to_string(right_pan(action));
}

std::string FakeCoin::format_observation(ObservationToken obs) const {
    switch (obs.value) {
        case kLeftHeavy: return "left-heavy";
        case kRightHeavy: return "right-heavy";
        case kBalanced: return "balanced";
        default: return std::to_string(obs.value);
    }
}

TabularInfoSet FakeCoin::initial_table() const {
    std::vector<TabularAxis> axes;
    TabularAxis coin_axis{"coin", static_cast<std::size_t>(coins_), {}};
    for (int k = 0; k < coins_; ++k) coin_axis.labels.push_back("coin" + std::to_string(k));
    axes.push_back(std::move(coin_axis));
    axes.push_back(TabularAxis{"direction", 2, {"light", "heavy"}});
    return TabularInfoSet::uniform(std::move(axes), universe_);
}

ActionToken FakeCoin::make_weighing(std::uint32_t left_mask, std::uint32_t right_mask) {
    return ActionToken{static_cast<std::uint64_t>(left_mask) |
                       (static_cast<std::uint64_t>(right_mask) << 16)};
}

std::uint32_t FakeCoin::left_pan(ActionToken action) {
    return static_cast<std::uint32_t>(action.value & 0xffffu);
}

std::uint32_t FakeCoin::right_pan(ActionToken action) {
    return static_cast<std::uint32_t>((action.value >> 16) & 0xffffu);
}

}  // namespace deduction::games
