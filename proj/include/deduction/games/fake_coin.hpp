#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Find the one counterfeit among `coins` coins with a balance scale. The
// fake may be lighter or heavier, so the universe has 2 * coins cells:
// secret = coin * 2 + direction (0 = lighter, 1 = heavier). A weighing
// puts equal-sized disjoint pans on the scale; mirrored weighings are
// deduplicated by keeping the variant whose left pan holds the smallest
// involved coin. Knowledge game: play until the secret is pinned down.
class FakeCoin : public GameDef {
public:
    explicit FakeCoin(int coins);

    std::string name() const override { return "fake_coin"; }
    std::string scale_id() const override { return std::to_string(coins_); }
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }
    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet& set, int step) const override;
    ObservationToken oracle(SecretToken secret, ActionToken action) const override;
    TerminationMode termination_mode() const override { return TerminationMode::kKnowledge; }

    std::string format_secret(SecretToken secret) const override;
    std::string format_action(ActionToken action) const override;
    std::string format_observation(ObservationToken obs) const override;

    int coins() const noexcept { return coins_; }

    // Coin-by-direction table with uniform mass, for tabular workflows.
    TabularInfoSet initial_table() const;

    static constexpr std::uint64_t kLeftHeavy = 0;
    static constexpr std::uint64_t kRightHeavy = 1;
    static constexpr std::uint64_t kBalanced = 2;

    static ActionToken make_weighing(std::uint32_t left_mask, std::uint32_t right_mask);
    static std::uint32_t left_pan(ActionToken action);
    static std::uint32_t right_pan(ActionToken action);

private:
    int coins_;
    std::vector<SecretToken> universe_;
    std::vector<ActionToken> weighings_;
};

}  // namespace deduction::games
