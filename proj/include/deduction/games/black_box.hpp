#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Classic Black Box: `atoms` atoms hide in a `grid` x `grid` box. A ray
// fired into one of the 4*grid edge ports is absorbed by an atom dead
// ahead, deflected 90 degrees away from an atom diagonally ahead,
// reversed when atoms sit on both diagonals, and otherwise flies
// straight. A ray deflected or reversed before entering the box is
// reported as reflected; every other ray eventually exits some port
// (possibly the entry port). Knowledge game: fire rays until the atom
// placement is pinned down.
//
// Ports: 0..G-1 top edge by column, G..2G-1 right edge by row, 2G..3G-1
// bottom edge by column, 3G..4G-1 left edge by row. Secrets are cell
// bitmasks (cell = row * grid + column). Observations: 0 = absorbed,
// 1 = reflected, 2 + port = exit at `port`.
class BlackBox : public GameDef {
public:
    static constexpr std::uint64_t kAbsorbed = 0;
    static constexpr std::uint64_t kReflected = 1;
    static constexpr std::uint64_t kExitBase = 2;

    BlackBox(int grid, int atoms);

    std::string name() const override { return "black_box"; }
    std::string scale_id() const override;
    const std::vector<SecretToken>& initial_candidates() const override { return universe_; }
    std::vector<ActionToken> legal_actions(const EnumeratedInfoSet& set, int step) const override;
    ObservationToken oracle(SecretToken secret, ActionToken action) const override;
    TerminationMode termination_mode() const override { return TerminationMode::kKnowledge; }

    std::string format_secret(SecretToken secret) const override;
    std::string format_action(ActionToken action) const override;
    std::string format_observation(ObservationToken obs) const override;

    int grid() const noexcept { return grid_; }
    int atoms() const noexcept { return atoms_; }
    int port_count() const noexcept { return 4 * grid_; }

    // "T2" / "R0" / "B3" / "L1" style port names.
    std::string port_name(int port) const;

private:
    int grid_;
    int atoms_;
    std::vector<SecretToken> universe_;
};

}  // namespace deduction::games
