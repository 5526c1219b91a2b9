#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "deduction/errors.hpp"
#include "deduction/games/black_box.hpp"

using namespace deduction;
using deduction::games::BlackBox;

namespace {

// Independent ray tracer, written from the classic rules in a different
// shape than the game's oracle: explicit entry phase (hit check, then
// edge reflection), then a turn-or-advance loop over the current cell.
struct RefTracer {
    int grid;
    std::uint64_t atoms;

    bool atom_at(int r, int c) const {
        if (r < 0 || r >= grid || c < 0 || c >= grid) return false;
        return (atoms >> (r * grid + c)) & 1ull;
    }

    // port -> (entry row, entry col, dr, dc)
    void entry(int port, int& r, int& c, int& dr, int& dc) const {
        if (port < grid) {
            r = 0, c = port, dr = 1, dc = 0;  // top, heading down
        } else if (port < 2 * grid) {
            r = port - grid, c = grid - 1, dr = 0, dc = -1;  // right, heading left
        } else if (port < 3 * grid) {
            r = grid - 1, c = port - 2 * grid, dr = -1, dc = 0;  // bottom, heading up
        } else {
            r = port - 3 * grid, c = 0, dr = 0, dc = 1;  // left, heading right
        }
    }

    int exit_port(int r, int c, int dr, int dc) const {
        const int nr = r + dr, nc = c + dc;
        if (nr < 0) return c;                       // top edge
        if (nc >= grid) return grid + r;            // right edge
        if (nr >= grid) return 2 * grid + c;        // bottom edge
        return 3 * grid + r;                        // left edge
    }

    // Returns the game's observation encoding.
    std::uint64_t fire(int port) const {
        int r, c, dr, dc;
        entry(port, r, c, dr, dc);

        // Entry phase: a hit beats reflection; an atom beside the entry
        // cell (perpendicular to the heading) reflects the ray away.
        if (atom_at(r, c)) return BlackBox::kAbsorbed;
        if (atom_at(r + dc, c + dr) || atom_at(r - dc, c - dr)) return BlackBox::kReflected;

        // March: look one cell ahead; hit, turn away from a forward
        // diagonal atom (both diagonals = reverse), or advance.
        for (int guard = 0; guard < 8 * grid * grid + 8; ++guard) {
            const int nr = r + dr, nc = c + dc;
            if (nr < 0 || nr >= grid || nc < 0 || nc >= grid) {
                return BlackBox::kExitBase + exit_port(r, c, dr, dc);
            }
            if (atom_at(nr, nc)) return BlackBox::kAbsorbed;
            const bool left = atom_at(nr + dc, nc + dr);
            const bool right = atom_at(nr - dc, nc - dr);
            if (left && right) {
                dr = -dr, dc = -dc;
            } else if (left) {
                const int ndr = -dc, ndc = -dr;
                dr = ndr, dc = ndc;
            } else if (right) {
                const int ndr = dc, ndc = dr;
                dr = ndr, dc = ndc;
            } else {
                r = nr, c = nc;
            }
        }
        throw std::runtime_error("reference tracer did not terminate");
    }
};

std::uint64_t mask_of(std::initializer_list<std::pair<int, int>> cells, int grid) {
    std::uint64_t m = 0;
    for (const auto& [r, c] : cells) m |= 1ull << (r * grid + c);
    return m;
}

}  // namespace

TEST_CASE("an unobstructed row traverses straight through") {
    const BlackBox game(4, 1);
    const std::uint64_t atom33 = mask_of({{3, 3}}, 4);
    // Left port row 0 -> right port row 0.
    CHECK(game.oracle(SecretToken{atom33}, ActionToken{12}).value == BlackBox::kExitBase + 4);
    // Top port column 0 -> bottom port column 0.
    CHECK(game.oracle(SecretToken{atom33}, ActionToken{0}).value == BlackBox::kExitBase + 8);
}

TEST_CASE("an atom dead ahead absorbs the ray") {
    const BlackBox game(4, 1);
    const std::uint64_t atom11 = mask_of({{1, 1}}, 4);
    CHECK(game.oracle(SecretToken{atom11}, ActionToken{1}).value == BlackBox::kAbsorbed);
}

TEST_CASE("an atom beside the entry cell reflects the ray") {
    const BlackBox game(4, 1);
    const std::uint64_t atom01 = mask_of({{0, 1}}, 4);
    CHECK(game.oracle(SecretToken{atom01}, ActionToken{2}).value == BlackBox::kReflected);
    CHECK(game.oracle(SecretToken{atom01}, ActionToken{0}).value == BlackBox::kReflected);
}

TEST_CASE("the single-atom deflection example exits the fixed port") {
    const BlackBox game(4, 1);
    const std::uint64_t atom11 = mask_of({{1, 1}}, 4);
    // Down column 2: the atom on the forward diagonal turns the ray
    // east; it exits the right edge at row 0.
    const auto obs = game.oracle(SecretToken{atom11}, ActionToken{2});
    CHECK(obs.value == BlackBox::kExitBase + 4);
    CHECK(game.format_observation(obs) == "exit:R0");

    RefTracer ref{4, atom11};
    CHECK(ref.fire(2) == obs.value);
}

TEST_CASE("oracle matches the reference tracer over the whole 1-atom universe") {
    const BlackBox game(4, 1);
    REQUIRE(game.initial_candidates().size() == 16);
    for (const SecretToken s : game.initial_candidates()) {
        const RefTracer ref{4, s.value};
        for (int port = 0; port < game.port_count(); ++port) {
            CHECK(game.oracle(s, ActionToken{static_cast<std::uint64_t>(port)}).value ==
                  ref.fire(port));
        }
    }
}

TEST_CASE("oracle matches the reference tracer over the whole 2-atom universe") {
    const BlackBox game(4, 2);
    REQUIRE(game.initial_candidates().size() == 120);
    for (const SecretToken s : game.initial_candidates()) {
        const RefTracer ref{4, s.value};
        for (int port = 0; port < game.port_count(); ++port) {
            CHECK(game.oracle(s, ActionToken{static_cast<std::uint64_t>(port)}).value ==
                  ref.fire(port));
        }
    }
}

TEST_CASE("oracle matches the reference tracer on a larger grid") {
    const BlackBox game(6, 3);
    // Sample every 17th secret to keep the sweep fast.
    const auto& universe = game.initial_candidates();
    for (std::size_t i = 0; i < universe.size(); i += 17) {
        const RefTracer ref{6, universe[i].value};
        for (int port = 0; port < game.port_count(); ++port) {
            CHECK(game.oracle(universe[i], ActionToken{static_cast<std::uint64_t>(port)})
                      .value == ref.fire(port));
        }
    }
}

TEST_CASE("every exiting ray is reversible") {
    const BlackBox game(4, 2);
    for (const SecretToken s : game.initial_candidates()) {
        for (int port = 0; port < game.port_count(); ++port) {
            const auto obs = game.oracle(s, ActionToken{static_cast<std::uint64_t>(port)});
            if (obs.value < BlackBox::kExitBase) continue;
            const int out = static_cast<int>(obs.value - BlackBox::kExitBase);
            const auto back = game.oracle(s, ActionToken{static_cast<std::uint64_t>(out)});
            REQUIRE(back.value >= BlackBox::kExitBase);
            CHECK(static_cast<int>(back.value - BlackBox::kExitBase) == port);
        }
    }
}

TEST_CASE("black box universe enumerates atom placements without duplicates") {
    const BlackBox game(4, 2);
    const auto& universe = game.initial_candidates();
    std::set<std::uint64_t> seen;
    for (const SecretToken s : universe) {
        CHECK(std::popcount(s.value) == 2);
        CHECK(s.value < (1ull << 16));
        CHECK(seen.insert(s.value).second);
    }
    // Canonical order: lexicographic over the picked cell-index pairs.
    std::vector<std::uint64_t> expected;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b) expected.push_back((1ull << a) | (1ull << b));
    REQUIRE(universe.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(universe[i].value == expected[i]);
}

TEST_CASE("black box validates construction and actions") {
    CHECK_THROWS_AS(BlackBox(1, 1), ContractViolation);
    CHECK_THROWS_AS(BlackBox(4, 0), ContractViolation);
    CHECK_THROWS_AS(BlackBox(4, 16), ContractViolation);
    const BlackBox game(4, 1);
    CHECK_THROWS_AS(game.oracle(game.initial_candidates()[0], ActionToken{16}),
                    InvalidAction);
    CHECK(game.game_id() == "black_box(4a1)");
    CHECK(game.format_action(ActionToken{5}) == "R1");
    CHECK(game.format_secret(game.initial_candidates()[0]) == "{(0.0)}");
}
