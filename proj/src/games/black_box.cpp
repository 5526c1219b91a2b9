#include "deduction/games/black_box.hpp"

#include <bit>

#include "deduction/errors.hpp"

namespace deduction::games {

namespace {

struct Ray {
    int r, c;    // current position; may be just outside the box
    int dr, dc;  // unit direction
};

// Entry state for a port: one step outside the box, aimed inward.
Ray entry_ray(int port, int grid) {
    if (port < grid) return {-1, port, 1, 0};                          // top, downward
    if (port < 2 * grid) return {port - grid, grid, 0, -1};            // right, leftward
    if (port < 3 * grid) return {grid, port - 2 * grid, -1, 0};        // bottom, upward
    return {port - 3 * grid, -1, 0, 1};                                // left, rightward
}

}  // namespace

BlackBox::BlackBox(int grid, int atoms) : grid_(grid), atoms_(atoms) {
    if (grid < 2 || grid > 8) {
        throw ContractViolation("black_box: grid must be in [2, 8]");
    }
    const int cells = grid * grid;
    if (atoms < 1 || atoms >= cells) {
        throw ContractViolation("black_box: atoms must be in [1, grid^2 - 1]");
    }
    // Combinations of `atoms` cells in lexicographic order over sorted
    // cell-index tuples; the resulting bitmask sequence is canonical.
    std::vector<int> pick(atoms);
    for (int i = 0; i < atoms; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int cell : pick) mask |= 1ull << cell;
        universe_.push_back(SecretToken{mask});
        if (universe_.size() > 2'000'000) {
            throw ContractViolation("black_box: universe too large");
        }
        int i = atoms - 1;
        while (i >= 0 && pick[i] == cells - atoms + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < atoms; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::string BlackBox::scale_id() const {
    return std::to_string(grid_) + "a" + std::to_string(atoms_);
}

std::vector<ActionToken> BlackBox::legal_actions(const EnumeratedInfoSet&, int) const {
    std::vector<ActionToken> ports;
    ports.reserve(port_count());
    for (int p = 0; p < port_count(); ++p) {
        ports.push_back(ActionToken{static_cast<std::uint64_t>(p)});
    }
    return ports;
}

ObservationToken BlackBox::oracle(SecretToken secret, ActionToken action) const {
    if (action.value >= static_cast<std::uint64_t>(port_count())) {
        throw InvalidAction("black_box: port " + std::to_string(action.value) +
                            " is out of range (grid has " + std::to_string(port_count()) +
                            " ports)");
    }
    const std::uint64_t mask = secret.value;
    const auto atom_at = [&](int r, int c) {
        if (r < 0 || r >= grid_ || c < 0 || c >= grid_) return false;
        return (mask >> (r * grid_ + c) & 1ull) != 0;
    };

    Ray ray = entry_ray(static_cast<int>(action.value), grid_);
    bool inside = false;
    // A ray visits each (cell, direction) state at most once; the guard
    // only trips if that invariant is ever broken.
    const int guard = 16 * grid_ * grid_ + 8;
    for (int iter = 0; iter < guard; ++iter) {
        const int nr = ray.r + ray.dr;
        const int nc = ray.c + ray.dc;
        if (nr < 0 || nr >= grid_ || nc < 0 || nc >= grid_) {
            // Leaving the box: identify the port stepped into.
            int port;
            if (nr < 0) port = nc;
            else if (nr >= grid_) port = 2 * grid_ + nc;
            else if (nc >= grid_) port = grid_ + nr;
            else port = 3 * grid_ + nr;
            return ObservationToken{kExitBase + static_cast<std::uint64_t>(port)};
        }
        if (atom_at(nr, nc)) return ObservationToken{kAbsorbed};
        // The two cells flanking the cell ahead, perpendicular to travel.
        const bool side_a = atom_at(nr + ray.dc, nc + ray.dr);
        const bool side_b = atom_at(nr - ray.dc, nc - ray.dr);
        if (side_a && side_b) {
            if (!inside) return ObservationToken{kReflected};
            ray.dr = -ray.dr;
            ray.dc = -ray.dc;
        } else if (side_a) {
            if (!inside) return ObservationToken{kReflected};
            const int dr = -ray.dc, dc = -ray.dr;  // turn away from side_a
            ray.dr = dr;
            ray.dc = dc;
        } else if (side_b) {
            if (!inside) return ObservationToken{kReflected};
            const int dr = ray.dc, dc = ray.dr;  // turn away from side_b
            ray.dr = dr;
            ray.dc = dc;
        } else {
            ray.r = nr;
            ray.c = nc;
            inside = true;
        }
    }
    throw ContractViolation("black_box: ray failed to terminate (broken dynamics)");
}

std::string BlackBox::port_name(int port) const {
    if (port < grid_) return "T" + std::to_string(port);
    if (port < 2 * grid_) return "R" + std::to_string(port - grid_);
    if (port < 3 * grid_) return "B" + std::to_string(port - 2 * grid_);
    return "L" + std::to_string(port - 3 * grid_);
}

std::string BlackBox::format_secret(SecretToken secret) const {
    std::string out = "{";
    bool first = true;
    for (int cell = 0; cell < grid_ * grid_; ++cell) {
        if ((secret.value >> cell & 1ull) == 0) continue;
        if (!first) out += ' ';
        first = false;
        out += "(" + std::to_string(cell / grid_) + "." + std::to_string(cell % grid_) + ")";
    }
    return out + "}";
}

std::string BlackBox::format_action(ActionToken action) const {
    return port_name(static_cast<int>(action.value));
}

std::string BlackBox::format_observation(ObservationToken obs) const {
    if (obs.value == kAbsorbed) return "absorbed";
    if (obs.value == kReflected) return "reflected";
    return "exit:" + port_name(static_cast<int>(obs.value - kExitBase));
}

}  // namespace deduction::games
