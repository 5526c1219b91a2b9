#pragma once

#include <memory>
#include <string>
#include <vector>

#include "deduction/game.hpp"

namespace deduction::games {

// Everything needed to instantiate a game.
struct GameSpec {
    std::string name;
    std::string scale;
    // Code-guessing games only: restrict guesses to current candidates.
    bool consistent_guesses_only = false;
    // Wordle only: one word per line.
    std::string dictionary_path;
};

// Instantiate a game from its spec. Unknown names, malformed scale
// strings, and out-of-range parameters raise ConfigError.
std::unique_ptr<GameDef> make_game(const GameSpec& spec);

// Names accepted by make_game, in canonical order.
const std::vector<std::string>& known_games();

// The scales a game is expected to run at on a workstation, smallest
// first. Used by default benchmark grids and by smoke tooling.
const std::vector<std::string>& desk_scales(const std::string& game);
std::string smallest_desk_scale(const std::string& game);

}  // namespace deduction::games
