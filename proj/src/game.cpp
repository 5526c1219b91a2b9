#include "deduction/game.hpp"

#include <string>

namespace deduction {

std::string GameDef::game_id() const {
    return name() + "(" + scale_id() + ")";
}

bool GameDef::declaration_success(ActionToken, ObservationToken) const {
    return false;
}

std::optional<SecretToken> GameDef::action_as_declaration(ActionToken) const {
    return std::nullopt;
}

std::string GameDef::format_secret(SecretToken secret) const {
    return std::to_string(secret.value);
}

std::string GameDef::format_action(ActionToken action) const {
    return std::to_string(action.value);
}

std::string GameDef::format_observation(ObservationToken obs) const {
    return std::to_string(obs.value);
}

EnumeratedInfoSet GameDef::initial_set() const {
    return EnumeratedInfoSet(initial_candidates());
}

}  // namespace deduction
