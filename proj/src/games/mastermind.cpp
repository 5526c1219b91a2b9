#include "deduction/games/mastermind.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "deduction/errors.hpp"

namespace deduction::games {

namespace {

constexpr int kMaxColors = 16;

void validate_scale(int pegs, int colors, const char* which) {
    if (pegs < 1 || pegs > 8) {
        throw ContractViolation(std::string(which) + ": pegs must be in [1, 8]");
    }
    if (colors < 2 || colors > kMaxColors) {
        throw ContractViolation(std::string(which) + ": colors must be in [2, 16]");
    }
    double cells = std::pow(static_cast<double>(colors), pegs);
    if (cells > 2e6) {
        throw ContractViolation(std::string(which) + ": universe too large");
    }
}

std::vector<SecretToken> full_universe(int pegs, int colors) {
    std::uint64_t count = 1;
    for (int i = 0; i < pegs; ++i) count *= static_cast<std::uint64_t>(colors);
    std::vector<SecretToken> u;
    u.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) u.push_back(SecretToken{v});
    return u;
}

void check_code(std::uint64_t value, int pegs, int colors, const char* what) {
    std::uint64_t count = 1;
    for (int i = 0; i < pegs; ++i) count *= static_cast<std::uint64_t>(colors);
    if (value >= count) {
        throw InvalidAction(std::string(what) + " " + std::to_string(value) +
                            " is out of range for " + std::to_string(pegs) + " pegs over " +
                            std::to_string(colors) + " colors");
    }
}

int black_pegs(std::uint64_t secret, std::uint64_t guess, int pegs, int colors) {
    int black = 0;
    for (int i = 0; i < pegs; ++i) {
        if (secret % colors == guess % colors) ++black;
        secret /= colors;
        guess /= colors;
    }
    return black;
}

int white_pegs(std::uint64_t secret, std::uint64_t guess, int pegs, int colors, int black) {
    std::array<int, kMaxColors> sc{};
    std::array<int, kMaxColors> gc{};
    for (int i = 0; i < pegs; ++i) {
        ++sc[secret % colors];
        ++gc[guess % colors];
        secret /= colors;
        guess /= colors;
    }
    int shared = 0;
    for (int c = 0; c < colors; ++c) shared += std::min(sc[c], gc[c]);
    return shared - black;
}

std::string format_code(std::uint64_t code, int pegs, int colors) {
    std::string out;
    for (int i = 0; i < pegs; ++i) {
        if (i) out += '-';
        out += std::to_string(code % colors);
        code /= colors;
    }
    return out;
}

std::vector<ActionToken> guess_space(const EnumeratedInfoSet& set,
                                     const std::vector<SecretToken>& universe,
                                     bool consistent_only) {
    const std::vector<SecretToken>& pool = consistent_only ? set.candidates() : universe;
    std::vector<ActionToken> actions;
    actions.reserve(pool.size());
    for (SecretToken s : pool) actions.push_back(ActionToken{s.value});
    return actions;
}

}  // namespace

Mastermind::Mastermind(int pegs, int colors, bool consistent_guesses_only)
    : pegs_(pegs), colors_(colors), consistent_only_(consistent_guesses_only) {
    validate_scale(pegs, colors, "mastermind");
    universe_ = full_universe(pegs, colors);
}

std::string Mastermind::scale_id() const {
    return std::to_string(pegs_) + "x" + std::to_string(colors_);
}

std::vector<ActionToken> Mastermind::legal_actions(const EnumeratedInfoSet& set, int) const {
    return guess_space(set, universe_, consistent_only_);
}

ObservationToken Mastermind::oracle(SecretToken secret, ActionToken action) const {
    check_code(action.value, pegs_, colors_, "guess");
    const int black = black_pegs(secret.value, action.value, pegs_, colors_);
    const int white = white_pegs(secret.value, action.value, pegs_, colors_, black);
    return ObservationToken{static_cast<std::uint64_t>(black * (pegs_ + 1) + white)};
}

bool Mastermind::declaration_success(ActionToken, ObservationToken obs) const {
    // All-black feedback: black == pegs, white == 0.
    return obs.value == static_cast<std::uint64_t>(pegs_ * (pegs_ + 1));
}

std::optional<SecretToken> Mastermind::action_as_declaration(ActionToken action) const {
    return SecretToken{action.value};
}

std::string Mastermind::format_secret(SecretToken secret) const {
    return format_code(secret.value, pegs_, colors_);
}

std::string Mastermind::format_action(ActionToken action) const {
    return format_code(action.value, pegs_, colors_);
}

std::string Mastermind::format_observation(ObservationToken obs) const {
    const auto black = obs.value / (pegs_ + 1);
    const auto white = obs.value % (pegs_ + 1);
    return std::to_string(black) + "b" + std::to_string(white) + "w";
}

SimpleMastermind::SimpleMastermind(int pegs, int colors, bool consistent_guesses_only)
    : pegs_(pegs), colors_(colors), consistent_only_(consistent_guesses_only) {
    validate_scale(pegs, colors, "simple_mastermind");
    universe_ = full_universe(pegs, colors);
}

std::string SimpleMastermind::scale_id() const {
    return std::to_string(pegs_) + "x" + std::to_string(colors_);
}

std::vector<ActionToken> SimpleMastermind::legal_actions(const EnumeratedInfoSet& set, int) const {
    return guess_space(set, universe_, consistent_only_);
}

ObservationToken SimpleMastermind::oracle(SecretToken secret, ActionToken action) const {
    check_code(action.value, pegs_, colors_, "guess");
    const int black = black_pegs(secret.value, action.value, pegs_, colors_);
    return ObservationToken{static_cast<std::uint64_t>(black)};
}

bool SimpleMastermind::declaration_success(ActionToken, ObservationToken obs) const {
    return obs.value == static_cast<std::uint64_t>(pegs_);
}

std::optional<SecretToken> SimpleMastermind::action_as_declaration(ActionToken action) const {
    return SecretToken{action.value};
}

std::string SimpleMastermind::format_secret(SecretToken secret) const {
    return format_code(secret.value, pegs_, colors_);
}

std::string SimpleMastermind::format_action(ActionToken action) const {
    return format_code(action.value, pegs_, colors_);
}

std::string SimpleMastermind::format_observation(ObservationToken obs) const {
    return std::to_string(obs.value) + "b";
}

std::vector<int> Mastermind::decode(std::uint64_t code, int pegs, int colors) {
    std::vector<int> digits(pegs);
    for (int i = 0; i < pegs; ++i) {
        digits[i] = static_cast<int>(code % colors);
        code /= colors;
    }
    return digits;
}

std::uint64_t Mastermind::encode(const std::vector<int>& digits, int colors) {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        code = code * colors + static_cast<std::uint64_t>(digits[i]);
    }
    return code;
}

}  // namespace deduction::games
