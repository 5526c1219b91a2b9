#include "deduction/games/registry.hpp"

#include <charconv>
#include <map>

#include "deduction/errors.hpp"
#include "deduction/games/black_box.hpp"
#include "deduction/games/bulls_cows.hpp"
#include "deduction/games/fake_coin.hpp"
#include "deduction/games/low_middle_high.hpp"
#include "deduction/games/mastermind.hpp"
#include "deduction/games/treasure_hunt.hpp"
#include "deduction/games/wordle.hpp"

namespace deduction::games {

namespace {

int parse_int(std::string_view text, const std::string& context) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
        throw ConfigError(context + ": '" + std::string(text) + "' is not a positive integer");
    }
    return value;
}

// "AxB" and "AaB" style two-part scales.
std::pair<int, int> parse_pair(std::string_view scale, char sep, const std::string& context) {
    const auto pos = scale.find(sep);
    if (pos == std::string_view::npos) {
        throw ConfigError(context + ": scale '" + std::string(scale) + "' must look like '3" +
                          sep + "6'");
    }
    return {parse_int(scale.substr(0, pos), context),
            parse_int(scale.substr(pos + 1), context)};
}

template <typename T>
std::unique_ptr<GameDef> build(auto&&... args) {
    try {
        return std::make_unique<T>(std::forward<decltype(args)>(args)...);
    } catch (const ContractViolation& e) {
        throw ConfigError(e.what());
    }
}

const std::map<std::string, std::vector<std::string>>& desk_scale_table() {
    static const std::map<std::string, std::vector<std::string>> table = {
        {"mastermind", {"3x3", "4x6"}},
        {"simple_mastermind", {"3x3"}},
        {"fake_coin", {"4", "5", "6", "7", "8", "9"}},
        {"treasure_hunt", {"8", "16", "32"}},
        {"low_middle_high", {"15", "127"}},
        {"black_box", {"4a2"}},
        {"wordle", {"3"}},
        {"bulls_cows", {"3x6"}},
    };
    return table;
}

}  // namespace

std::unique_ptr<GameDef> make_game(const GameSpec& spec) {
    const std::string ctx = spec.name;
    if (spec.name != "wordle" && !spec.dictionary_path.empty()) {
        throw ConfigError(spec.name + ": a dictionary only applies to wordle");
    }
    if (spec.name == "mastermind") {
        const auto [pegs, colors] = parse_pair(spec.scale, 'x', ctx);
        return build<Mastermind>(pegs, colors, spec.consistent_guesses_only);
    }
    if (spec.name == "simple_mastermind") {
        const auto [pegs, colors] = parse_pair(spec.scale, 'x', ctx);
        return build<SimpleMastermind>(pegs, colors, spec.consistent_guesses_only);
    }
    const auto no_consistent_flag = [&] {
        if (spec.consistent_guesses_only) {
            throw ConfigError(spec.name + ": consistent_guesses_only is not supported here");
        }
    };
    if (spec.name == "fake_coin") {
        no_consistent_flag();
        return build<FakeCoin>(parse_int(spec.scale, ctx));
    }
    if (spec.name == "treasure_hunt") {
        no_consistent_flag();
        return build<TreasureHunt>(parse_int(spec.scale, ctx));
    }
    if (spec.name == "low_middle_high") {
        no_consistent_flag();
        return build<LowMiddleHigh>(parse_int(spec.scale, ctx));
    }
    if (spec.name == "black_box") {
        no_consistent_flag();
        const auto [grid, atoms] = parse_pair(spec.scale, 'a', ctx);
        return build<BlackBox>(grid, atoms);
    }
    if (spec.name == "wordle") {
        if (spec.dictionary_path.empty()) {
            throw ConfigError("wordle: a dictionary path is required");
        }
        const int length = parse_int(spec.scale, ctx);
        auto words = Wordle::load_dictionary(spec.dictionary_path);
        return build<Wordle>(length, std::move(words), spec.consistent_guesses_only);
    }
    if (spec.name == "bulls_cows") {
        const auto [digits, alphabet] = parse_pair(spec.scale, 'x', ctx);
        return build<BullsCows>(digits, alphabet, spec.consistent_guesses_only);
    }
    throw ConfigError("unknown game '" + spec.name + "'");
}

const std::vector<std::string>& known_games() {
    static const std::vector<std::string> names = {
        "mastermind", "simple_mastermind", "fake_coin",  "treasure_hunt",
        "low_middle_high", "black_box",    "wordle",     "bulls_cows",
    };
    return names;
}

const std::vector<std::string>& desk_scales(const std::string& game) {
    const auto& table = desk_scale_table();
    const auto it = table.find(game);
    if (it == table.end()) throw ConfigError("unknown game '" + game + "'");
    return it->second;
}

std::string smallest_desk_scale(const std::string& game) {
    return desk_scales(game).front();
}

}  // namespace deduction::games
