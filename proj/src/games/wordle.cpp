#include "deduction/games/wordle.hpp"

#include <array>
#include <fstream>
#include <unordered_set>

#include "deduction/errors.hpp"

namespace deduction::games {

Wordle::Wordle(int length, std::vector<std::string> words, bool consistent_guesses_only)
    : length_(length), consistent_only_(consistent_guesses_only), words_(std::move(words)) {
    if (length < 2 || length > 16) {
        throw ContractViolation("wordle: word length must be in [2, 16]");
    }
    if (words_.empty()) throw ContractViolation("wordle: dictionary is empty");
    std::unordered_set<std::string> seen;
    for (const std::string& w : words_) {
        if (static_cast<int>(w.size()) != length) {
            throw ContractViolation("wordle: word '" + w + "' does not have length " +
                                    std::to_string(length));
        }
        for (char ch : w) {
            if (ch < 'a' || ch > 'z') {
                throw ContractViolation("wordle: word '" + w + "' is not lowercase a-z");
            }
        }
        if (!seen.insert(w).second) {
            throw ContractViolation("wordle: duplicate word '" + w + "'");
        }
    }
    universe_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        universe_.push_back(SecretToken{i});
    }
    all_green_ = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < length; ++i, place *= 3) all_green_ += kGreen * place;
}

std::vector<ActionToken> Wordle::legal_actions(const EnumeratedInfoSet& set, int) const {
    std::vector<ActionToken> guesses;
    if (consistent_only_) {
        guesses.reserve(set.size());
        for (SecretToken s : set.candidates()) guesses.push_back(ActionToken{s.value});
        return guesses;
    }
    guesses.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        guesses.push_back(ActionToken{i});
    }
    return guesses;
}

ObservationToken Wordle::oracle(SecretToken secret, ActionToken action) const {
    if (action.value >= words_.size()) {
        throw InvalidAction("wordle: guess index " + std::to_string(action.value) +
                            " is outside the dictionary of " + std::to_string(words_.size()) +
                            " words");
    }
    const std::string& s = words_[secret.value];
    const std::string& g = words_[action.value];
    // Pass 1: greens, and a tally of the secret's unmatched letters.
    std::array<int, 26> free_count{};
    std::vector<std::uint64_t> marks(length_, kGray);
    for (int i = 0; i < length_; ++i) {
        if (g[i] == s[i]) {
            marks[i] = kGreen;
        } else {
            ++free_count[s[i] - 'a'];
        }
    }
    // Pass 2: yellows, consuming the tally left to right.
    for (int i = 0; i < length_; ++i) {
        if (marks[i] == kGreen) continue;
        int& avail = free_count[g[i] - 'a'];
        if (avail > 0) {
            --avail;
            marks[i] = kYellow;
        }
    }
    std::uint64_t obs = 0;
    std::uint64_t place = 1;
    for (int i = 0; i < length_; ++i, place *= 3) obs += marks[i] * place;
    return ObservationToken{obs};
}

bool Wordle::declaration_success(ActionToken, ObservationToken obs) const {
    return obs.value == all_green_;
}

std::optional<SecretToken> Wordle::action_as_declaration(ActionToken action) const {
    return SecretToken{action.value};
}

std::string Wordle::format_secret(SecretToken secret) const {
    return words_.at(secret.value);
}

std::string Wordle::format_action(ActionToken action) const {
    return words_.at(action.value);
}

std::string Wordle::format_observation(ObservationToken obs) const {
    std::string out;
    std::uint64_t v = obs.value;
    for (int i = 0; i < length_; ++i, v /= 3) {
        switch (v % 3) {
            case kGray: out += '.'; break;
            case kYellow: out += 'y'; break;
            default: out += 'G'; break;
        }
    }
    return out;
}

std::vector<std::string> Wordle::load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("wordle: cannot open dictionary file '" + path + "'");
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                 line.back() == ' ' || line.back() == '\t')) {
            line.pop_back();
        }
        if (!line.empty()) words.push_back(line);
    }
    return words;
}

}  // namespace deduction::games
