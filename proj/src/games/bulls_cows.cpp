#include "deduction/games/bulls_cows.hpp"

#include <bit>

#include "deduction/errors.hpp"

namespace deduction::games {

namespace {

constexpr int kMaxAlphabet = 10;

std::vector<int> decode(std::uint64_t code, int digits, int alphabet) {
    std::vector<int> out(digits);
    for (int i = 0; i < digits; ++i) {
        out[i] = static_cast<int>(code % alphabet);
        code /= alphabet;
    }
    return out;
}

// Presence mask plus distinctness check in one sweep.
std::uint32_t presence_mask(std::uint64_t code, int digits, int alphabet, bool* distinct) {
    std::uint32_t mask = 0;
    *distinct = true;
    for (int i = 0; i < digits; ++i) {
        const std::uint32_t bit = 1u << (code % alphabet);
        if (mask & bit) *distinct = false;
        mask |= bit;
        code /= alphabet;
    }
    return mask;
}

void gen_codes(int digits, int alphabet, std::uint32_t used, int depth, std::uint64_t prefix,
               std::uint64_t place, std::vector<SecretToken>* out) {
    if (depth == digits) {
        out->push_back(SecretToken{prefix});
        return;
    }
    for (int sym = 0; sym < alphabet; ++sym) {
        const std::uint32_t bit = 1u << sym;
        if (used & bit) continue;
        gen_codes(digits, alphabet, used | bit, depth + 1, prefix + sym * place,
                  place * alphabet, out);
    }
}

}  // namespace

BullsCows::BullsCows(int digits, int alphabet, bool consistent_guesses_only)
    : digits_(digits), alphabet_(alphabet), consistent_only_(consistent_guesses_only) {
    if (alphabet < 2 || alphabet > kMaxAlphabet) {
        throw ContractViolation("bulls_cows: alphabet must be in [2, 10]");
    }
    if (digits < 1 || digits > alphabet) {
        throw ContractViolation("bulls_cows: digits must be in [1, alphabet]");
    }
    // Depth-first by position gives lexicographic order over sequences.
    gen_codes(digits, alphabet, 0, 0, 0, 1, &universe_);
}

std::string BullsCows::scale_id() const {
    return std::to_string(digits_) + "x" + std::to_string(alphabet_);
}

std::vector<ActionToken> BullsCows::legal_actions(const EnumeratedInfoSet& set, int) const {
    const std::vector<SecretToken>& pool = consistent_only_ ? set.candidates() : universe_;
    std::vector<ActionToken> guesses;
    guesses.reserve(pool.size());
    for (SecretToken s : pool) guesses.push_back(ActionToken{s.value});
    return guesses;
}

ObservationToken BullsCows::oracle(SecretToken secret, ActionToken action) const {
    bool distinct = false;
    const std::uint32_t gmask = presence_mask(action.value, digits_, alphabet_, &distinct);
    std::uint64_t limit = 1;
    for (int i = 0; i < digits_; ++i) limit *= static_cast<std::uint64_t>(alphabet_);
    if (action.value >= limit || !distinct) {
        throw InvalidAction("bulls_cows: guess must be " + std::to_string(digits_) +
                            " distinct symbols below " + std::to_string(alphabet_));
    }
    bool sd = false;
    const std::uint32_t smask = presence_mask(secret.value, digits_, alphabet_, &sd);
    int bulls = 0;
    std::uint64_t s = secret.value;
    std::uint64_t g = action.value;
    for (int i = 0; i < digits_; ++i) {
        if (s % alphabet_ == g % alphabet_) ++bulls;
        s /= alphabet_;
        g /= alphabet_;
    }
    const int shared = std::popcount(smask & gmask);
    const int cows = shared - bulls;
    return ObservationToken{static_cast<std::uint64_t>(bulls * (digits_ + 1) + cows)};
}

bool BullsCows::declaration_success(ActionToken, ObservationToken obs) const {
    return obs.value == static_cast<std::uint64_t>(digits_ * (digits_ + 1));
}

std::optional<SecretToken> BullsCows::action_as_declaration(ActionToken action) const {
    return SecretToken{action.value};
}

std::string BullsCows::format_secret(SecretToken secret) const {
    std::string out;
    for (int d : decode(secret.value, digits_, alphabet_)) out += std::to_string(d);
    return out;
}

std::string BullsCows::format_action(ActionToken action) const {
    return format_secret(SecretToken{action.value});
}

std::string BullsCows::format_observation(ObservationToken obs) const {
    const auto bulls = obs.value / (digits_ + 1);
    const auto cows = obs.value % (digits_ + 1);
    return std::to_string(bulls) + "b" + std::to_string(cows) + "c";
}

}  // namespace deduction::games
