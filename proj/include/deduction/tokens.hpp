#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace deduction {

// Opaque handle for one possible hidden configuration. The encoding is
// game-specific; equality means "same configuration".
struct SecretToken {
    std::uint64_t value = 0;
    friend constexpr auto operator<=>(const SecretToken&, const SecretToken&) = default;
};

// Opaque handle for a move a player may submit.
struct ActionToken {
    std::uint64_t value = 0;
    friend constexpr auto operator<=>(const ActionToken&, const ActionToken&) = default;
};

// Opaque handle for the referee's feedback to an action.
struct ObservationToken {
    std::uint64_t value = 0;
    friend constexpr auto operator<=>(const ObservationToken&, const ObservationToken&) = default;
};

}  // namespace deduction

template <>
struct std::hash<deduction::SecretToken> {
    std::size_t operator()(const deduction::SecretToken& t) const noexcept {
        return std::hash<std::uint64_t>{}(t.value);
    }
};

template <>
struct std::hash<deduction::ActionToken> {
    std::size_t operator()(const deduction::ActionToken& t) const noexcept {
        return std::hash<std::uint64_t>{}(t.value);
    }
};

template <>
struct std::hash<deduction::ObservationToken> {
    std::size_t operator()(const deduction::ObservationToken& t) const noexcept {
        return std::hash<std::uint64_t>{}(t.value);
    }
};
