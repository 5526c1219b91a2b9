#pragma once

#include <stdexcept>
#include <string>

namespace deduction {

// A caller broke an operation's precondition.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// An action is malformed for the game at hand.
struct InvalidAction : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A belief update would eliminate every candidate. The referee is
// truthful, so this always indicates a bug upstream (wrong game, foreign
// observation, or a secret outside the universe).
struct InconsistentUpdate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probability table failed validation (negative mass or mass that does
// not sum to one within tolerance).
struct InvalidDistribution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An analysis routine refused to enumerate a space above its cap.
struct EnumerationCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A benchmark configuration is malformed or internally inconsistent.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An episode batch mixed records that must not be aggregated together.
struct InvalidBatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace deduction
