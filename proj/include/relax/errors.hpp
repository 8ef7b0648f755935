#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relax {

/// Malformed graph construction input (self-loop, out-of-range endpoint, duplicate edge).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidGamma : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotAForest : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A reduction was asked for with parameters outside the construction's preconditions.
class ReductionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a search exceeds its node/subset cap. Never swallowed into a "no".
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::string const& where, std::uint64_t budget)
        : std::runtime_error(where + ": budget of " + std::to_string(budget) + " nodes exceeded"),
          budget_(budget) {}

    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

/// A witness projected back through a reduction did not yield a clique.
/// This can only happen if a construction is unsound.
class SoundnessError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace relax
