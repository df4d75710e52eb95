#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclodiv {

// Input does not satisfy an operation's precondition (non-monic divisor,
// composite modulus, negative coefficient, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation hit its factoring or search budget before it could decide.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed. This always indicates a bug or a
// counterexample to a theorem the library relies on.
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cyclodiv
