#pragma once

#include <stdexcept>
#include <string>

namespace modhom {

// Input file could not be parsed. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A search exceeded its node or homomorphism budget.
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph too large for exhaustive automorphism enumeration.
class TooLargeError : public std::runtime_error {
public:
    explicit TooLargeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input is outside the classified class (disconnected, not square-free, ...).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace modhom
