#pragma once

#include <stdexcept>
#include <string>

namespace maxminsep {

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Graph or witness text could not be read.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An exhaustive routine refused an instance above its size guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace maxminsep
