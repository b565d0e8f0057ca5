#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace powfactor {

// Caller handed us something outside an operation's domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A case dispatch ran out of branches, or a local assembly found no valid
// completion. Always an internal error.
class GuardTrap : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class EngineBug : public std::runtime_error {
public:
    EngineBug(const std::string& what, std::vector<std::string> trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}

    const std::vector<std::string>& trace() const noexcept { return trace_; }

private:
    std::vector<std::string> trace_;
};

}  // namespace powfactor
