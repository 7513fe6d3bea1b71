#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seqalg {

// Every library failure mode carries a Kind so callers (and the CLI) can
// map errors to exit codes without string matching.
enum class ErrorKind {
    DivideByZero,
    NotWhole,
    NotReal,
    NonProductive,
    NonTerminatingComposition,
    NotConversible,
    NotASquareRootDomain,
    NotLogDomain,
    InfiniteInput,
    DimensionMismatch,
    DegenerateRecurrence,
    UnknownName,
    UnknownSuite,
    Domain,
    Syntax,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failure with a byte offset and what was expected at that point.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error(ErrorKind::Syntax,
                "syntax error at offset " + std::to_string(offset) +
                    ": expected " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

} // namespace seqalg
