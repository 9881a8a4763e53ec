#pragma once

#include <stdexcept>
#include <string>

namespace coindet {

/* Base of all library errors. `code` is the stable machine-readable tag the
 * CLI puts into reports; `what()` is the human-readable message. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/* Violation of an interface contract (dimension mismatch, bad index). */
class ContractError : public Error {
public:
    using Error::Error;
};

/* The input is well-formed but the requested computation does not apply to
 * it (bracket undefined, degree unavailable, enumeration cap exceeded).
 * Surfaced by the CLI as a refusal, not a crash. */
class Refusal : public Error {
public:
    using Error::Error;
};

/* Malformed presentation or polynomial text; positions are 1-based. */
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error("parse_error",
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace coindet
