#pragma once

#include <stdexcept>
#include <string>

namespace csurg {

/// Input outside an operation's domain: bad coefficients, malformed files,
/// inapplicable moves. The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Text that does not follow one of the line formats.
class ParseError : public DomainError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                      ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A structural guarantee failed (odd Γ vector, lost characteristic
/// condition, Γ/d3 parity mismatch on RP³). The CLI maps these to exit code 3.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace csurg
