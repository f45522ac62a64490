#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gasprint {

/// Raised when an input violates a domain invariant (negative price, shares
/// that do not sum to one, a closed form evaluated outside its domain, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by readers when a document is syntactically malformed or does not
/// match the expected schema. Line numbers are 1-based; 0 means "not tied to
/// a line".
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gasprint
