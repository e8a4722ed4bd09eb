#pragma once

#include <stdexcept>
#include <string>

namespace ndlrs {

// Precondition / domain failure (invalid witness, mismatched contexts, ...).
// The CLI maps this to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON, scalar strings, index lists).
// The CLI maps this to exit code 3.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ndlrs
