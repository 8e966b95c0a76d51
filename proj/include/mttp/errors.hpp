#pragma once

#include <stdexcept>
#include <string>

namespace mttp {

// Malformed input text (bad token, wrong token count).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally impossible problem parameters (odd n, n too small, bad k).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input violating a data invariant (asymmetry, negative entry).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mttp
