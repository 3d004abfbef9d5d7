#pragma once

#include <stdexcept>

namespace ppa {

// Malformed input text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ppa
