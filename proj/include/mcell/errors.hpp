#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcell {

// Malformed input text; position is a 0-based offset into the source string.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Operation applied to a constructor outside its contract (extended forms in
// input position, nonabelian input to an abelian-only operation, ...).
struct UnsupportedConstructor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated operation precondition (bounds, exhausted telescopes, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mcell
