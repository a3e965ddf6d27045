#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace anyd {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// lattice too large for exhaustive enumeration
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

struct UnreachableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// pred field inconsistent (cycle, non-adjacent link, overlong trace)
struct CorruptionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace anyd
