#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rba {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two brackets are adjacent at some nesting level; `position` is the index of
// the left offender within the item sequence being validated.
struct AdjacentBracketsError : Error {
    std::size_t position;
    explicit AdjacentBracketsError(std::size_t pos)
        : Error("adjacent brackets at item position " + std::to_string(pos)),
          position(pos) {}
};

struct EmptyWordError : Error {
    explicit EmptyWordError(const std::string& what_arg) : Error(what_arg) {}
};

// Antipode-related operations are defined only at weight zero.
struct WeightNotZeroError : Error {
    explicit WeightNotZeroError(const std::string& what_arg) : Error(what_arg) {}
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Malformed structured (JSON) input.
struct FormatError : Error {
    explicit FormatError(const std::string& what_arg) : Error(what_arg) {}
};

} // namespace rba
