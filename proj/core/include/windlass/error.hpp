#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace windlass {

// Malformed or invalid term text.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownGenerator, ArityMismatch };

    ParseError(Kind kind, std::size_t position, const std::string& what)
        : std::runtime_error(what), kind_(kind), position_(position) {}

    Kind kind() const { return kind_; }
    std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

// An enumeration would exceed the configured element ceiling.
class CeilingExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A checked mathematical invariant failed; always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace windlass
