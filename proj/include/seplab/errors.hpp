// errors.hpp -- exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace seplab {

// Malformed or inconsistent caller input (unknown state, alphabet mismatch, ...).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not conform to one of the file formats.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// A configured resource cap was exceeded (e.g. FLC state-set tabulation).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace seplab
