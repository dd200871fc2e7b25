#pragma once

#include <stdexcept>
#include <string>

namespace posetcoh {

/// Malformed or inconsistent user input (documents, literals, flags).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace posetcoh
