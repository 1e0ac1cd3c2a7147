#pragma once

#include <stdexcept>
#include <string>

namespace ctxw {

/// Malformed or out-of-contract caller input (bad vertex, bad file, bad flag).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A well-formed request this library has no construction for.
class UnsupportedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A mathematical precondition that was checked and found false.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ctxw
