#ifndef HILBERT_ERRORS_HPP
#define HILBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbert {

/// Two operands live in rings of different arity.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size limit (enumeration cap,
/// lattice cap, vertex cap). Callers are expected to pick another method
/// or raise the cap.
class ResourceCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hilbert

#endif
