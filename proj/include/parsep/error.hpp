#pragma once

#include <stdexcept>
#include <string>

namespace parsep {

// Malformed textual input (bad token, bad exponent).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested work exceeds a configured size limit (e.g. enumeration cutoff).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A case formula produced something that is not a valid image. Raised by the
// injection module so the verifier can record it instead of crashing.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace parsep
