#ifndef PSEMI_ERRORS_HPP
#define PSEMI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psemi {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unusable inputs: dimension mismatches, non-permutation
/// priorities, zero directions in P, violated operation preconditions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Requests that are impossible on otherwise well-formed data, e.g. a
/// Frobenius target outside the cone or an unbounded enumeration of a
/// class that is not known to be finite.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Problems with a job configuration file. Kept separate from the above
/// so the command line tool can map it to its own exit code.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace psemi

#endif
