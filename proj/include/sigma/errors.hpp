#ifndef SIGMA_ERRORS_HPP
#define SIGMA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigma {

// Base for all domain errors so callers can catch one type at the CLI
// boundary and map to an exit code.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// A query exceeded the sieve bound; carries an estimate of the bound that
// would satisfy it.
class NeedsLargerSieve : public Error {
public:
    NeedsLargerSieve(const std::string& msg, std::uint64_t required)
        : Error(msg + " (required bound ~" + std::to_string(required) + ")"),
          required_bound(required) {}
    std::uint64_t required_bound;
};

// zeta / tail operations need r > 1.
class DivergentInput : public Error {
public:
    explicit DivergentInput(const std::string& msg) : Error(msg) {}
};

class IndeterminateDivision : public Error {
public:
    explicit IndeterminateDivision(const std::string& msg) : Error(msg) {}
};

// A certified comparison stayed undecided at maximum refinement; the input
// sits too close to a threshold r_p (or to an exact endpoint tie).
class ThresholdProximity : public Error {
public:
    ThresholdProximity(const std::string& msg, std::uint64_t prime)
        : Error(msg), offending_prime(prime) {}
    std::uint64_t offending_prime;
};

class IncompleteEnumeration : public Error {
public:
    explicit IncompleteEnumeration(const std::string& msg) : Error(msg) {}
};

class BracketFailure : public Error {
public:
    explicit BracketFailure(const std::string& msg) : Error(msg) {}
};

class UndecidedSign : public Error {
public:
    explicit UndecidedSign(const std::string& msg) : Error(msg) {}
};

// A certified result contradicts a theorem; this indicates an implementation
// bug, never a disproof.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace sigma

#endif
