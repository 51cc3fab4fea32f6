#ifndef BOROK_ERRORS_HPP
#define BOROK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borok {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pivot of a shifted or dense solve fell below the singularity tolerance.
// Step drivers treat this as a step rejection.
struct SingularSystem : Error {
    using Error::Error;
};

// The row space of a least-squares system is numerically rank deficient;
// the caller skips the offending extension column.
struct RankDeficient : Error {
    using Error::Error;
};

struct NonFiniteState : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct StepsizeUnderflow : Error {
    using Error::Error;
};

struct MaxStepsExceeded : Error {
    using Error::Error;
};

struct ReferenceUnavailable : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace borok

#endif
