#pragma once

#include <stdexcept>
#include <string>

namespace fw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside the mathematical domain of the operation
struct DomainError : Error {
    using Error::Error;
};

// a numerical evaluator could not certify its accuracy target
struct AccuracyError : Error {
    using Error::Error;
};

struct QuadratureError : Error {
    using Error::Error;
};

// truncation bound of a Levy-measure integral exceeded the tolerance
struct TailError : Error {
    using Error::Error;
};

struct SeedError : Error {
    using Error::Error;
};

struct UsageError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace fw
