#pragma once

#include <stdexcept>
#include <string>

namespace qmr {

// Error taxonomy mirrors the CLI exit codes:
//   ParseError -> 1, PreconditionError -> 2, ExhaustedError -> 3,
//   VerifyError -> 4, InternalError -> 5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

// A named precondition failed. `condition` is a short machine-readable tag,
// the what() string carries the human-readable detail.
struct PreconditionError : Error {
    std::string condition;
    PreconditionError(std::string cond, const std::string& detail)
        : Error(cond + ": " + detail), condition(std::move(cond)) {}
};

struct ExhaustedError : Error {
    using Error::Error;
};

struct VerifyError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

} // namespace qmr
