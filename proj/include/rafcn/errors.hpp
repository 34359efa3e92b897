#pragma once

#include <stdexcept>
#include <string>

namespace rafcn {

// Error taxonomy; the CLI maps these onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape/extent mismatches between tensors.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid configuration (bad stride, missing params for a mode, bad JSON).
struct ConfigError : Error {
    using Error::Error;
};

// Dataset/file problems (malformed rasters, missing splits, label range).
struct DataError : Error {
    using Error::Error;
};

// Non-finite values, degenerate batches, failed numeric checks.
struct NumericError : Error {
    using Error::Error;
};

// Misuse of an API contract (backward on non-scalar etc).
struct UsageError : Error {
    using Error::Error;
};

}  // namespace rafcn
