#pragma once

#include <stdexcept>
#include <string>

namespace navone {

// Bad configuration: unknown keys, out-of-range parameters, malformed flags.
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Bad data: truncated files, header mismatches, invalid class ids, shape mismatches.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical or contract verification failed (gradient check, invariant probe).
struct VerifyError : std::runtime_error {
    explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace navone
