#pragma once

#include <stdexcept>

namespace cpta {

// Invalid input (bad JSON, schema violation, parameter out of bounds).
// CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem trouble (unreadable input, failed write). CLI exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A resource guard would be exceeded (table or matrix too large). Guards
// never truncate silently. CLI exit code 3.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cpta
