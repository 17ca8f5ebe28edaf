#pragma once

#include <stdexcept>
#include <string>

namespace evidfuse {

// Bad inputs: malformed frames or masses, mismatched arguments, broken files.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Dempster normalization impossible: all joint mass fell on the empty set.
struct TotalConflictError : std::runtime_error {
    explicit TotalConflictError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evidfuse
