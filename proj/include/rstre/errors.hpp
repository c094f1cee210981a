#pragma once
// Error types shared across modules.

#include <stdexcept>

namespace rstre {

// Input exceeds a documented size limit (enumeration, exact-rational modes).
struct SizeLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Spanning-tree operation on a disconnected graph.
struct NoSpanningTreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested quantity is undefined for the given input (e.g. no repeat seen).
struct NotApplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Configuration file / flag problems; message carries line or flag context.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File I/O failure; message carries the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rstre
