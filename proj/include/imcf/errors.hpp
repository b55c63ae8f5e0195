#pragma once

#include <stdexcept>
#include <string>

namespace imcf {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointOutsideChart : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};

struct DegenerateSlice : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

/// Non-finite value produced while evaluating geometry; carries the node index.
struct NonFiniteGeometry : Error {
    int node = -1;
    explicit NonFiniteGeometry(const std::string& what, int node_index)
        : Error(what), node(node_index) {}
};

struct ModeUnsupported : Error {
    using Error::Error;
};

struct SpeedBlowup : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace imcf
