#pragma once

#include <stdexcept>
#include <string>

namespace vgr {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid graph construction (loop, repeated edge, vertex out of range, order cap).
class GraphError : public Error {
public:
    using Error::Error;
};

class DisconnectedGraph : public Error {
public:
    DisconnectedGraph() : Error("graph is disconnected") {}
};

/// A construction or operation was called outside its documented preconditions.
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

/// Checked integer arithmetic left the representable range.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

} // namespace vgr
