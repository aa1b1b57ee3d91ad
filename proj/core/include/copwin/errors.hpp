#pragma once

#include <stdexcept>
#include <string>

namespace copwin {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected edge list: self-loop, duplicate edge, or endpoint out of range.
class GraphBuildError : public Error {
public:
    enum class Kind { SelfLoop, DuplicateEdge, VertexOutOfRange };

    GraphBuildError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// An operation that requires a connected graph was given a disconnected one.
class DisconnectedError : public Error {
public:
    using Error::Error;
};

/// Invalid parameter or violated precondition (guards included).
class ParamError : public Error {
public:
    using Error::Error;
};

/// Structurally malformed certificate / decomposition / strategy input.
class MalformedError : public Error {
public:
    using Error::Error;
};

/// Text input (edge list, graph6, CLI file) could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace copwin
