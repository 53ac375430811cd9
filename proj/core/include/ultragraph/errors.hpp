#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ultragraph {

enum class ParseErrorKind {
    syntax,
    duplicate_vertex,
    undeclared_endpoint,
    self_loop,
    duplicate_edge,
    malformed_label,
    negative_label,
    malformed_weight,
    negative_weight,
};

std::string_view to_string(ParseErrorKind kind);

/// Rejected graph document. `line` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// A caller broke an operation's precondition (unknown vertex, non-tree, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input graph is not connected; carries one vertex from each of two components.
class DisconnectedError : public PreconditionError {
public:
    DisconnectedError(std::string witness_a, std::string witness_b);

    const std::string& witness_a() const noexcept { return witness_a_; }
    const std::string& witness_b() const noexcept { return witness_b_; }

private:
    std::string witness_a_;
    std::string witness_b_;
};

/// An enumeration guard (vertex cap) was exceeded.
class CapExceededError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A result violated a property that must always hold. Always a bug.
class SelfCheckError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ultragraph
