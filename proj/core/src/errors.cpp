#include "ultragraph/errors.hpp"

namespace ultragraph {

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::syntax: return "syntax error";
        case ParseErrorKind::duplicate_vertex: return "duplicate vertex";
        case ParseErrorKind::undeclared_endpoint: return "undeclared endpoint";
        case ParseErrorKind::self_loop: return "self-loop";
        case ParseErrorKind::duplicate_edge: return "duplicate edge";
        case ParseErrorKind::malformed_label: return "malformed label";
        case ParseErrorKind::negative_label: return "negative label";
        case ParseErrorKind::malformed_weight: return "malformed weight";
        case ParseErrorKind::negative_weight: return "negative weight";
    }
    return "parse error";
}

namespace {

std::string describe(ParseErrorKind kind, std::size_t line, const std::string& detail) {
    std::string msg;
    if (line != 0) {
        msg = "line " + std::to_string(line) + ": ";
    }
    msg += to_string(kind);
    if (!detail.empty()) {
        msg += " ";
        msg += detail;
    }
    return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(describe(kind, line, detail)), kind_(kind), line_(line) {}

DisconnectedError::DisconnectedError(std::string witness_a, std::string witness_b)
    : PreconditionError("graph is disconnected: no path joins " + witness_a + " and " + witness_b),
      witness_a_(std::move(witness_a)),
      witness_b_(std::move(witness_b)) {}

}  // namespace ultragraph
