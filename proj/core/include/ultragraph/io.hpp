#pragma once

#include <string>
#include <string_view>

#include "ultragraph/graph.hpp"
#include "ultragraph/metric.hpp"

namespace ultragraph {

/// Line-based graph document:
///
///     # comment
///     v <id> <label>        label: 7, 1.5, .5 or 3/2
///     e <id> <id>
///
/// Blank lines are ignored and `v` lines fix the vertex order. Edges may
/// name vertices declared further down. Throws ParseError.
LabeledGraph parse_graph(std::string_view text);

/// Weighted variant: `v <id> [label]` (any label is ignored) and
/// `e <id> <id> <weight>`. Throws ParseError.
WeightedGraph parse_weighted_graph(std::string_view text);

/// Inverse of parse_graph: `v` lines in vertex order, then `e` lines.
std::string format_graph(const LabeledGraph& g);

std::string format_weighted_graph(const WeightedGraph& g);

}  // namespace ultragraph
