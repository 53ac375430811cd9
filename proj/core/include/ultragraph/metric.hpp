#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ultragraph/graph.hpp"
#include "ultragraph/rational.hpp"

namespace ultragraph {

inline constexpr std::size_t default_oracle_cap = 9;

/// Graph with a non-negative exact weight on every edge (indexed like edges()).
class WeightedGraph {
public:
    WeightedGraph(Graph graph, std::vector<Rational> weights);
    WeightedGraph(std::shared_ptr<const Graph> graph, std::vector<Rational> weights);

    const Graph& graph() const noexcept { return *graph_; }
    std::span<const Rational> weights() const noexcept { return weights_; }
    const Rational& weight(std::size_t edge) const { return weights_.at(edge); }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Rational> weights_;
};

/// Symmetric matrix of exact non-negative distances with zero diagonal.
///
/// Entries are stored as indices into the sorted table of distinct values
/// that actually occur, so levels()[0] is always 0 and comparing two
/// entries is comparing two small integers.
class DistanceMatrix {
public:
    using Level = std::uint32_t;

    /// Throws PreconditionError unless rows form a square, symmetric,
    /// non-negative matrix with zero diagonal matching ids.
    static DistanceMatrix from_rows(std::vector<std::string> ids, const std::vector<std::vector<Rational>>& rows);

    /// `entries` is row-major n*n, each an index into `values` (any order,
    /// duplicates allowed). Validated like from_rows.
    DistanceMatrix(std::vector<std::string> ids, std::vector<Rational> values, std::vector<Level> entries);

    std::size_t size() const noexcept { return ids_.size(); }
    std::span<const std::string> ids() const noexcept { return ids_; }
    const std::string& id(std::size_t i) const { return ids_.at(i); }

    const Rational& at(std::size_t i, std::size_t j) const { return levels_[level(i, j)]; }
    Level level(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

    /// Sorted distinct values present in the matrix; the distance set.
    std::span<const Rational> levels() const noexcept { return levels_; }

    /// d(x,y) <= max(d(x,z), d(z,y)) for every triple.
    bool satisfies_strong_triangle() const;

    bool has_zero_off_diagonal() const;

    /// Sub-matrix on the given vertices, in the given order.
    DistanceMatrix restricted(std::span<const std::size_t> keep) const;

    friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b);

private:
    std::vector<std::string> ids_;
    std::vector<Rational> levels_;
    std::vector<Level> entries_;
};

enum class MetricClass { ultrametric, pseudoultrametric_only };

std::string_view to_string(MetricClass c);

/// w({u,v}) = max(l(u), l(v)) for every edge.
WeightedGraph edge_weights(const LabeledGraph& g);

/// All-pairs minimum over paths of the maximum edge weight, by a sorted-edge
/// union-find sweep. Equal weights are taken in edge declaration order.
/// Throws DisconnectedError.
DistanceMatrix minimax_distances(const WeightedGraph& wg);

/// The pseudoultrametric generated by the labeling: minimax over the
/// label-induced edge weights. Throws DisconnectedError.
DistanceMatrix distance_matrix(const LabeledGraph& g);

/// Literal evaluation: min over every simple x-y path of the largest label
/// on it. Exponential; refuses graphs above `cap` vertices.
Rational distance_oracle(const LabeledGraph& g, VertexId x, VertexId y, std::size_t cap = default_oracle_cap);

/// distance_oracle for every pair.
DistanceMatrix oracle_distance_matrix(const LabeledGraph& g, std::size_t cap = default_oracle_cap);

/// max(l(u), l(v)) for an edge {u,v}; throws PreconditionError if not an edge.
Rational adjacent_distance(const LabeledGraph& g, VertexId u, VertexId v);

/// Every edge has an endpoint with positive label.
bool is_nondegenerate(const LabeledGraph& g);

/// ultrametric iff all off-diagonal entries are positive. Throws
/// SelfCheckError if the strong triangle inequality fails anywhere.
MetricClass classify_metric(const DistanceMatrix& dm);

struct ZeroQuotient {
    /// Earliest vertex of each d = 0 class, in vertex order.
    std::vector<std::size_t> representatives;
    /// Position in `representatives` of each original vertex's class.
    std::vector<std::size_t> class_of;
    DistanceMatrix matrix;
};

/// Collapses the classes of d = 0. Throws SelfCheckError if the input is
/// not a pseudoultrametric (the relation would not be transitive).
ZeroQuotient zero_quotient(const DistanceMatrix& dm);

struct RealizabilityVerdict {
    bool realizable = true;
    /// First edge (declaration order) whose minimax distance undercuts its weight.
    std::optional<std::size_t> witness_edge;
    std::optional<Rational> witness_minimax;
};

/// True iff the minimax distance of every edge equals its weight.
/// Throws DisconnectedError.
RealizabilityVerdict is_weight_realizable(const WeightedGraph& wg);

}  // namespace ultragraph
