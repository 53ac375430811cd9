#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ultragraph/errors.hpp"
#include "ultragraph/rational.hpp"

namespace ultragraph {

/// Index of a vertex in declaration order.
using VertexId = std::size_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline constexpr std::size_t default_cycle_cap = 10;
inline constexpr std::size_t default_tree_cap = 8;

/// Finite simple undirected graph. Vertex order is declaration order and
/// drives every tie-break in the library.
class Graph {
public:
    /// Throws PreconditionError on an empty vertex list, a duplicate id,
    /// an out-of-range endpoint, a self-loop or a duplicate edge.
    Graph(std::vector<std::string> ids, std::vector<Edge> edges);

    /// Vertices named "1".."n".
    static Graph with_numbered_vertices(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& id(VertexId v) const { return ids_.at(v); }
    std::span<const std::string> ids() const noexcept { return ids_; }
    std::optional<VertexId> find(std::string_view id) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t index) const { return edges_.at(index); }

    /// Neighbors in ascending vertex order.
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    bool has_edge(VertexId a, VertexId b) const { return edge_index(a, b).has_value(); }
    std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

    /// Same vertices, different edge set.
    Graph with_edges(std::vector<Edge> edges) const { return Graph(ids_, std::move(edges)); }

private:
    std::vector<std::string> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<std::size_t>> incident_edges_;  // parallel to adjacency_
    std::unordered_map<std::string, VertexId> index_;
};

/// Graph with a non-negative exact label on every vertex. The topology is
/// immutable and shared between relabeled copies.
class LabeledGraph {
public:
    /// Throws PreconditionError when the label count mismatches or a label is negative.
    LabeledGraph(Graph graph, std::vector<Rational> labels);
    LabeledGraph(std::shared_ptr<const Graph> graph, std::vector<Rational> labels);

    const Graph& graph() const noexcept { return *graph_; }
    const std::shared_ptr<const Graph>& shared_graph() const noexcept { return graph_; }
    std::span<const Rational> labels() const noexcept { return labels_; }
    const Rational& label(VertexId v) const { return labels_.at(v); }

    std::size_t vertex_count() const noexcept { return graph_->vertex_count(); }
    std::size_t edge_count() const noexcept { return graph_->edge_count(); }

    LabeledGraph relabeled(std::vector<Rational> labels) const { return {graph_, std::move(labels)}; }

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Rational> labels_;
};

/// Vertex sequence v0..vk, k >= 1, consecutive pairs adjacent, all distinct.
using Path = std::vector<VertexId>;

/// Cycle in a normalized rotation: smallest vertex first, and the second
/// vertex smaller than the last one, so each cycle subgraph has one spelling.
struct Cycle {
    std::vector<VertexId> vertices;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_connected(const Graph& g);

/// Throws DisconnectedError naming the first vertex and the first vertex
/// (in declaration order) not reachable from it.
void require_connected(const Graph& g);

/// |V| = 1 + |E| on a connected graph. Throws DisconnectedError otherwise.
bool is_tree(const Graph& g);

/// Breadth-first spanning tree from vertex 0, neighbors scanned in vertex
/// order. Kept edges retain their original orientation and relative order.
Graph spanning_tree(const Graph& g);
LabeledGraph spanning_tree(const LabeledGraph& g);

/// As above but rooted at `root`.
Graph spanning_tree(const Graph& g, VertexId root);

std::vector<std::size_t> degrees(const Graph& g);

/// Handshake identity 2|E| = sum of degrees, evaluated from both sides.
bool degree_sum_identity(const Graph& g);

/// Visits every simple x-y path in lexicographic (vertex order) sequence.
/// The span handed to `visit` is only valid for the duration of the call.
template <typename Visitor>
void for_each_simple_path(const Graph& g, VertexId x, VertexId y, Visitor&& visit);

/// Every simple x-y path, in lexicographic order. Throws PreconditionError
/// when x == y or either vertex is unknown.
std::vector<Path> enumerate_simple_paths(const Graph& g, VertexId x, VertexId y);

/// Every cycle subgraph exactly once. Throws CapExceededError above `cap` vertices.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap = default_cycle_cap);

/// Decodes a Prüfer sequence of length n-2 over {0..n-1} into a tree on
/// vertices "1".."n". Edges come out in decoding order.
Graph tree_from_pruefer(std::size_t n, std::span<const VertexId> sequence);

/// All n^(n-2) labeled trees on "1".."n" (one tree for n = 1 and n = 2),
/// ordered by their Prüfer sequence.
std::vector<Graph> enumerate_trees(std::size_t n, std::size_t cap = default_tree_cap);

/// lev(root) = 0, lev(v) = edge count of the root-v path.
/// Throws PreconditionError on non-tree input or unknown root.
std::vector<std::size_t> root_levels(const Graph& tree, VertexId root);

// ---------------------------------------------------------------------------

namespace detail {
void check_path_endpoints(const Graph& g, VertexId x, VertexId y);
}

template <typename Visitor>
void for_each_simple_path(const Graph& g, VertexId x, VertexId y, Visitor&& visit) {
    detail::check_path_endpoints(g, x, y);
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path{x};
    std::vector<std::size_t> cursor{0};
    on_path[x] = 1;
    while (!path.empty()) {
        const VertexId tip = path.back();
        const auto nbrs = g.neighbors(tip);
        std::size_t& next = cursor.back();
        if (tip == y || next == nbrs.size()) {
            if (tip == y) {
                visit(std::span<const VertexId>(path));
            }
            on_path[tip] = 0;
            path.pop_back();
            cursor.pop_back();
            continue;
        }
        const VertexId w = nbrs[next++];
        if (!on_path[w]) {
            on_path[w] = 1;
            path.push_back(w);
            cursor.push_back(0);
        }
    }
}

}  // namespace ultragraph
