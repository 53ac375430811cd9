#include "ultragraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ultragraph {

Graph::Graph(std::vector<std::string> ids, std::vector<Edge> edges)
    : ids_(std::move(ids)), edges_(std::move(edges)) {
    if (ids_.empty()) {
        throw PreconditionError("graph must have at least one vertex");
    }
    const std::size_t n = ids_.size();
    index_.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!index_.emplace(ids_[v], v).second) {
            throw PreconditionError("duplicate vertex id " + ids_[v]);
        }
    }
    adjacency_.resize(n);
    incident_edges_.resize(n);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto [u, v] = edges_[i];
        if (u >= n || v >= n) {
            throw PreconditionError("edge endpoint out of range");
        }
        if (u == v) {
            throw PreconditionError("self-loop at " + ids_[u]);
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
        incident_edges_[u].push_back(i);
        incident_edges_[v].push_back(i);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& nbrs = adjacency_[v];
        auto& inc = incident_edges_[v];
        std::vector<std::size_t> order(nbrs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nbrs[a] < nbrs[b]; });
        std::vector<VertexId> sorted_nbrs;
        std::vector<std::size_t> sorted_inc;
        sorted_nbrs.reserve(order.size());
        sorted_inc.reserve(order.size());
        for (std::size_t k : order) {
            if (!sorted_nbrs.empty() && sorted_nbrs.back() == nbrs[k]) {
                throw PreconditionError("duplicate edge " + ids_[v] + " " + ids_[nbrs[k]]);
            }
            sorted_nbrs.push_back(nbrs[k]);
            sorted_inc.push_back(inc[k]);
        }
        nbrs = std::move(sorted_nbrs);
        inc = std::move(sorted_inc);
    }
}

Graph Graph::with_numbered_vertices(std::size_t n, std::vector<Edge> edges) {
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        ids.push_back(std::to_string(i));
    }
    return Graph(std::move(ids), std::move(edges));
}

std::optional<VertexId> Graph::find(std::string_view id) const {
    if (auto it = index_.find(std::string(id)); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<std::size_t> Graph::edge_index(VertexId a, VertexId b) const {
    if (a >= vertex_count() || b >= vertex_count()) {
        return std::nullopt;
    }
    const auto& nbrs = adjacency_[a];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b) {
        return std::nullopt;
    }
    return incident_edges_[a][static_cast<std::size_t>(it - nbrs.begin())];
}

LabeledGraph::LabeledGraph(Graph graph, std::vector<Rational> labels)
    : LabeledGraph(std::make_shared<const Graph>(std::move(graph)), std::move(labels)) {}

LabeledGraph::LabeledGraph(std::shared_ptr<const Graph> graph, std::vector<Rational> labels)
    : graph_(std::move(graph)), labels_(std::move(labels)) {
    if (!graph_) {
        throw PreconditionError("labeled graph needs a graph");
    }
    if (labels_.size() != graph_->vertex_count()) {
        throw PreconditionError("label count does not match vertex count");
    }
    for (VertexId v = 0; v < labels_.size(); ++v) {
        if (labels_[v].sign() < 0) {
            throw PreconditionError("negative label on " + graph_->id(v));
        }
    }
}

namespace {

// Breadth-first order from root; parent_edge[v] is the tree edge that reached v.
struct BfsResult {
    std::vector<char> reached;
    std::vector<std::optional<std::size_t>> parent_edge;
    std::vector<std::size_t> depth;
};

BfsResult bfs(const Graph& g, VertexId root) {
    const std::size_t n = g.vertex_count();
    BfsResult r{std::vector<char>(n, 0), std::vector<std::optional<std::size_t>>(n), std::vector<std::size_t>(n, 0)};
    std::queue<VertexId> queue;
    queue.push(root);
    r.reached[root] = 1;
    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop();
        for (VertexId w : g.neighbors(u)) {
            if (!r.reached[w]) {
                r.reached[w] = 1;
                r.parent_edge[w] = g.edge_index(u, w);
                r.depth[w] = r.depth[u] + 1;
                queue.push(w);
            }
        }
    }
    return r;
}

void check_vertex(const Graph& g, VertexId v) {
    if (v >= g.vertex_count()) {
        throw PreconditionError("unknown vertex index " + std::to_string(v));
    }
}

}  // namespace

bool is_connected(const Graph& g) {
    const auto r = bfs(g, 0);
    return std::all_of(r.reached.begin(), r.reached.end(), [](char c) { return c != 0; });
}

void require_connected(const Graph& g) {
    const auto r = bfs(g, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!r.reached[v]) {
            throw DisconnectedError(g.id(0), g.id(v));
        }
    }
}

bool is_tree(const Graph& g) {
    require_connected(g);
    return g.vertex_count() == g.edge_count() + 1;
}

Graph spanning_tree(const Graph& g) { return spanning_tree(g, 0); }

Graph spanning_tree(const Graph& g, VertexId root) {
    check_vertex(g, root);
    require_connected(g);
    const auto r = bfs(g, root);
    std::vector<char> keep(g.edge_count(), 0);
    for (const auto& e : r.parent_edge) {
        if (e) {
            keep[*e] = 1;
        }
    }
    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() - 1);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (keep[i]) {
            edges.push_back(g.edge(i));
        }
    }
    return g.with_edges(std::move(edges));
}

LabeledGraph spanning_tree(const LabeledGraph& g) {
    return LabeledGraph(spanning_tree(g.graph()), std::vector<Rational>(g.labels().begin(), g.labels().end()));
}

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> deg(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        deg[v] = g.degree(v);
    }
    return deg;
}

bool degree_sum_identity(const Graph& g) {
    const auto deg = degrees(g);
    const std::size_t sum = std::accumulate(deg.begin(), deg.end(), std::size_t{0});
    return 2 * g.edge_count() == sum;
}

namespace detail {

void check_path_endpoints(const Graph& g, VertexId x, VertexId y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) {
        throw PreconditionError("path endpoints must be distinct");
    }
}

}  // namespace detail

std::vector<Path> enumerate_simple_paths(const Graph& g, VertexId x, VertexId y) {
    std::vector<Path> paths;
    for_each_simple_path(g, x, y, [&](std::span<const VertexId> p) { paths.emplace_back(p.begin(), p.end()); });
    return paths;
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap) {
        throw CapExceededError("cycle enumeration capped at " + std::to_string(cap) + " vertices, graph has " +
                               std::to_string(n));
    }
    std::vector<Cycle> cycles;
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;

    // Depth-first extension through vertices larger than the start; closing
    // edges back to the start yield each cycle twice (once per direction),
    // and the second < last rule keeps one.
    auto extend = [&](auto&& self, VertexId start) -> void {
        const VertexId tip = path.back();
        for (VertexId w : g.neighbors(tip)) {
            if (w == start && path.size() >= 3 && path[1] < tip) {
                cycles.push_back(Cycle{path});
            } else if (w > start && !on_path[w]) {
                on_path[w] = 1;
                path.push_back(w);
                self(self, start);
                path.pop_back();
                on_path[w] = 0;
            }
        }
    };
    for (VertexId s = 0; s < n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }
    return cycles;
}

Graph tree_from_pruefer(std::size_t n, std::span<const VertexId> sequence) {
    if (n == 0) {
        throw PreconditionError("tree needs at least one vertex");
    }
    if (n == 1) {
        return Graph::with_numbered_vertices(1, {});
    }
    if (sequence.size() != n - 2) {
        throw PreconditionError("Prüfer sequence must have length n - 2");
    }
    std::vector<std::size_t> degree(n, 1);
    for (VertexId a : sequence) {
        if (a >= n) {
            throw PreconditionError("Prüfer entry out of range");
        }
        ++degree[a];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (VertexId a : sequence) {
        VertexId leaf = 0;
        while (degree[leaf] != 1) {
            ++leaf;
        }
        edges.push_back({leaf, a});
        --degree[leaf];
        --degree[a];
    }
    VertexId u = n;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] == 1) {
            if (u == n) {
                u = v;
            } else {
                edges.push_back({u, v});
                break;
            }
        }
    }
    return Graph::with_numbered_vertices(n, std::move(edges));
}

std::vector<Graph> enumerate_trees(std::size_t n, std::size_t cap) {
    if (n == 0) {
        throw PreconditionError("tree enumeration needs n >= 1");
    }
    if (n > cap) {
        throw CapExceededError("tree enumeration capped at " + std::to_string(cap) + " vertices");
    }
    std::vector<Graph> trees;
    if (n <= 2) {
        trees.push_back(tree_from_pruefer(n, {}));
        return trees;
    }
    std::vector<VertexId> seq(n - 2, 0);
    while (true) {
        trees.push_back(tree_from_pruefer(n, seq));
        std::size_t k = seq.size();
        while (k > 0 && seq[k - 1] == n - 1) {
            seq[--k] = 0;
        }
        if (k == 0) {
            break;
        }
        ++seq[k - 1];
    }
    return trees;
}

std::vector<std::size_t> root_levels(const Graph& tree, VertexId root) {
    check_vertex(tree, root);
    if (!is_connected(tree) || tree.vertex_count() != tree.edge_count() + 1) {
        throw PreconditionError("root_levels requires a tree");
    }
    return bfs(tree, root).depth;
}

}  // namespace ultragraph
