#include "ultragraph/metric.hpp"

#include <algorithm>
#include <numeric>

#include "ultragraph/union_find.hpp"

namespace ultragraph {

WeightedGraph::WeightedGraph(Graph graph, std::vector<Rational> weights)
    : WeightedGraph(std::make_shared<const Graph>(std::move(graph)), std::move(weights)) {}

WeightedGraph::WeightedGraph(std::shared_ptr<const Graph> graph, std::vector<Rational> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (!graph_) {
        throw PreconditionError("weighted graph needs a graph");
    }
    if (weights_.size() != graph_->edge_count()) {
        throw PreconditionError("weight count does not match edge count");
    }
    for (const auto& w : weights_) {
        if (w.sign() < 0) {
            throw PreconditionError("negative edge weight");
        }
    }
}

DistanceMatrix DistanceMatrix::from_rows(std::vector<std::string> ids, const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = ids.size();
    if (rows.size() != n) {
        throw PreconditionError("distance matrix row count does not match vertex count");
    }
    std::vector<Rational> values;
    std::vector<Level> entries;
    values.reserve(n * n);
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) {
            throw PreconditionError("distance matrix is not square");
        }
        for (const auto& x : row) {
            entries.push_back(static_cast<Level>(values.size()));
            values.push_back(x);
        }
    }
    return DistanceMatrix(std::move(ids), std::move(values), std::move(entries));
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> ids, std::vector<Rational> values, std::vector<Level> entries)
    : ids_(std::move(ids)), entries_(std::move(entries)) {
    const std::size_t n = ids_.size();
    if (n == 0) {
        throw PreconditionError("distance matrix needs at least one point");
    }
    if (entries_.size() != n * n) {
        throw PreconditionError("distance matrix entry count is not n*n");
    }
    std::vector<char> used(values.size(), 0);
    for (Level e : entries_) {
        if (e >= values.size()) {
            throw PreconditionError("distance matrix entry out of range");
        }
        used[e] = 1;
    }
    std::vector<Level> order;
    for (Level k = 0; k < values.size(); ++k) {
        if (used[k]) {
            if (values[k].sign() < 0) {
                throw PreconditionError("negative distance");
            }
            order.push_back(k);
        }
    }
    std::stable_sort(order.begin(), order.end(), [&](Level a, Level b) { return values[a] < values[b]; });
    std::vector<Level> remap(values.size(), 0);
    for (Level k : order) {
        if (levels_.empty() || levels_.back() != values[k]) {
            levels_.push_back(values[k]);
        }
        remap[k] = static_cast<Level>(levels_.size() - 1);
    }
    for (auto& e : entries_) {
        e = remap[e];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!levels_[level(i, i)].is_zero()) {
            throw PreconditionError("distance matrix diagonal must be zero");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (level(i, j) != level(j, i)) {
                throw PreconditionError("distance matrix is not symmetric");
            }
        }
    }
}

bool DistanceMatrix::satisfies_strong_triangle() const {
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
            const Level dxy = level(x, y);
            for (std::size_t z = 0; z < n; ++z) {
                if (dxy > std::max(level(x, z), level(z, y))) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool DistanceMatrix::has_zero_off_diagonal() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (level(i, j) == 0) {
                return true;
            }
        }
    }
    return false;
}

DistanceMatrix DistanceMatrix::restricted(std::span<const std::size_t> keep) const {
    std::vector<std::string> ids;
    ids.reserve(keep.size());
    std::vector<Level> entries;
    entries.reserve(keep.size() * keep.size());
    for (std::size_t i : keep) {
        ids.push_back(id(i));
        for (std::size_t j : keep) {
            entries.push_back(level(i, j));
        }
    }
    return DistanceMatrix(std::move(ids), levels_, std::move(entries));
}

bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.ids_ == b.ids_ && a.levels_ == b.levels_ && a.entries_ == b.entries_;
}

std::string_view to_string(MetricClass c) {
    return c == MetricClass::ultrametric ? "ultrametric" : "pseudoultrametric-only";
}

WeightedGraph edge_weights(const LabeledGraph& g) {
    std::vector<Rational> weights;
    weights.reserve(g.edge_count());
    for (const auto& e : g.graph().edges()) {
        weights.push_back(max_of(g.label(e.u), g.label(e.v)));
    }
    return WeightedGraph(g.shared_graph(), std::move(weights));
}

DistanceMatrix minimax_distances(const WeightedGraph& wg) {
    const Graph& g = wg.graph();
    require_connected(g);
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return wg.weight(a) < wg.weight(b); });

    // values[0] is the diagonal zero; values[k + 1] is the k-th sorted weight.
    std::vector<Rational> values;
    values.reserve(m + 1);
    values.emplace_back(0);
    std::vector<DistanceMatrix::Level> entries(n * n, 0);

    UnionFind components(n);
    std::vector<std::vector<std::size_t>> members(n);
    for (std::size_t v = 0; v < n; ++v) {
        members[v].push_back(v);
    }
    for (std::size_t k = 0; k < m; ++k) {
        const Edge& e = g.edge(order[k]);
        values.push_back(wg.weight(order[k]));
        const std::size_t ra = components.find(e.u);
        const std::size_t rb = components.find(e.v);
        if (ra == rb) {
            continue;
        }
        const auto level = static_cast<DistanceMatrix::Level>(k + 1);
        for (std::size_t a : members[ra]) {
            for (std::size_t b : members[rb]) {
                entries[a * n + b] = level;
                entries[b * n + a] = level;
            }
        }
        const std::size_t root = components.unite(ra, rb);
        const std::size_t other = root == ra ? rb : ra;
        auto& keep = members[root];
        auto& gone = members[other];
        keep.insert(keep.end(), gone.begin(), gone.end());
        gone.clear();
        gone.shrink_to_fit();
    }
    return DistanceMatrix(std::vector<std::string>(g.ids().begin(), g.ids().end()), std::move(values),
                          std::move(entries));
}

DistanceMatrix distance_matrix(const LabeledGraph& g) { return minimax_distances(edge_weights(g)); }

Rational distance_oracle(const LabeledGraph& g, VertexId x, VertexId y, std::size_t cap) {
    if (g.vertex_count() > cap) {
        throw CapExceededError("path oracle capped at " + std::to_string(cap) + " vertices, graph has " +
                               std::to_string(g.vertex_count()));
    }
    std::optional<Rational> best;
    for_each_simple_path(g.graph(), x, y, [&](std::span<const VertexId> path) {
        const Rational* top = &g.label(path.front());
        for (VertexId v : path) {
            if (*top < g.label(v)) {
                top = &g.label(v);
            }
        }
        if (!best || *top < *best) {
            best = *top;
        }
    });
    if (!best) {
        throw DisconnectedError(g.graph().id(x), g.graph().id(y));
    }
    return *best;
}

DistanceMatrix oracle_distance_matrix(const LabeledGraph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            rows[x][y] = distance_oracle(g, x, y, cap);
            rows[y][x] = rows[x][y];
        }
    }
    const auto ids = g.graph().ids();
    return DistanceMatrix::from_rows(std::vector<std::string>(ids.begin(), ids.end()), rows);
}

Rational adjacent_distance(const LabeledGraph& g, VertexId u, VertexId v) {
    if (!g.graph().has_edge(u, v)) {
        throw PreconditionError("not an edge of the graph");
    }
    return max_of(g.label(u), g.label(v));
}

bool is_nondegenerate(const LabeledGraph& g) {
    const auto edges = g.graph().edges();
    return std::all_of(edges.begin(), edges.end(),
                       [&](const Edge& e) { return g.label(e.u).is_positive() || g.label(e.v).is_positive(); });
}

MetricClass classify_metric(const DistanceMatrix& dm) {
    if (!dm.satisfies_strong_triangle()) {
        throw SelfCheckError("distance matrix violates the strong triangle inequality");
    }
    return dm.has_zero_off_diagonal() ? MetricClass::pseudoultrametric_only : MetricClass::ultrametric;
}

ZeroQuotient zero_quotient(const DistanceMatrix& dm) {
    if (!dm.satisfies_strong_triangle()) {
        throw SelfCheckError("zero quotient needs a pseudoultrametric");
    }
    const std::size_t n = dm.size();
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_of(n, unassigned);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] != unassigned) {
            continue;
        }
        class_of[i] = reps.size();
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dm.level(i, j) == 0) {
                class_of[j] = reps.size();
            }
        }
        reps.push_back(i);
    }
    auto matrix = dm.restricted(reps);
    if (!std::equal(matrix.levels().begin(), matrix.levels().end(), dm.levels().begin(), dm.levels().end())) {
        throw SelfCheckError("zero quotient changed the distance set");
    }
    return ZeroQuotient{std::move(reps), std::move(class_of), std::move(matrix)};
}

RealizabilityVerdict is_weight_realizable(const WeightedGraph& wg) {
    const auto rho = minimax_distances(wg);
    const Graph& g = wg.graph();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (rho.at(e.u, e.v) < wg.weight(i)) {
            return RealizabilityVerdict{false, i, rho.at(e.u, e.v)};
        }
    }
    return RealizabilityVerdict{};
}

}  // namespace ultragraph
