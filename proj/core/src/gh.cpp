#include "ultragraph/gh.hpp"

#include <algorithm>
#include <numeric>

namespace ultragraph {

DistanceSet::DistanceSet(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty() || !values_.front().is_zero()) {
        throw PreconditionError("distance set must start with 0");
    }
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (!(values_[i - 1] < values_[i])) {
            throw PreconditionError("distance set must be strictly increasing");
        }
    }
}

DistanceSet distance_set(const DistanceMatrix& dm) {
    return DistanceSet(std::vector<Rational>(dm.levels().begin(), dm.levels().end()));
}

namespace {

void require_ultrametric(const DistanceMatrix& dm) {
    if (classify_metric(dm) != MetricClass::ultrametric) {
        throw PreconditionError("space is not ultrametric (distinct points at distance 0)");
    }
}

}  // namespace

bool check_gomory_hu(const DistanceMatrix& dm) {
    require_ultrametric(dm);
    return dm.levels().size() <= dm.size();
}

bool is_gh(const DistanceMatrix& dm) {
    require_ultrametric(dm);
    return dm.levels().size() == dm.size();
}

EdgeBoundCheck check_edge_bound(const LabeledGraph& g, const DistanceMatrix& dm) {
    const std::size_t d = dm.levels().size();
    const std::size_t bound = g.edge_count() + 1;
    return EdgeBoundCheck{d <= bound, d == bound};
}

TreeEquivalences tree_gh_report(const LabeledGraph& t) {
    if (t.vertex_count() < 2) {
        throw PreconditionError("tree conditions need at least two vertices");
    }
    if (!is_connected(t.graph()) || t.vertex_count() != t.edge_count() + 1) {
        throw PreconditionError("tree conditions need a tree");
    }
    if (!is_nondegenerate(t)) {
        throw PreconditionError("tree conditions need a non-degenerate labeling");
    }
    const auto dm = distance_matrix(t);
    const std::size_t d = dm.levels().size();

    auto weights = edge_weights(t);
    std::vector<Rational> w(weights.weights().begin(), weights.weights().end());
    std::sort(w.begin(), w.end());

    const auto deg = degrees(t.graph());
    const std::size_t degree_sum = std::accumulate(deg.begin(), deg.end(), std::size_t{0});

    TreeEquivalences r;
    r.gh = d == t.vertex_count();
    r.injective_weights = std::adjacent_find(w.begin(), w.end()) == w.end();
    r.edge_count_equality = d == t.edge_count() + 1;
    r.degree_sum_equality = 2 * d == 2 + degree_sum;
    return r;
}

GHReport analyze(const LabeledGraph& g) {
    const auto dm = distance_matrix(g);
    GHReport report;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.classification = classify_metric(dm);
    report.distances = distance_set(dm);
    if (report.classification == MetricClass::ultrametric) {
        report.gh = is_gh(dm);
    }

    const auto quotient = zero_quotient(dm);
    report.gomory_hu_holds = check_gomory_hu(quotient.matrix);
    if (!report.gomory_hu_holds) {
        throw SelfCheckError("Gomory-Hu inequality violated");
    }

    const auto bound = check_edge_bound(g, dm);
    report.edge_bound_holds = bound.holds;
    const bool tree = g.vertex_count() == g.edge_count() + 1;
    if (!bound.holds) {
        throw SelfCheckError("|D| <= |E| + 1 violated");
    }
    if (bound.equality && !tree) {
        throw SelfCheckError("|D| = |E| + 1 on a graph that is not a tree");
    }

    if (tree && g.vertex_count() >= 2 && is_nondegenerate(g)) {
        report.tree_equivalences = tree_gh_report(g);
        if (!report.tree_equivalences->all_agree()) {
            throw SelfCheckError("tree GH conditions disagree");
        }
    }
    return report;
}

bool is_gh_complete(std::span<const Rational> labels) {
    const std::size_t n = labels.size();
    if (n == 0) {
        throw PreconditionError("complete graph needs at least one vertex");
    }
    if (std::count_if(labels.begin(), labels.end(), [](const Rational& r) { return r.is_zero(); }) >= 2) {
        throw PreconditionError("two zero labels make the complete-graph labeling degenerate");
    }
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            edges.push_back({u, v});
        }
    }
    LabeledGraph k(Graph::with_numbered_vertices(n, std::move(edges)),
                   std::vector<Rational>(labels.begin(), labels.end()));
    return is_gh(distance_matrix(k));
}

std::vector<Rational> level_labeling(const Graph& tree, VertexId root) {
    const auto lev = root_levels(tree, root);
    std::vector<VertexId> order(tree.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return lev[a] < lev[b]; });
    std::vector<Rational> labels(tree.vertex_count());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        labels[order[rank]] = Rational(static_cast<long>(rank + 1));
    }
    return labels;
}

std::vector<Rational> gh_labeling(const Graph& g, VertexId root) {
    return level_labeling(spanning_tree(g, root), root);
}

}  // namespace ultragraph
