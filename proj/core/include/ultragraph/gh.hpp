#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ultragraph/graph.hpp"
#include "ultragraph/metric.hpp"
#include "ultragraph/rational.hpp"

namespace ultragraph {

/// Strictly increasing distinct distance values; always starts with 0.
class DistanceSet {
public:
    /// Throws PreconditionError unless values are strictly increasing from 0.
    explicit DistanceSet(std::vector<Rational> values);

    std::span<const Rational> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;
    friend auto operator<=>(const DistanceSet& a, const DistanceSet& b) { return a.values_ <=> b.values_; }

private:
    std::vector<Rational> values_;
};

DistanceSet distance_set(const DistanceMatrix& dm);

/// |D| <= |X|. Throws PreconditionError on a non-ultrametric matrix.
bool check_gomory_hu(const DistanceMatrix& dm);

/// |D| = |X|. Throws PreconditionError on a non-ultrametric matrix.
bool is_gh(const DistanceMatrix& dm);

struct EdgeBoundCheck {
    bool holds = true;     // |D| <= |E| + 1
    bool equality = false; // |D| == |E| + 1
};

/// `dm` must be distance_matrix(g).
EdgeBoundCheck check_edge_bound(const LabeledGraph& g, const DistanceMatrix& dm);

/// The four tree conditions, each evaluated on its own.
struct TreeEquivalences {
    bool gh = false;                   // |D| = |V|
    bool injective_weights = false;    // edge weights pairwise distinct
    bool edge_count_equality = false;  // |D| = |E| + 1
    bool degree_sum_equality = false;  // 2|D| = 2 + sum of degrees

    bool all_agree() const {
        return gh == injective_weights && gh == edge_count_equality && gh == degree_sum_equality;
    }
    friend bool operator==(const TreeEquivalences&, const TreeEquivalences&) = default;
};

/// Throws PreconditionError unless `t` is a tree with >= 2 vertices and a
/// non-degenerate labeling.
TreeEquivalences tree_gh_report(const LabeledGraph& t);

struct GHReport {
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    MetricClass classification = MetricClass::ultrametric;
    DistanceSet distances{std::vector<Rational>{Rational(0)}};
    /// Absent unless the space is ultrametric.
    std::optional<bool> gh;
    /// Evaluated on the zero quotient, which is the space itself when ultrametric.
    bool gomory_hu_holds = true;
    bool edge_bound_holds = true;
    /// Present for trees with >= 2 vertices and a non-degenerate labeling.
    std::optional<TreeEquivalences> tree_equivalences;
};

/// Full report for a connected labeled graph. Throws SelfCheckError when a
/// bound that must always hold fails, or the tree conditions disagree.
GHReport analyze(const LabeledGraph& g);

/// GH membership of the complete graph carrying these labels, decided by
/// building the graph and computing its distances. Throws
/// PreconditionError on an empty list or two or more zero labels.
bool is_gh_complete(std::span<const Rational> labels);

/// Injective labels 1, 2, 3, ... in order of (level from root, vertex order).
/// Throws PreconditionError on non-tree input.
std::vector<Rational> level_labeling(const Graph& tree, VertexId root);

/// level_labeling of the breadth-first spanning tree rooted at `root`,
/// applied to the whole graph. Throws DisconnectedError.
std::vector<Rational> gh_labeling(const Graph& g, VertexId root = 0);

}  // namespace ultragraph
