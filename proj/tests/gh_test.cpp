#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "ultragraph/errors.hpp"
#include "ultragraph/gh.hpp"

using namespace ultragraph;

namespace {

const Graph& path3() {
    static const Graph g({"a", "b", "c"}, {{0, 1}, {1, 2}});
    return g;
}
const Graph& triangle() {
    static const Graph g({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}});
    return g;
}
const Graph& star3() {
    static const Graph g({"r", "u", "v"}, {{0, 1}, {0, 2}});
    return g;
}
const Graph& square() {
    static const Graph g({"x", "y", "z1", "z2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    return g;
}

DistanceMatrix dist(const Graph& g, std::vector<Rational> labels) { return distance_matrix(LabeledGraph(g, std::move(labels))); }

std::vector<Rational> values(const DistanceSet& ds) { return {ds.values().begin(), ds.values().end()}; }

std::vector<Rational> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("distance_set") {
    CHECK(values(distance_set(dist(path3(), {1, 2, 3}))) == ints({0, 2, 3}));
    CHECK(values(distance_set(dist(Graph({"a"}, {}), {4}))) == ints({0}));
    CHECK(values(distance_set(dist(path3(), {3, 2, 3}))) == ints({0, 3}));
    CHECK_THROWS_AS(DistanceSet(ints({1, 2})), PreconditionError);
    CHECK_THROWS_AS(DistanceSet(ints({0, 2, 2})), PreconditionError);
}

TEST_CASE("Gomory-Hu inequality and GH membership") {
    CHECK(check_gomory_hu(dist(path3(), {1, 2, 3})));
    CHECK(check_gomory_hu(dist(Graph({"a"}, {}), {0})));
    const auto sq = dist(square(), {0, 0, 1, Rational(1, 2)});
    CHECK(distance_set(sq).size() == 3);
    CHECK(check_gomory_hu(sq));
    CHECK(is_gh(dist(path3(), {1, 2, 3})));
    CHECK_FALSE(is_gh(dist(path3(), {3, 2, 3})));
    CHECK(is_gh(dist(triangle(), {1, 2, 3})));
    CHECK(is_gh(dist(Graph({"a"}, {}), {0})));
    CHECK_THROWS_AS(is_gh(dist(Graph({"a", "b"}, {{0, 1}}), {0, 0})), PreconditionError);
    CHECK_THROWS_AS(check_gomory_hu(dist(Graph({"a", "b"}, {{0, 1}}), {0, 0})), PreconditionError);
}

TEST_CASE("edge bound") {
    const LabeledGraph p(path3(), {1, 2, 3});
    auto b = check_edge_bound(p, distance_matrix(p));
    CHECK(b.holds);
    CHECK(b.equality);
    const LabeledGraph t(triangle(), {1, 2, 3});
    b = check_edge_bound(t, distance_matrix(t));
    CHECK(b.holds);
    CHECK_FALSE(b.equality);
    const LabeledGraph s(square(), {0, 0, 1, Rational(1, 2)});
    b = check_edge_bound(s, distance_matrix(s));
    CHECK(b.holds);
    CHECK_FALSE(b.equality);
}

TEST_CASE("tree_gh_report") {
    const TreeEquivalences all_true{true, true, true, true};
    const TreeEquivalences all_false{false, false, false, false};
    CHECK(tree_gh_report(LabeledGraph(path3(), {1, 2, 3})) == all_true);
    CHECK(tree_gh_report(LabeledGraph(path3(), {3, 2, 3})) == all_false);
    CHECK(tree_gh_report(LabeledGraph(star3(), {1, 2, 3})) == all_true);
    CHECK_THROWS_AS(tree_gh_report(LabeledGraph(triangle(), {1, 2, 3})), PreconditionError);
    CHECK_THROWS_AS(tree_gh_report(LabeledGraph(path3(), {0, 0, 3})), PreconditionError);
    CHECK_THROWS_AS(tree_gh_report(LabeledGraph(Graph({"a"}, {}), {1})), PreconditionError);
}

TEST_CASE("analyze assembles the report") {
    const auto r = analyze(LabeledGraph(path3(), {1, 2, 3}));
    CHECK(r.vertex_count == 3);
    CHECK(r.edge_count == 2);
    CHECK(r.gh == std::optional<bool>(true));
    REQUIRE(r.tree_equivalences.has_value());
    CHECK(r.tree_equivalences->all_agree());
    const auto degenerate = analyze(LabeledGraph(Graph({"a", "b"}, {{0, 1}}), {0, 0}));
    CHECK(degenerate.classification == MetricClass::pseudoultrametric_only);
    CHECK_FALSE(degenerate.gh.has_value());
    CHECK_FALSE(degenerate.tree_equivalences.has_value());
    CHECK(degenerate.gomory_hu_holds);
    CHECK_FALSE(analyze(LabeledGraph(triangle(), {1, 2, 3})).tree_equivalences.has_value());
}

TEST_CASE("complete graphs") {
    CHECK(is_gh_complete(ints({1, 2, 3})));
    CHECK(is_gh_complete(ints({1, 1, 2})));
    CHECK(is_gh_complete(ints({5})));
    CHECK(is_gh_complete(ints({0, 4})));
    CHECK_THROWS_AS(is_gh_complete(ints({0, 0, 1})), PreconditionError);
    CHECK_THROWS_AS(is_gh_complete(std::vector<Rational>{}), PreconditionError);
}

TEST_CASE("labels {1,2,2} on K3: two label values but only two distances") {
    const auto labels = ints({1, 2, 2});
    const auto dm = dist(Graph::with_numbered_vertices(3, oracle::complete_edges(3)), labels);
    CHECK(distance_set(dm).size() == 2);
    CHECK(dm.size() == 3);
    CHECK(std::set<Rational>(labels.begin(), labels.end()).size() == 2);  // |l(V)| = |V| - 1
    CHECK_FALSE(is_gh_complete(labels));
}

TEST_CASE("complete-graph characterization matches exact computation up to 6 vertices") {
    const std::vector<Rational> pool = ints({0, 1, 2, 3, 4, 5, 6});
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<Rational> labels;
            for (auto i : idx) {
                labels.push_back(pool[i]);
            }
            if (std::count(labels.begin(), labels.end(), Rational(0)) <= 1) {
                const bool exact = is_gh_complete(labels);
                REQUIRE(exact == (oracle::complete_graph_distance_count(labels) == n));
                REQUIRE(exact == oracle::complete_graph_characterization(labels));
            }
            std::size_t k = 0;
            while (k < n && ++idx[k] == pool.size()) {
                idx[k++] = 0;
            }
            if (k == n) {
                break;
            }
        }
    }
}

TEST_CASE("level_labeling") {
    const auto star_labels = level_labeling(star3(), 0);
    CHECK(star_labels == ints({1, 2, 3}));
    const auto dm = dist(star3(), star_labels);
    CHECK(dm.at(1, 2) == Rational(3));
    const LabeledGraph p(path3(), level_labeling(path3(), 0));
    CHECK(std::vector<Rational>(p.labels().begin(), p.labels().end()) == ints({1, 2, 3}));
    CHECK(tree_gh_report(p).all_agree());
    CHECK(tree_gh_report(p).gh);
    CHECK(level_labeling(Graph({"a"}, {}), 0) == ints({1}));
    CHECK(level_labeling(path3(), 1) == ints({2, 1, 3}));
    CHECK_THROWS_AS(level_labeling(triangle(), 0), PreconditionError);
}

TEST_CASE("gh_labeling") {
    const auto tri = gh_labeling(triangle());
    CHECK(tri == ints({1, 2, 3}));
    CHECK(values(distance_set(dist(triangle(), tri))) == ints({0, 2, 3}));
    CHECK(gh_labeling(path3()) == level_labeling(path3(), 0));
    const Graph c4({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const auto dm = dist(c4, gh_labeling(c4));
    CHECK(is_gh(dm));
    CHECK(oracle::rows_of(dm) == oracle::vertex_minimax(LabeledGraph(c4, gh_labeling(c4))));
    CHECK_THROWS_AS(gh_labeling(Graph({"a", "b"}, {})), DisconnectedError);
}

TEST_CASE("four tree conditions agree on all trees up to 7 vertices") {
    std::mt19937_64 rng(3);
    const auto pool = ints({1, 2, 3, 4, 5, 6, 7});
    for (std::size_t n = 2; n <= 7; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            const std::size_t samples = n <= 4 ? 0 : (n == 7 ? 2 : 10);
            if (n <= 4) {
                std::vector<std::size_t> idx(n, 0);
                while (true) {
                    std::vector<Rational> labels;
                    for (auto i : idx) {
                        labels.push_back(pool[i]);
                    }
                    REQUIRE(tree_gh_report(LabeledGraph(t, labels)).all_agree());
                    std::size_t k = 0;
                    while (k < n && ++idx[k] == pool.size()) {
                        idx[k++] = 0;
                    }
                    if (k == n) {
                        break;
                    }
                }
            }
            for (std::size_t s = 0; s < samples; ++s) {
                REQUIRE(tree_gh_report(LabeledGraph(t, oracle::draw(n, pool, rng))).all_agree());
            }
        }
    }
}

TEST_CASE("bounds and constructive labelings on all connected graphs up to 5 vertices") {
    std::mt19937_64 rng(17);
    const std::vector<Rational> pool{Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& graph : oracle::connected_graphs(n)) {
            const LabeledGraph g(graph, oracle::draw(n, pool, rng));
            const auto dm = distance_matrix(g);
            const auto bound = check_edge_bound(g, dm);
            REQUIRE(bound.holds);
            REQUIRE(bound.equality <= is_tree(graph));
            if (classify_metric(dm) == MetricClass::ultrametric) {
                REQUIRE(check_gomory_hu(dm));
            }
            for (VertexId root = 0; root < n; ++root) {
                const auto labels = gh_labeling(graph, root);
                const LabeledGraph lg(graph, labels);
                const auto gdm = distance_matrix(lg);
                REQUIRE(is_gh(gdm));
                REQUIRE(gdm == distance_matrix(LabeledGraph(spanning_tree(graph, root), labels)));
                if (is_tree(graph)) {
                    for (std::size_t x = 0; x < n; ++x) {
                        for (std::size_t y = x + 1; y < n; ++y) {
                            REQUIRE(gdm.at(x, y) == std::max(labels[x], labels[y]));
                        }
                    }
                }
            }
        }
    }
}
