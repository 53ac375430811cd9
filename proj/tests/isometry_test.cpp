#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "ultragraph/dendrogram.hpp"
#include "ultragraph/errors.hpp"
#include "ultragraph/gh.hpp"
#include "ultragraph/serialize.hpp"

using namespace ultragraph;

namespace {

DistanceMatrix dist(const Graph& g, std::vector<Rational> labels) { return distance_matrix(LabeledGraph(g, std::move(labels))); }

const Graph& path3() {
    static const Graph g({"a", "b", "c"}, {{0, 1}, {1, 2}});
    return g;
}

DistanceMatrix two_points(long d) {
    return DistanceMatrix::from_rows({"p", "q"}, {{Rational(0), Rational(d)}, {Rational(d), Rational(0)}});
}

DistanceMatrix path4() { return dist(Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}}), {1, 2, 3, 4}); }

DistanceMatrix star4() { return dist(Graph({"r", "u2", "u3", "u4"}, {{0, 1}, {0, 2}, {0, 3}}), {1, 2, 3, 4}); }

DistanceMatrix from(const oracle::Matrix& m) { return DistanceMatrix::from_rows(oracle::numbered_ids(m.size()), m); }

}  // namespace

TEST_CASE("dendrogram structure") {
    SUBCASE("path") {
        const auto d = dendrogram(dist(path3(), {1, 2, 3}));
        REQUIRE(d.nodes().size() == 5);
        const auto& root = d.node(d.root());
        CHECK(*root.height == Rational(3));
        REQUIRE(root.children.size() == 2);
        CHECK(root.children[0] == 2);
        const auto& inner = d.node(root.children[1]);
        CHECK(*inner.height == Rational(2));
        CHECK(inner.children == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("single point") {
        const auto d = dendrogram(dist(Graph({"a"}, {}), {1}));
        CHECK(d.nodes().size() == 1);
        CHECK(d.node(d.root()).is_leaf());
        CHECK(canonical_form(d) == "·");
    }
    SUBCASE("two points") {
        const auto d = dendrogram(two_points(5));
        CHECK(*d.node(d.root()).height == Rational(5));
        CHECK(d.node(d.root()).children.size() == 2);
    }
    SUBCASE("equal thresholds collapse into one multi-way node") {
        const auto d = dendrogram(star4());
        CHECK(canonical_form(d) == "(4(3(2··)·)·)");
        const auto flat = dendrogram(dist(Graph({"r", "a", "b", "c"}, {{0, 1}, {0, 2}, {0, 3}}), {1, 5, 5, 5}));
        CHECK(flat.nodes().size() == 5);
        CHECK(canonical_form(flat) == "(5····)");
    }
    SUBCASE("degenerate input is rejected") {
        CHECK_THROWS_AS(dendrogram(dist(Graph({"a", "b"}, {{0, 1}}), {0, 0})), PreconditionError);
    }
}

TEST_CASE("canonical forms") {
    CHECK(canonical_form(dendrogram(two_points(5))) == "(5··)");
    CHECK(canonical_form(dendrogram(dist(path3(), {1, 2, 3}))) == "(3(2··)·)");
    const auto half = DistanceMatrix::from_rows({"p", "q"}, {{Rational(0), Rational(3, 2)}, {Rational(3, 2), Rational(0)}});
    CHECK(canonical_form(dendrogram(half)) == "(3/2··)");
    const Graph renamed({"z", "y", "x"}, {{2, 1}, {1, 0}});
    CHECK(canonical_form(dendrogram(dist(renamed, {3, 2, 1}))) == "(3(2··)·)");
}

TEST_CASE("are_isometric") {
    CHECK(are_isometric(path4(), star4()));
    CHECK(are_isometric(two_points(5), two_points(5)));
    CHECK_FALSE(are_isometric(two_points(5), two_points(4)));
    CHECK_FALSE(are_isometric(dist(path3(), {1, 2, 3}), two_points(3)));
    CHECK_FALSE(are_isometric(dist(path3(), {1, 2, 3}), dist(path3(), {3, 2, 3})));
    CHECK_THROWS_AS(are_isometric(two_points(1), dist(Graph({"a", "b"}, {{0, 1}}), {0, 0})), PreconditionError);
    const auto p = oracle::rows_of(path4());
    CHECK(oracle::isometric(p, oracle::rows_of(star4())));
}

TEST_CASE("dendrogram JSON nests heights and leaves") {
    const auto j = to_json(dendrogram(dist(path3(), {1, 2, 3})));
    CHECK(j["height"] == "3");
    CHECK(j["children"][0]["leaf"] == "c");
    CHECK(j["children"][1]["height"] == "2");
}

TEST_CASE("reconstruction, permutation invariance and bijection agreement on random spaces") {
    std::mt19937_64 rng(42);
    std::vector<oracle::Matrix> spaces;
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int i = 0; i < 150; ++i) {
        spaces.push_back(oracle::random_ultrametric(size(rng), rng));
    }
    for (const auto& m : spaces) {
        REQUIRE(oracle::strong_triangle(m));
        const auto dm = from(m);
        const auto d = dendrogram(dm);
        for (std::size_t x = 0; x < m.size(); ++x) {
            for (std::size_t y = 0; y < m.size(); ++y) {
                REQUIRE(d.merge_height(x, y) == m[x][y]);
            }
        }
        const auto form = canonical_form(d);
        std::vector<std::size_t> p(m.size());
        std::iota(p.begin(), p.end(), 0);
        for (int k = 0; k < 10; ++k) {
            std::shuffle(p.begin(), p.end(), rng);
            REQUIRE(canonical_form(dendrogram(from(oracle::permuted(m, p)))) == form);
        }
    }
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        for (std::size_t j = i; j < spaces.size(); ++j) {
            const bool fast = are_isometric(from(spaces[i]), from(spaces[j]));
            REQUIRE(fast == oracle::isometric(spaces[i], spaces[j]));
            if (fast) {
                REQUIRE(distance_set(from(spaces[i])) == distance_set(from(spaces[j])));
            }
        }
    }
}
