#include "ultragraph/dendrogram.hpp"

#include <algorithm>
#include <map>

#include "ultragraph/union_find.hpp"

namespace ultragraph {

namespace {

constexpr std::string_view leaf_glyph = "·";

void require_ultrametric(const DistanceMatrix& dm) {
    if (classify_metric(dm) != MetricClass::ultrametric) {
        throw PreconditionError("dendrograms exist only for ultrametric spaces; quotient the zero classes first");
    }
}

}  // namespace

Dendrogram::Dendrogram(std::vector<std::string> point_ids, std::vector<Node> nodes)
    : point_ids_(std::move(point_ids)), nodes_(std::move(nodes)) {
    const std::size_t n = point_ids_.size();
    if (n == 0 || nodes_.size() < n) {
        throw PreconditionError("dendrogram needs one leaf per point");
    }
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        const Node& node = nodes_[id];
        if (id < n) {
            if (!node.is_leaf() || node.height) {
                throw PreconditionError("the first n nodes must be leaves");
            }
            continue;
        }
        if (node.children.size() < 2 || !node.height || !node.height->is_positive()) {
            throw PreconditionError("internal nodes need a positive height and at least two children");
        }
        for (std::size_t c : node.children) {
            if (c >= id || nodes_[c].parent != id) {
                throw PreconditionError("malformed dendrogram child link");
            }
            if (nodes_[c].height && !(*nodes_[c].height < *node.height)) {
                throw PreconditionError("dendrogram heights must strictly increase toward the root");
            }
        }
    }
    if (nodes_.back().parent) {
        throw PreconditionError("dendrogram root has a parent");
    }
}

Rational Dendrogram::merge_height(std::size_t a, std::size_t b) const {
    if (a >= point_count() || b >= point_count()) {
        throw PreconditionError("unknown dendrogram point");
    }
    if (a == b) {
        return Rational(0);
    }
    // Ancestor ids strictly increase along a root path, so walking the
    // smaller id upward meets the lowest common ancestor.
    while (a != b) {
        if (a < b) {
            a = *nodes_[a].parent;
        } else {
            b = *nodes_[b].parent;
        }
    }
    return *nodes_[a].height;
}

Dendrogram dendrogram(const DistanceMatrix& dm) {
    require_ultrametric(dm);
    const std::size_t n = dm.size();
    const auto levels = dm.levels();

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs_at(levels.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs_at[dm.level(i, j)].emplace_back(i, j);
        }
    }

    std::vector<Dendrogram::Node> nodes(n);
    std::vector<std::size_t> node_of_root(n);
    for (std::size_t i = 0; i < n; ++i) {
        node_of_root[i] = i;
    }
    UnionFind clusters(n);

    for (std::size_t level = 1; level < levels.size(); ++level) {
        // Clusters touched at this height, keyed by node id, with one member point each.
        std::map<std::size_t, std::size_t> touched;
        for (const auto& [i, j] : pairs_at[level]) {
            touched.emplace(node_of_root[clusters.find(i)], i);
            touched.emplace(node_of_root[clusters.find(j)], j);
        }
        for (const auto& [i, j] : pairs_at[level]) {
            clusters.unite(i, j);
        }
        std::map<std::size_t, std::vector<std::size_t>> merged;  // new root -> old cluster nodes
        for (const auto& [node, point] : touched) {
            merged[clusters.find(point)].push_back(node);
        }
        for (auto& [root, children] : merged) {
            if (children.size() < 2) {
                continue;
            }
            const std::size_t id = nodes.size();
            for (std::size_t c : children) {
                nodes[c].parent = id;
            }
            nodes.push_back(Dendrogram::Node{levels[level], std::move(children), std::nullopt});
            node_of_root[root] = id;
        }
    }
    return Dendrogram(std::vector<std::string>(dm.ids().begin(), dm.ids().end()), std::move(nodes));
}

std::string canonical_form(const Dendrogram& d) {
    const auto nodes = d.nodes();
    std::vector<std::string> form(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const auto& node = nodes[id];
        if (node.is_leaf()) {
            form[id] = leaf_glyph;
            continue;
        }
        std::vector<std::string> parts;
        parts.reserve(node.children.size());
        for (std::size_t c : node.children) {
            parts.push_back(std::move(form[c]));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(" + node.height->str();
        for (const auto& p : parts) {
            s += p;
        }
        s += ")";
        form[id] = std::move(s);
    }
    return std::move(form[d.root()]);
}

bool are_isometric(const DistanceMatrix& a, const DistanceMatrix& b) {
    require_ultrametric(a);
    require_ultrametric(b);
    if (a.size() != b.size()) {
        return false;
    }
    return canonical_form(dendrogram(a)) == canonical_form(dendrogram(b));
}

}  // namespace ultragraph
