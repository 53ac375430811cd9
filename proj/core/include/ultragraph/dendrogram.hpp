#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ultragraph/metric.hpp"
#include "ultragraph/rational.hpp"

namespace ultragraph {

/// Ball hierarchy of a finite ultrametric space.
///
/// Nodes 0..n-1 are the leaves (node i is point i); internal nodes follow in
/// order of increasing height, so children always precede their parent.
/// Every internal node has at least two children and a height strictly
/// above every internal descendant. Two points are at the distance given
/// by the height of their lowest common ancestor.
class Dendrogram {
public:
    struct Node {
        std::optional<Rational> height;      // internal nodes only
        std::vector<std::size_t> children;   // ascending node ids
        std::optional<std::size_t> parent;

        bool is_leaf() const noexcept { return children.empty(); }
    };

    Dendrogram(std::vector<std::string> point_ids, std::vector<Node> nodes);

    std::size_t point_count() const noexcept { return point_ids_.size(); }
    std::span<const std::string> point_ids() const noexcept { return point_ids_; }
    std::span<const Node> nodes() const noexcept { return nodes_; }
    const Node& node(std::size_t id) const { return nodes_.at(id); }
    std::size_t root() const noexcept { return nodes_.size() - 1; }

    /// Height of the lowest common ancestor; 0 when a == b.
    Rational merge_height(std::size_t a, std::size_t b) const;

private:
    std::vector<std::string> point_ids_;
    std::vector<Node> nodes_;
};

/// Throws PreconditionError on a non-ultrametric matrix.
Dendrogram dendrogram(const DistanceMatrix& dm);

/// Naming-free serialization: a leaf is "·" (U+00B7); an internal node is
/// "(" + height + children's forms sorted byte-wise and concatenated + ")".
/// Heights render as integers or p/q in lowest terms.
std::string canonical_form(const Dendrogram& d);

/// Canonical forms of both dendrograms agree. Throws PreconditionError
/// unless both spaces are ultrametric.
bool are_isometric(const DistanceMatrix& a, const DistanceMatrix& b);

}  // namespace ultragraph
