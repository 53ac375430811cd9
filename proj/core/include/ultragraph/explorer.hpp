#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ultragraph/gh.hpp"
#include "ultragraph/graph.hpp"
#include "ultragraph/metric.hpp"
#include "ultragraph/rational.hpp"

namespace ultragraph {

enum class LabelingMode { exhaustive, sampled };

std::string_view to_string(LabelingMode mode);

inline constexpr std::size_t exhaustive_max_n = 7;

/// Search over labeled trees on 2..max_n vertices with labels drawn from a
/// finite universe of positive rationals. Findings only ever speak about
/// that universe.
struct SearchConfig {
    std::size_t max_n = 4;
    std::vector<Rational> universe;
    LabelingMode mode = LabelingMode::exhaustive;
    std::uint64_t seed = 0;
    /// Labelings drawn per tree in sampled mode.
    std::size_t samples_per_tree = 100;
    /// Worker threads; the report does not depend on it.
    std::size_t jobs = 1;
    /// Skip labelings that are not the lexicographically smallest in their
    /// orbit under the tree's automorphisms.
    bool symmetry_reduction = false;

    /// Throws PreconditionError on max_n < 2, an empty or non-positive
    /// universe, jobs = 0, or max_n above exhaustive_max_n in exhaustive mode.
    void validate() const;
};

/// Two GH trees with equal distance sets whose spaces are not isometric.
struct Counterexample {
    LabeledGraph first;
    LabeledGraph second;
    DistanceSet distances;
    std::string first_form;
    std::string second_form;
};

struct SizeReport {
    std::size_t n = 0;
    std::size_t trees = 0;
    std::size_t labelings = 0;
    std::size_t nondegenerate = 0;
    std::size_t gh_spaces = 0;
    std::size_t buckets = 0;
    /// Pairs of GH spaces sharing a distance set, all of which were compared.
    std::uint64_t pairs_tested = 0;
    std::uint64_t isometric_pairs = 0;
    std::vector<Counterexample> counterexamples;
};

struct ConjectureReport {
    SearchConfig config;
    std::vector<SizeReport> sizes;

    std::size_t counterexample_count() const;
};

using ProgressSink = std::function<void(std::string_view)>;

/// Enumerates trees by Prüfer sequence, labels them from the universe,
/// keeps non-degenerate GH spaces, buckets them by distance set and
/// compares canonical forms inside each bucket. One representative pair is
/// reported per pair of distinct isometry classes in a bucket. Output is a
/// function of the config alone; `jobs` only changes wall time.
ConjectureReport search_conjecture(const SearchConfig& config, const ProgressSink& progress = {});

/// Groups spaces by exact distance set; values are indices into `spaces`.
/// Throws PreconditionError if any space is not an ultrametric GH space.
std::map<DistanceSet, std::vector<std::size_t>> bucket_by_distance_set(
    const std::vector<std::pair<LabeledGraph, DistanceMatrix>>& spaces);

/// Recomputes both spaces with the path-enumeration oracle and confirms:
/// both GH, equal distance sets, not isometric, recorded forms reproduced.
bool verify_counterexample(const Counterexample& c);

}  // namespace ultragraph
