#include "ultragraph/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <random>
#include <thread>

#include "ultragraph/dendrogram.hpp"

namespace ultragraph {

std::string_view to_string(LabelingMode mode) { return mode == LabelingMode::exhaustive ? "exhaustive" : "sampled"; }

void SearchConfig::validate() const {
    if (max_n < 2) {
        throw PreconditionError("max_n must be at least 2");
    }
    if (mode == LabelingMode::exhaustive && max_n > exhaustive_max_n) {
        throw PreconditionError("exhaustive search is guarded at max_n <= " + std::to_string(exhaustive_max_n));
    }
    if (max_n > default_tree_cap) {
        throw PreconditionError("tree enumeration is capped at " + std::to_string(default_tree_cap) + " vertices");
    }
    if (universe.empty()) {
        throw PreconditionError("label universe is empty");
    }
    for (const auto& r : universe) {
        if (!r.is_positive()) {
            throw PreconditionError("label universe must contain positive values only");
        }
    }
    if (jobs == 0) {
        throw PreconditionError("jobs must be at least 1");
    }
    if (mode == LabelingMode::sampled && samples_per_tree == 0) {
        throw PreconditionError("sampled mode needs samples_per_tree >= 1");
    }
}

std::size_t ConjectureReport::counterexample_count() const {
    std::size_t total = 0;
    for (const auto& s : sizes) {
        total += s.counterexamples.size();
    }
    return total;
}

namespace {

using Digits = std::vector<std::size_t>;

struct SpaceKey {
    std::size_t tree_index;
    Digits digits;

    friend auto operator<=>(const SpaceKey&, const SpaceKey&) = default;
};

struct IsometryClass {
    std::uint64_t count = 0;
    SpaceKey key;
    std::shared_ptr<const LabeledGraph> representative;
};

// distance set -> canonical form -> class
using Buckets = std::map<DistanceSet, std::map<std::string, IsometryClass>>;

struct ShardResult {
    std::size_t trees = 0;
    std::size_t labelings = 0;
    std::size_t nondegenerate = 0;
    std::size_t gh_spaces = 0;
    Buckets buckets;
};

std::size_t int_pow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

std::vector<std::vector<VertexId>> automorphisms(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> result;
    std::vector<VertexId> image(n);
    std::vector<char> used(n, 0);
    auto assign = [&](auto&& self, VertexId v) -> void {
        if (v == n) {
            result.push_back(image);
            return;
        }
        for (VertexId w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) {
                continue;
            }
            bool consistent = true;
            for (VertexId u = 0; u < v && consistent; ++u) {
                consistent = g.has_edge(u, v) == g.has_edge(image[u], w);
            }
            if (!consistent) {
                continue;
            }
            used[w] = 1;
            image[v] = w;
            self(self, v + 1);
            used[w] = 0;
        }
    };
    assign(assign, 0);
    return result;
}

bool is_orbit_minimum(const Digits& digits, const std::vector<std::vector<VertexId>>& autos) {
    for (const auto& sigma : autos) {
        for (std::size_t v = 0; v < digits.size(); ++v) {
            const std::size_t moved = digits[sigma[v]];
            if (moved != digits[v]) {
                if (moved < digits[v]) {
                    return false;
                }
                break;
            }
        }
    }
    return true;
}

// Advances digits as a base-`base` counter, most significant first.
bool next_digits(Digits& digits, std::size_t base) {
    std::size_t k = digits.size();
    while (k > 0 && digits[k - 1] + 1 == base) {
        digits[--k] = 0;
    }
    if (k == 0) {
        return false;
    }
    ++digits[k - 1];
    return true;
}

class TreeExplorer {
public:
    TreeExplorer(const SearchConfig& config, std::size_t n) : config_(config), n_(n) {}

    void visit(std::size_t tree_index, const Graph& tree, ShardResult& out) const {
        ++out.trees;
        const auto shared = std::make_shared<const Graph>(tree);
        std::vector<std::vector<VertexId>> autos;
        if (config_.symmetry_reduction) {
            autos = automorphisms(tree);
        }
        const std::size_t base = config_.universe.size();
        Digits digits(n_, 0);
        if (config_.mode == LabelingMode::exhaustive) {
            do {
                if (!config_.symmetry_reduction || is_orbit_minimum(digits, autos)) {
                    evaluate(tree_index, shared, digits, out);
                }
            } while (next_digits(digits, base));
            return;
        }
        const auto seed = config_.seed;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(n_), static_cast<std::uint32_t>(tree_index),
                          static_cast<std::uint32_t>(static_cast<std::uint64_t>(tree_index) >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<std::size_t> pick(0, base - 1);
        for (std::size_t s = 0; s < config_.samples_per_tree; ++s) {
            for (auto& d : digits) {
                d = pick(rng);
            }
            if (!config_.symmetry_reduction || is_orbit_minimum(digits, autos)) {
                evaluate(tree_index, shared, digits, out);
            }
        }
    }

private:
    void evaluate(std::size_t tree_index, const std::shared_ptr<const Graph>& tree, const Digits& digits,
                  ShardResult& out) const {
        ++out.labelings;
        std::vector<Rational> labels;
        labels.reserve(digits.size());
        for (std::size_t d : digits) {
            labels.push_back(config_.universe[d]);
        }
        LabeledGraph lg(tree, std::move(labels));
        if (!is_nondegenerate(lg)) {
            return;
        }
        ++out.nondegenerate;
        const auto conditions = tree_gh_report(lg);
        if (!conditions.all_agree()) {
            throw SelfCheckError("tree GH conditions disagree during search");
        }
        if (!conditions.gh) {
            return;
        }
        ++out.gh_spaces;
        const auto dm = distance_matrix(lg);
        auto& cls = out.buckets[distance_set(dm)][canonical_form(dendrogram(dm))];
        SpaceKey key{tree_index, digits};
        if (cls.count == 0 || key < cls.key) {
            cls.key = std::move(key);
            cls.representative = std::make_shared<const LabeledGraph>(std::move(lg));
        }
        ++cls.count;
    }

    const SearchConfig& config_;
    std::size_t n_;
};

// Shard s of size n holds the trees whose Prüfer sequence starts with s.
ShardResult run_shard(const SearchConfig& config, std::size_t n, std::size_t shard) {
    ShardResult out;
    TreeExplorer explorer(config, n);
    if (n <= 2) {
        explorer.visit(0, tree_from_pruefer(n, {}), out);
        return out;
    }
    const std::size_t per_shard = int_pow(n, n - 3);
    std::vector<VertexId> seq(n - 2, 0);
    seq[0] = shard;
    std::vector<std::size_t> rest(n - 3, 0);
    std::size_t offset = 0;
    do {
        std::copy(rest.begin(), rest.end(), seq.begin() + 1);
        explorer.visit(shard * per_shard + offset, tree_from_pruefer(n, seq), out);
        ++offset;
    } while (next_digits(rest, n));
    return out;
}

void merge_into(ShardResult& total, ShardResult&& part) {
    total.trees += part.trees;
    total.labelings += part.labelings;
    total.nondegenerate += part.nondegenerate;
    total.gh_spaces += part.gh_spaces;
    for (auto& [dset, classes] : part.buckets) {
        auto& target = total.buckets[dset];
        for (auto& [form, cls] : classes) {
            auto& t = target[form];
            if (t.count == 0 || cls.key < t.key) {
                t.key = cls.key;
                t.representative = cls.representative;
            }
            t.count += cls.count;
        }
    }
}

std::vector<ShardResult> run_shards(const SearchConfig& config, std::size_t n, const ProgressSink& progress) {
    const std::size_t shard_count = n <= 2 ? 1 : n;
    std::vector<ShardResult> results(shard_count);
    std::vector<std::exception_ptr> errors(shard_count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};

    auto worker = [&] {
        for (std::size_t s = next++; s < shard_count; s = next++) {
            try {
                results[s] = run_shard(config, n, s);
            } catch (...) {
                errors[s] = std::current_exception();
            }
            ++done;
        }
    };
    const std::size_t width = std::min(config.jobs, shard_count);
    if (width <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(width);
        for (std::size_t t = 0; t < width; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    if (progress) {
        progress("n=" + std::to_string(n) + ": " + std::to_string(shard_count) + " shard(s) done");
    }
    return results;
}

SizeReport summarize(std::size_t n, ShardResult&& total) {
    SizeReport r;
    r.n = n;
    r.trees = total.trees;
    r.labelings = total.labelings;
    r.nondegenerate = total.nondegenerate;
    r.gh_spaces = total.gh_spaces;
    r.buckets = total.buckets.size();

    // Isometric spaces must share a distance set: a canonical form may live
    // in one bucket only.
    std::map<std::string, const DistanceSet*> home;
    for (const auto& [dset, classes] : total.buckets) {
        for (const auto& [form, cls] : classes) {
            auto [it, fresh] = home.emplace(form, &dset);
            if (!fresh && !(*it->second == dset)) {
                throw SelfCheckError("isometric spaces with different distance sets");
            }
        }
    }

    for (const auto& [dset, classes] : total.buckets) {
        std::uint64_t k = 0;
        for (const auto& [form, cls] : classes) {
            k += cls.count;
            r.isometric_pairs += cls.count * (cls.count - 1) / 2;
        }
        r.pairs_tested += k * (k - 1) / 2;
        for (auto a = classes.begin(); a != classes.end(); ++a) {
            for (auto b = std::next(a); b != classes.end(); ++b) {
                r.counterexamples.push_back(Counterexample{*a->second.representative, *b->second.representative, dset,
                                                           a->first, b->first});
            }
        }
    }
    return r;
}

}  // namespace

ConjectureReport search_conjecture(const SearchConfig& config, const ProgressSink& progress) {
    config.validate();
    ConjectureReport report;
    report.config = config;
    for (std::size_t n = 2; n <= config.max_n; ++n) {
        ShardResult total;
        for (auto& part : run_shards(config, n, progress)) {
            merge_into(total, std::move(part));
        }
        report.sizes.push_back(summarize(n, std::move(total)));
    }
    return report;
}

std::map<DistanceSet, std::vector<std::size_t>> bucket_by_distance_set(
    const std::vector<std::pair<LabeledGraph, DistanceMatrix>>& spaces) {
    std::map<DistanceSet, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const auto& dm = spaces[i].second;
        if (classify_metric(dm) != MetricClass::ultrametric || !is_gh(dm)) {
            throw PreconditionError("bucketing expects ultrametric GH spaces");
        }
        buckets[distance_set(dm)].push_back(i);
    }
    return buckets;
}

bool verify_counterexample(const Counterexample& c) {
    const auto a = oracle_distance_matrix(c.first);
    const auto b = oracle_distance_matrix(c.second);
    if (classify_metric(a) != MetricClass::ultrametric || classify_metric(b) != MetricClass::ultrametric) {
        return false;
    }
    if (!is_gh(a) || !is_gh(b)) {
        return false;
    }
    if (!(distance_set(a) == c.distances) || !(distance_set(b) == c.distances)) {
        return false;
    }
    if (canonical_form(dendrogram(a)) != c.first_form || canonical_form(dendrogram(b)) != c.second_form) {
        return false;
    }
    return !are_isometric(a, b);
}

}  // namespace ultragraph
