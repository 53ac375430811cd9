#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ultragraph/dendrogram.hpp"
#include "ultragraph/explorer.hpp"
#include "ultragraph/gh.hpp"
#include "ultragraph/io.hpp"
#include "ultragraph/metric.hpp"
#include "ultragraph/serialize.hpp"

namespace ultragraph::cli {

namespace {

/// Raised for input problems the library does not model (unreadable files,
/// bad flag values). Maps to exit 2 like the library's precondition errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

LabeledGraph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::string set_text(const DistanceSet& ds) {
    std::string s = "{";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        s += (i ? ", " : "") + ds.values()[i].str();
    }
    return s + "}";
}

std::string table_text(const DistanceMatrix& dm) {
    const std::size_t n = dm.size();
    std::size_t width = 0;
    for (std::size_t i = 0; i < n; ++i) {
        width = std::max(width, dm.id(i).size());
        for (std::size_t j = 0; j < n; ++j) {
            width = std::max(width, dm.at(i, j).str().size());
        }
    }
    auto cell = [&](const std::string& s) { return std::string(width - s.size() + 1, ' ') + s; };
    std::string out = std::string(width, ' ');
    for (std::size_t j = 0; j < n; ++j) {
        out += cell(dm.id(j));
    }
    out += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += std::string(width - dm.id(i).size(), ' ') + dm.id(i);
        for (std::size_t j = 0; j < n; ++j) {
            out += cell(dm.at(i, j).str());
        }
        out += "\n";
    }
    return out;
}

std::string matrix_text(const DistanceMatrix& dm, const std::string& format) {
    if (format == "csv") {
        return to_csv(dm);
    }
    if (format == "json") {
        return to_json(dm).dump(2) + "\n";
    }
    return table_text(dm);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string report_text(const GHReport& r) {
    std::ostringstream s;
    s << "vertices: " << r.vertex_count << "\n"
      << "edges: " << r.edge_count << "\n"
      << "classification: " << to_string(r.classification) << "\n"
      << "distance set: " << set_text(r.distances) << " (" << r.distances.size() << " values)\n";
    if (r.gh) {
        s << "gh: " << yes_no(*r.gh) << "\n";
    } else {
        s << "gh: n/a (space is not ultrametric)\n";
    }
    s << "gomory-hu |D| <= |X|: " << (r.gomory_hu_holds ? "holds" : "VIOLATED") << "\n"
      << "edge bound |D| <= |E|+1: " << (r.edge_bound_holds ? "holds" : "VIOLATED") << "\n";
    if (r.tree_equivalences) {
        const auto& t = *r.tree_equivalences;
        s << "tree conditions: gh=" << yes_no(t.gh) << " injective_weights=" << yes_no(t.injective_weights)
          << " edge_count_equality=" << yes_no(t.edge_count_equality)
          << " degree_sum_equality=" << yes_no(t.degree_sum_equality) << "\n";
    }
    return s.str();
}

DistanceMatrix ultrametric_or_throw(const LabeledGraph& g, const std::string& path) {
    auto dm = distance_matrix(g);
    if (classify_metric(dm) != MetricClass::ultrametric) {
        throw UsageError(path + ": space is not ultrametric (degenerate labeling); run `ultragraph quotient` first");
    }
    return dm;
}

std::vector<Rational> parse_universe(const std::string& csv) {
    std::vector<Rational> values;
    std::stringstream in(csv);
    for (std::string tok; std::getline(in, tok, ',');) {
        auto r = Rational::parse(tok);
        if (!r) {
            throw UsageError("malformed label value '" + tok + "' in --labels");
        }
        values.push_back(*r);
    }
    return values;
}

bool cycle_criterion(const WeightedGraph& wg, std::size_t cap) {
    const Graph& g = wg.graph();
    for (const auto& cycle : enumerate_cycles(g, cap)) {
        const auto& vs = cycle.vertices;
        std::vector<Rational> w;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            w.push_back(wg.weight(*g.edge_index(vs[i], vs[(i + 1) % vs.size()])));
        }
        const auto top = *std::max_element(w.begin(), w.end());
        if (std::count(w.begin(), w.end(), top) < 2) {
            return false;
        }
    }
    return true;
}

struct Options {
    std::string format = "text";
    std::vector<std::string> files;
    bool oracle = false;
    std::string root;
    std::size_t cap_paths = default_oracle_cap;
    std::size_t cap_cycles = default_cycle_cap;
    std::size_t max_n = 4;
    std::string labels = "1,2,3,4";
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::string mode = "exhaustive";
    std::size_t samples = 100;
    bool symmetry = false;
    std::string emit_dir;
};

int cmd_dist(const Options& o, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(o.files.at(0));
    const auto dm = distance_matrix(g);
    if (o.oracle) {
        const auto brute = oracle_distance_matrix(g, o.cap_paths);
        if (!(brute == dm)) {
            err << "oracle mismatch: path enumeration disagrees with the union-find sweep\n";
            return self_check;
        }
    }
    out << matrix_text(dm, o.format);
    return ok;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream&) {
    const auto g = load_graph(o.files.at(0));
    const auto report = analyze(g);
    if (o.format == "json") {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << report_text(report);
    }
    return report.gh.value_or(false) ? ok : negative;
}

int cmd_label(const Options& o, std::ostream& out, std::ostream&) {
    const auto g = load_graph(o.files.at(0));
    VertexId root = 0;
    if (!o.root.empty()) {
        const auto found = g.graph().find(o.root);
        if (!found) {
            throw UsageError("unknown root vertex " + o.root);
        }
        root = *found;
    }
    out << format_graph(g.relabeled(gh_labeling(g.graph(), root)));
    return ok;
}

int cmd_quotient(const Options& o, std::ostream& out, std::ostream&) {
    const auto g = load_graph(o.files.at(0));
    const auto dm = distance_matrix(g);
    const auto q = zero_quotient(dm);
    if (!(distance_set(q.matrix) == distance_set(dm))) {
        throw SelfCheckError("quotient changed the distance set");
    }
    if (o.format == "json") {
        nlohmann::json classes = nlohmann::json::array();
        for (std::size_t c = 0; c < q.representatives.size(); ++c) {
            nlohmann::json members = nlohmann::json::array();
            for (std::size_t v = 0; v < q.class_of.size(); ++v) {
                if (q.class_of[v] == c) {
                    members.push_back(dm.id(v));
                }
            }
            classes.push_back(std::move(members));
        }
        std::vector<std::string> reps;
        for (std::size_t r : q.representatives) {
            reps.push_back(dm.id(r));
        }
        nlohmann::json doc{{"representatives", reps},
                           {"classes", std::move(classes)},
                           {"distance_set", to_json(distance_set(q.matrix))},
                           {"quotient", to_json(q.matrix)}};
        out << doc.dump(2) << "\n";
        return ok;
    }
    if (o.format == "csv") {
        out << to_csv(q.matrix);
        return ok;
    }
    if (q.representatives.size() == dm.size()) {
        out << "space is already ultrametric; the quotient is the identity\n";
    }
    out << "representatives:";
    for (std::size_t r : q.representatives) {
        out << " " << dm.id(r);
    }
    out << "\ndistance set: " << set_text(distance_set(q.matrix)) << "\n" << table_text(q.matrix);
    return ok;
}

int cmd_realizable(const Options& o, std::ostream& out, std::ostream& err) {
    WeightedGraph wg = [&] {
        try {
            return parse_weighted_graph(read_file(o.files.at(0)));
        } catch (const ParseError& e) {
            throw UsageError(o.files.at(0) + ": " + e.what());
        }
    }();
    const auto verdict = is_weight_realizable(wg);
    if (o.oracle && cycle_criterion(wg, o.cap_cycles) != verdict.realizable) {
        err << "oracle mismatch: cycle criterion disagrees with the edge check\n";
        return self_check;
    }
    const Graph& g = wg.graph();
    if (o.format == "json") {
        nlohmann::json doc{{"realizable", verdict.realizable}};
        if (verdict.witness_edge) {
            const auto& e = g.edge(*verdict.witness_edge);
            doc["witness"] = {{"edge", {g.id(e.u), g.id(e.v)}},
                              {"weight", wg.weight(*verdict.witness_edge).str()},
                              {"minimax", verdict.witness_minimax->str()}};
        }
        out << doc.dump(2) << "\n";
    } else if (verdict.realizable) {
        out << "realizable: yes\n";
    } else {
        const auto& e = g.edge(*verdict.witness_edge);
        out << "realizable: no\n"
            << "witness edge: " << g.id(e.u) << " " << g.id(e.v) << " weight " << wg.weight(*verdict.witness_edge).str()
            << " minimax " << verdict.witness_minimax->str() << "\n";
    }
    return verdict.realizable ? ok : negative;
}

int cmd_canon(const Options& o, std::ostream& out, std::ostream&) {
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& path : o.files) {
        const auto dm = ultrametric_or_throw(load_graph(path), path);
        const auto d = dendrogram(dm);
        if (o.format == "json") {
            docs.push_back({{"file", path}, {"canonical_form", canonical_form(d)}, {"dendrogram", to_json(d)}});
        } else {
            out << canonical_form(d) << "\n";
        }
    }
    if (o.format == "json") {
        out << docs.dump(2) << "\n";
    }
    return ok;
}

int cmd_isometric(const Options& o, std::ostream& out, std::ostream&) {
    if (o.files.size() != 2) {
        throw UsageError("isometric takes exactly two graph files");
    }
    const auto a = ultrametric_or_throw(load_graph(o.files[0]), o.files[0]);
    const auto b = ultrametric_or_throw(load_graph(o.files[1]), o.files[1]);
    const bool same = are_isometric(a, b);
    out << yes_no(same) << "\n";
    return same ? ok : negative;
}

int cmd_explore(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.max_n = o.max_n;
    cfg.universe = parse_universe(o.labels);
    cfg.mode = o.mode == "sampled" ? LabelingMode::sampled : LabelingMode::exhaustive;
    cfg.seed = o.seed;
    cfg.samples_per_tree = o.samples;
    cfg.jobs = o.jobs;
    cfg.symmetry_reduction = o.symmetry;
    const auto report = search_conjecture(cfg, [&](std::string_view msg) { err << msg << "\n"; });
    for (const auto& size : report.sizes) {
        for (const auto& c : size.counterexamples) {
            if (!verify_counterexample(c)) {
                throw SelfCheckError("reported counterexample failed re-verification");
            }
        }
    }
    if (!o.emit_dir.empty()) {
        std::filesystem::create_directories(o.emit_dir);
        std::size_t k = 0;
        for (const auto& size : report.sizes) {
            for (const auto& c : size.counterexamples) {
                const auto stem = std::filesystem::path(o.emit_dir) / ("counterexample_" + std::to_string(++k));
                std::ofstream(stem.string() + "_first.graph") << format_graph(c.first);
                std::ofstream(stem.string() + "_second.graph") << format_graph(c.second);
            }
        }
    }
    out << to_json(report).dump(2) << "\n";
    return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ultrametrics generated by vertex-labeled graphs", "ultragraph"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats{"text", "json", "csv"};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };

    auto* dist = app.add_subcommand("dist", "Print the generated distance matrix");
    dist->add_option("graph", o.files, "Graph file ('-' for stdin)")->required()->expected(1);
    add_format(dist);
    dist->add_flag("--oracle", o.oracle, "Cross-check against path enumeration (exit 3 on mismatch)");
    dist->add_option("--cap-paths", o.cap_paths, "Vertex cap for the path-enumeration oracle");

    auto* check = app.add_subcommand("check", "Classify the space and report GH membership");
    check->add_option("graph", o.files, "Graph file")->required()->expected(1);
    add_format(check);

    auto* label = app.add_subcommand("label", "Emit a labeling that generates a GH-space");
    label->add_option("graph", o.files, "Graph file")->required()->expected(1);
    label->add_option("--root", o.root, "Root vertex of the level labeling (default: first vertex)");

    auto* quotient = app.add_subcommand("quotient", "Collapse zero-distance classes");
    quotient->add_option("graph", o.files, "Graph file")->required()->expected(1);
    add_format(quotient);

    auto* realizable = app.add_subcommand("realizable", "Decide whether edge weights extend to a pseudoultrametric");
    realizable->add_option("graph", o.files, "Weighted graph file")->required()->expected(1);
    add_format(realizable);
    realizable->add_flag("--oracle", o.oracle, "Cross-check against the cycle criterion (exit 3 on mismatch)");
    realizable->add_option("--cap-cycles", o.cap_cycles, "Vertex cap for cycle enumeration");

    auto* canon = app.add_subcommand("canon", "Print canonical dendrogram forms");
    canon->add_option("graphs", o.files, "Graph files")->required();
    add_format(canon);

    auto* isometric = app.add_subcommand("isometric", "Decide whether two generated spaces are isometric");
    isometric->add_option("graphs", o.files, "Two graph files")->required()->expected(2);

    auto* explore = app.add_subcommand("explore", "Search labeled trees for equal-distance-set, non-isometric GH pairs");
    explore->add_option("--max-n", o.max_n, "Largest tree size");
    explore->add_option("--labels", o.labels, "Comma-separated positive label universe");
    explore->add_option("--seed", o.seed, "Seed for sampled mode");
    explore->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    explore->add_option("--mode", o.mode, "Labeling mode")->check(CLI::IsMember({"exhaustive", "sampled"}));
    explore->add_option("--samples", o.samples, "Labelings per tree in sampled mode");
    explore->add_flag("--symmetry-reduction", o.symmetry, "Skip labelings equivalent under tree automorphisms");
    explore->add_option("--emit-dir", o.emit_dir, "Write counterexample graph files here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (dist->parsed()) return cmd_dist(o, out, err);
        if (check->parsed()) return cmd_check(o, out, err);
        if (label->parsed()) return cmd_label(o, out, err);
        if (quotient->parsed()) return cmd_quotient(o, out, err);
        if (realizable->parsed()) return cmd_realizable(o, out, err);
        if (canon->parsed()) return cmd_canon(o, out, err);
        if (isometric->parsed()) return cmd_isometric(o, out, err);
        if (explore->parsed()) return cmd_explore(o, out, err);
    } catch (const SelfCheckError& e) {
        err << "self-check failed: " << e.what() << "\n";
        return self_check;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return self_check;
    }
    return input_error;
}

}  // namespace ultragraph::cli
