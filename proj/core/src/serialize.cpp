#include "ultragraph/serialize.hpp"

#include "ultragraph/io.hpp"

namespace ultragraph {

using nlohmann::json;

std::string to_csv(const DistanceMatrix& dm) {
    std::string out;
    const std::size_t n = dm.size();
    for (std::size_t i = 0; i < n; ++i) {
        out += (i ? "," : "") + dm.id(i);
    }
    out += "\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out += (j ? "," : "") + dm.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

json to_json(const DistanceMatrix& dm) {
    json rows = json::array();
    for (std::size_t i = 0; i < dm.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < dm.size(); ++j) {
            row.push_back(dm.at(i, j).str());
        }
        rows.push_back(std::move(row));
    }
    return json{{"vertices", std::vector<std::string>(dm.ids().begin(), dm.ids().end())}, {"matrix", std::move(rows)}};
}

DistanceMatrix distance_matrix_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("matrix") || !doc["vertices"].is_array() ||
        !doc["matrix"].is_array()) {
        throw PreconditionError("distance matrix JSON needs \"vertices\" and \"matrix\" arrays");
    }
    std::vector<std::string> ids;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) {
            throw PreconditionError("vertex ids must be strings");
        }
        ids.push_back(v.get<std::string>());
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : doc["matrix"]) {
        if (!row.is_array()) {
            throw PreconditionError("matrix rows must be arrays");
        }
        auto& out = rows.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) {
                throw PreconditionError("matrix entries must be rational strings");
            }
            auto value = Rational::parse(cell.get<std::string>());
            if (!value) {
                throw PreconditionError("malformed rational " + cell.get<std::string>());
            }
            out.push_back(*value);
        }
    }
    return DistanceMatrix::from_rows(std::move(ids), rows);
}

json to_json(const DistanceSet& ds) {
    json out = json::array();
    for (const auto& v : ds.values()) {
        out.push_back(v.str());
    }
    return out;
}

namespace {

json to_json(const TreeEquivalences& t) {
    return json{{"gh", t.gh},
                {"injective_weights", t.injective_weights},
                {"edge_count_equality", t.edge_count_equality},
                {"degree_sum_equality", t.degree_sum_equality}};
}

json to_json(const Counterexample& c) {
    return json{{"distance_set", to_json(c.distances)},
                {"first", {{"graph", format_graph(c.first)}, {"canonical_form", c.first_form}}},
                {"second", {{"graph", format_graph(c.second)}, {"canonical_form", c.second_form}}}};
}

}  // namespace

json to_json(const GHReport& report) {
    json out{{"vertex_count", report.vertex_count},
             {"edge_count", report.edge_count},
             {"classification", std::string(to_string(report.classification))},
             {"distance_set", to_json(report.distances)}};
    if (report.gh) {
        out["gh"] = *report.gh;
    }
    out["gomory_hu_holds"] = report.gomory_hu_holds;
    out["edge_bound_holds"] = report.edge_bound_holds;
    if (report.tree_equivalences) {
        out["tree_equivalences"] = to_json(*report.tree_equivalences);
    }
    return out;
}

json to_json(const Dendrogram& d) {
    const auto nodes = d.nodes();
    std::vector<json> built(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const auto& node = nodes[id];
        if (node.is_leaf()) {
            built[id] = json{{"leaf", d.point_ids()[id]}};
            continue;
        }
        json children = json::array();
        for (std::size_t c : node.children) {
            children.push_back(std::move(built[c]));
        }
        built[id] = json{{"height", node.height->str()}, {"children", std::move(children)}};
    }
    return std::move(built[d.root()]);
}

json to_json(const ConjectureReport& report) {
    const auto& cfg = report.config;
    json universe = json::array();
    for (const auto& r : cfg.universe) {
        universe.push_back(r.str());
    }
    json sizes = json::array();
    for (const auto& s : report.sizes) {
        json ces = json::array();
        for (const auto& c : s.counterexamples) {
            ces.push_back(to_json(c));
        }
        sizes.push_back(json{{"n", s.n},
                             {"trees", s.trees},
                             {"labelings", s.labelings},
                             {"nondegenerate", s.nondegenerate},
                             {"gh_spaces", s.gh_spaces},
                             {"distance_set_buckets", s.buckets},
                             {"pairs_tested", s.pairs_tested},
                             {"isometric_pairs", s.isometric_pairs},
                             {"counterexamples", std::move(ces)}});
    }
    json out{{"label_universe", std::move(universe)},
             {"mode", std::string(to_string(cfg.mode))},
             {"max_n", cfg.max_n},
             {"seed", cfg.seed},
             {"symmetry_reduction", cfg.symmetry_reduction},
             {"scope", "findings cover only trees labeled from label_universe"},
             {"sizes", std::move(sizes)},
             {"counterexample_count", report.counterexample_count()}};
    if (cfg.mode == LabelingMode::sampled) {
        out["samples_per_tree"] = cfg.samples_per_tree;
    }
    return out;
}

}  // namespace ultragraph
