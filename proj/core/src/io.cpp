#include "ultragraph/io.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

namespace ultragraph {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto end = text.find('\n');
        std::string_view raw = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);

        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) {
            line.tokens.push_back(std::move(tok));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#') {
            continue;
        }
        lines.push_back(std::move(line));
    }
    return lines;
}

Rational parse_value(const std::string& token, std::size_t line, ParseErrorKind malformed, ParseErrorKind negative) {
    auto value = Rational::parse(token);
    if (!value) {
        throw ParseError(malformed, line, token);
    }
    if (value->sign() < 0) {
        throw ParseError(negative, line, token);
    }
    return *value;
}

struct Document {
    std::vector<std::string> ids;
    std::vector<Rational> labels;
    std::vector<Edge> edges;
    std::vector<Rational> weights;
};

Document read_document(std::string_view text, bool weighted) {
    const auto lines = tokenize(text);
    Document doc;
    std::unordered_map<std::string, VertexId> index;

    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] != "v") {
            continue;
        }
        const bool arity_ok = weighted ? (t.size() == 2 || t.size() == 3) : t.size() == 3;
        if (!arity_ok) {
            throw ParseError(ParseErrorKind::syntax, line.number,
                             weighted ? "expected: v <id> [label]" : "expected: v <id> <label>");
        }
        if (!index.emplace(t[1], doc.ids.size()).second) {
            throw ParseError(ParseErrorKind::duplicate_vertex, line.number, t[1]);
        }
        doc.ids.push_back(t[1]);
        if (!weighted) {
            doc.labels.push_back(
                parse_value(t[2], line.number, ParseErrorKind::malformed_label, ParseErrorKind::negative_label));
        }
    }

    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "v") {
            continue;
        }
        if (t[0] != "e") {
            throw ParseError(ParseErrorKind::syntax, line.number, "unknown directive " + t[0]);
        }
        const std::size_t arity = weighted ? 4 : 3;
        if (t.size() != arity) {
            throw ParseError(ParseErrorKind::syntax, line.number,
                             weighted ? "expected: e <id> <id> <weight>" : "expected: e <id> <id>");
        }
        for (std::size_t k = 1; k <= 2; ++k) {
            if (!index.count(t[k])) {
                throw ParseError(ParseErrorKind::undeclared_endpoint, line.number, t[k]);
            }
        }
        const VertexId u = index.at(t[1]);
        const VertexId v = index.at(t[2]);
        if (u == v) {
            throw ParseError(ParseErrorKind::self_loop, line.number, t[1]);
        }
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            throw ParseError(ParseErrorKind::duplicate_edge, line.number, t[1] + " " + t[2]);
        }
        doc.edges.push_back({u, v});
        if (weighted) {
            doc.weights.push_back(
                parse_value(t[3], line.number, ParseErrorKind::malformed_weight, ParseErrorKind::negative_weight));
        }
    }
    if (doc.ids.empty()) {
        throw ParseError(ParseErrorKind::syntax, 0, "no vertices declared");
    }
    return doc;
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
    auto doc = read_document(text, false);
    return LabeledGraph(Graph(std::move(doc.ids), std::move(doc.edges)), std::move(doc.labels));
}

WeightedGraph parse_weighted_graph(std::string_view text) {
    auto doc = read_document(text, true);
    return WeightedGraph(Graph(std::move(doc.ids), std::move(doc.edges)), std::move(doc.weights));
}

std::string format_graph(const LabeledGraph& g) {
    std::string out;
    const Graph& graph = g.graph();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        out += "v " + graph.id(v) + " " + g.label(v).str() + "\n";
    }
    for (const auto& e : graph.edges()) {
        out += "e " + graph.id(e.u) + " " + graph.id(e.v) + "\n";
    }
    return out;
}

std::string format_weighted_graph(const WeightedGraph& g) {
    std::string out;
    const Graph& graph = g.graph();
    for (VertexId v = 0; v < graph.vertex_count(); ++v) {
        out += "v " + graph.id(v) + "\n";
    }
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
        const auto& e = graph.edge(i);
        out += "e " + graph.id(e.u) + " " + graph.id(e.v) + " " + g.weight(i).str() + "\n";
    }
    return out;
}

}  // namespace ultragraph
