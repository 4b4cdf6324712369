#include "hyperposet/export.hpp"

#include <sstream>

#include <json.hpp>

#include "hyperposet/geometry.hpp"

namespace hyperposet {

std::string source_sequence_label(const Orientation& a) {
    std::string s = "(";
    for (int e = 0; e < a.edge_count(); ++e) {
        if (e) s += ",";
        s += std::to_string(a.source(e));
    }
    s += ")";
    return s;
}

std::string orientation_to_json(const Orientation& a) {
    nlohmann::json j = a.sources();
    return j.dump();
}

Orientation orientation_from_json(const Hypergraph& h, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed orientation JSON: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("orientation must be a JSON array of sources");
    std::vector<Vertex> sources;
    for (const auto& jv : j) {
        if (!jv.is_number_integer()) throw ValidationError("sources must be integers");
        sources.push_back(jv.get<int>());
    }
    return Orientation::from_sources(h, std::move(sources));
}

namespace {

std::string arrow_label(const FlipSpec& f) {
    return std::to_string(f.i) + "→" + std::to_string(f.j);
}

} // namespace

std::string dot_flip_graph(const FlipGraph& g) {
    std::ostringstream out;
    out << "digraph flipgraph {\n";
    out << "  rankdir=BT;\n";
    for (int id = 0; id < g.node_count(); ++id) {
        out << "  \"" << source_sequence_label(g.node(id)) << "\";\n";
    }
    for (const FlipEdge& e : g.edges()) {
        out << "  \"" << source_sequence_label(g.node(e.from)) << "\" -> \""
            << source_sequence_label(g.node(e.to)) << "\" [label=\"" << arrow_label(e.flip)
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string dot_poset(const FlipGraph& g, const PosetOracle& p) {
    std::ostringstream out;
    out << "digraph poset {\n";
    out << "  rankdir=BT;\n";
    for (int id = 0; id < g.node_count(); ++id) {
        out << "  \"" << source_sequence_label(g.node(id)) << "\";\n";
    }
    for (const auto& [from, to] : p.covers()) {
        out << "  \"" << source_sequence_label(g.node(from)) << "\" -> \""
            << source_sequence_label(g.node(to)) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string json_flip_graph(const FlipGraph& g) {
    nlohmann::json j;
    nlohmann::json nodes = nlohmann::json::array();
    for (const Orientation& node : g.nodes()) nodes.push_back(node.sources());
    j["nodes"] = std::move(nodes);
    nlohmann::json edges = nlohmann::json::array();
    for (const FlipEdge& e : g.edges()) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"flip", {e.flip.i, e.flip.j}}});
    }
    j["edges"] = std::move(edges);
    return j.dump(2);
}

std::string json_poset(const FlipGraph& g, const PosetOracle& p) {
    nlohmann::json j;
    nlohmann::json nodes = nlohmann::json::array();
    for (const Orientation& node : g.nodes()) nodes.push_back(node.sources());
    j["nodes"] = std::move(nodes);
    nlohmann::json covers = nlohmann::json::array();
    for (const auto& [from, to] : p.covers()) covers.push_back({from, to});
    j["covers"] = std::move(covers);
    return j.dump(2);
}

std::string csv_vertices(const Hypergraph& h, const FlipGraph& g) {
    std::ostringstream out;
    out << "sources,coordinates\n";
    for (int id = 0; id < g.node_count(); ++id) {
        const Orientation& node = g.node(id);
        out << "\"" << source_sequence_label(node) << "\",\"";
        std::vector<int> coords = vertex_coordinates(h, node);
        for (size_t k = 0; k < coords.size(); ++k) {
            if (k) out << ",";
            out << coords[k];
        }
        out << "\"\n";
    }
    return out.str();
}

std::string json_vertices(const Hypergraph& h, const FlipGraph& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (int id = 0; id < g.node_count(); ++id) {
        const Orientation& node = g.node(id);
        rows.push_back({{"sources", node.sources()},
                        {"coordinates", vertex_coordinates(h, node)}});
    }
    return rows.dump(2);
}

} // namespace hyperposet
