#include "hyperposet/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hyperposet {

bool edge_less(const Hyperedge& a, const Hyperedge& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Hypergraph Hypergraph::build(int n, const std::vector<std::vector<Vertex>>& raw_edges) {
    if (n < 1) throw ValidationError("vertex count must be >= 1, got " + std::to_string(n));

    std::vector<Hyperedge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& raw : raw_edges) {
        if (raw.empty()) throw ValidationError("empty hyperedge");
        Hyperedge e = raw;
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (Vertex v : e) {
            if (v < 1 || v > n) {
                throw ValidationError("vertex " + std::to_string(v) + " out of range [1, " +
                                      std::to_string(n) + "] in hyperedge " + format_edge(e));
            }
        }
        if (e.size() == 1) continue; // singletons are implied, never stored
        edges.push_back(std::move(e));
    }

    std::sort(edges.begin(), edges.end(), edge_less);
    for (size_t k = 1; k < edges.size(); ++k) {
        if (edges[k] == edges[k - 1]) {
            throw ValidationError("duplicate hyperedge " + format_edge(edges[k]));
        }
    }
    return Hypergraph(n, std::move(edges));
}

bool Hypergraph::edge_contains(HyperedgeId e, Vertex v) const {
    const Hyperedge& members = edges_[static_cast<size_t>(e)];
    return std::binary_search(members.begin(), members.end(), v);
}

HyperedgeId Hypergraph::find_edge(const Hyperedge& members) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), members, edge_less);
    if (it != edges_.end() && *it == members) {
        return static_cast<HyperedgeId>(it - edges_.begin());
    }
    return -1;
}

Hypergraph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw ValidationError("expected an object with fields \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer()) throw ValidationError("field \"n\" must be an integer");
    if (!j["edges"].is_array()) throw ValidationError("field \"edges\" must be an array");

    int n = j["n"].get<int>();
    std::vector<std::vector<Vertex>> raw;
    for (const auto& je : j["edges"]) {
        if (!je.is_array()) throw ValidationError("each hyperedge must be an array of integers");
        std::vector<Vertex> e;
        for (const auto& jv : je) {
            if (!jv.is_number_integer()) throw ValidationError("hyperedge members must be integers");
            e.push_back(jv.get<int>());
        }
        raw.push_back(std::move(e));
    }
    return Hypergraph::build(n, raw);
}

std::string to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.vertex_count();
    j["edges"] = h.edges();
    return j.dump();
}

Hypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

std::vector<Hyperedge> all_subsets_min2(int n) {
    std::vector<Hyperedge> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Hyperedge e;
        for (int v = 1; v <= n; ++v) {
            if (mask & (1u << (v - 1))) e.push_back(v);
        }
        if (e.size() >= 2) out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), edge_less);
    return out;
}

std::string format_edge(const Hyperedge& e) {
    std::string s = "{";
    for (size_t k = 0; k < e.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(e[k]);
    }
    s += "}";
    return s;
}

} // namespace hyperposet
