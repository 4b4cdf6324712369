#include "hyperposet/flip.hpp"

#include <string>

namespace hyperposet {

namespace {

void require_vertex(const Hypergraph& h, Vertex v) {
    if (v < 1 || v > h.vertex_count()) {
        throw DomainError("vertex " + std::to_string(v) + " out of range [1, " +
                          std::to_string(h.vertex_count()) + "]");
    }
}

void collect_paths(const InducedDigraph& g, Vertex at, Vertex target,
                   VertexPath& prefix, std::vector<VertexPath>& out) {
    if (at == target) {
        out.push_back(prefix);
        return;
    }
    for (Vertex w : g.neighbors(at)) { // ascending, so paths come out in lex order
        prefix.push_back(w);
        collect_paths(g, w, target, prefix, out);
        prefix.pop_back();
    }
}

bool reaches(const InducedDigraph& g, Vertex from, Vertex target, std::vector<char>& visited) {
    if (from == target) return true;
    if (visited[static_cast<size_t>(from)]) return false;
    visited[static_cast<size_t>(from)] = 1;
    for (Vertex w : g.neighbors(from)) {
        if (reaches(g, w, target, visited)) return true;
    }
    return false;
}

} // namespace

std::vector<VertexPath> enumerate_paths(const InducedDigraph& g, Vertex i, Vertex j) {
    std::vector<VertexPath> out;
    VertexPath prefix{i};
    collect_paths(g, i, j, prefix, out);
    return out;
}

std::vector<VertexPath> enumerate_paths(const Hypergraph& h, const Orientation& a,
                                        Vertex i, Vertex j) {
    require_vertex(h, i);
    require_vertex(h, j);
    InducedDigraph g = induced_digraph(h, a);
    if (!is_acyclic(g)) throw DomainError("path enumeration requires an acyclic orientation");
    return enumerate_paths(g, i, j);
}

bool exists_non_edge_path(const InducedDigraph& g, Vertex i, Vertex j) {
    // A non-edge path is i -> v -> ... -> j with v != j; in a DAG no path
    // passes through j and continues, so this case split is exhaustive.
    for (Vertex v : g.neighbors(i)) {
        if (v == j) continue;
        std::vector<char> visited(static_cast<size_t>(g.n) + 1, 0);
        if (reaches(g, v, j, visited)) return true;
    }
    return false;
}

bool exists_non_edge_path(const Hypergraph& h, const Orientation& a, Vertex i, Vertex j) {
    require_vertex(h, i);
    require_vertex(h, j);
    InducedDigraph g = induced_digraph(h, a);
    if (!is_acyclic(g)) throw DomainError("path search requires an acyclic orientation");
    return exists_non_edge_path(g, i, j);
}

bool flip_defined(const Hypergraph& h, const Orientation& a, FlipSpec f) {
    if (f.i == f.j) return false;
    bool any_source_i = false;
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (!h.edge_contains(e, f.i) || !h.edge_contains(e, f.j)) continue;
        if (a.source(e) == f.i) any_source_i = true;
        if (a.source(e) == f.j) return false;
    }
    return any_source_i;
}

Orientation apply_flip(const Hypergraph& h, const Orientation& a, FlipSpec f) {
    if (!flip_defined(h, a, f)) {
        throw DomainError("flip undefined here: (" + std::to_string(f.i) + ", " +
                          std::to_string(f.j) + ")");
    }
    std::vector<Vertex> sources = a.sources();
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (sources[static_cast<size_t>(e)] == f.i && h.edge_contains(e, f.j)) {
            sources[static_cast<size_t>(e)] = f.j;
        }
    }
    return Orientation::from_sources(h, std::move(sources));
}

bool is_pre_coherent(const Hypergraph& h, const Orientation& a, FlipSpec f) {
    if (!flip_defined(h, a, f)) {
        throw DomainError("flip undefined here: (" + std::to_string(f.i) + ", " +
                          std::to_string(f.j) + ")");
    }
    return !exists_non_edge_path(h, a, f.i, f.j);
}

bool is_coherent(const Hypergraph& h, const Orientation& a, FlipSpec f) {
    return is_acyclic(h, apply_flip(h, a, f));
}

std::vector<std::pair<FlipSpec, Orientation>> increasing_flip_neighbors(
    const Hypergraph& h, const Orientation& a) {
    std::vector<std::pair<FlipSpec, Orientation>> out;
    int n = h.vertex_count();
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
            FlipSpec f{i, j};
            if (!flip_defined(h, a, f)) continue;
            Orientation b = apply_flip(h, a, f);
            if (is_acyclic(h, b)) out.emplace_back(f, std::move(b));
        }
    }
    return out;
}

} // namespace hyperposet
