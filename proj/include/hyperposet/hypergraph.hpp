#pragma once

#include <string>
#include <vector>

#include "hyperposet/errors.hpp"

namespace hyperposet {

using Vertex = int;                    // 1-based, in [1, n]
using Hyperedge = std::vector<Vertex>; // strictly increasing members
using HyperedgeId = int;               // 0-based index into Hypergraph::edges()

/// A hypergraph on the vertex set {1, ..., n}. Singleton hyperedges are
/// implied by convention and never stored; every stored hyperedge has
/// size >= 2. The edge list is kept in canonical order: by (size, lex),
/// members ascending. Values are immutable after construction.
class Hypergraph {
public:
    /// Canonicalizes raw input: members of each edge are sorted and
    /// deduplicated, singleton edges are dropped, and the edge list is
    /// sorted by (size, lex). Throws ValidationError on vertices outside
    /// [1, n], empty edges, or duplicate hyperedges after canonicalization.
    static Hypergraph build(int n, const std::vector<std::vector<Vertex>>& raw_edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Hyperedge& edge(HyperedgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    bool edge_contains(HyperedgeId e, Vertex v) const;

    /// Index of the edge with exactly these members (sorted), or -1.
    HyperedgeId find_edge(const Hyperedge& members) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph(int n, std::vector<Hyperedge> edges) : n_(n), edges_(std::move(edges)) {}

    int n_ = 0;
    std::vector<Hyperedge> edges_;
};

/// Canonical (size, lex) order on hyperedges.
bool edge_less(const Hyperedge& a, const Hyperedge& b);

/// Parses `{"n": ..., "edges": [[...], ...]}`. Singletons in the input are
/// accepted and dropped; validation errors are the same as in build().
Hypergraph parse_json(const std::string& text);

/// Canonical JSON form; parse_json(to_json(h)) == h.
std::string to_json(const Hypergraph& h);

Hypergraph load_hypergraph_file(const std::string& path);

/// Every subset of [n] with size >= 2, in canonical order. The exhaustive
/// test families iterate over all 2^k sub-collections of this list.
std::vector<Hyperedge> all_subsets_min2(int n);

std::string format_edge(const Hyperedge& e);

} // namespace hyperposet
