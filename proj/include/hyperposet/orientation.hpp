#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hyperposet/hypergraph.hpp"

namespace hyperposet {

/// A choice of source vertex for every stored hyperedge, indexed by
/// HyperedgeId. Hyperedge order (and hence position meaning) is the
/// canonical order of the owning hypergraph; the source sequence in that
/// order is the identity of the orientation. Immutable once built.
class Orientation {
public:
    /// Validates sources[e] in edges[e] for every stored hyperedge.
    static Orientation from_sources(const Hypergraph& h, std::vector<Vertex> sources);

    /// Fixture helper: sources given as (edge members, source) pairs in any
    /// order; every stored hyperedge must be covered exactly once.
    static Orientation from_edge_sources(
        const Hypergraph& h, const std::vector<std::pair<Hyperedge, Vertex>>& pairs);

    const std::vector<Vertex>& sources() const { return sources_; }
    Vertex source(HyperedgeId e) const { return sources_[static_cast<size_t>(e)]; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(sources_.size()); }

    long long source_sum() const;

    bool operator==(const Orientation& other) const { return sources_ == other.sources_; }
    // Lexicographic on the source sequence; the canonical node order.
    bool operator<(const Orientation& other) const { return sources_ < other.sources_; }

private:
    Orientation(int n, std::vector<Vertex> sources) : n_(n), sources_(std::move(sources)) {}

    int n_ = 0;
    std::vector<Vertex> sources_;
};

/// Arcs run source -> member, deduplicated; the direction paths travel.
/// Acyclicity agrees with the member -> source convention (global reversal).
struct InducedDigraph {
    int n = 0;
    std::vector<std::vector<Vertex>> out; // index 0 unused; lists sorted, unique

    const std::vector<Vertex>& neighbors(Vertex v) const { return out[static_cast<size_t>(v)]; }
};

InducedDigraph induced_digraph(const Hypergraph& h, const Orientation& a);

bool is_acyclic(const InducedDigraph& g);
bool is_acyclic(const Hypergraph& h, const Orientation& a);

/// O_pi: each hyperedge takes as source the member appearing earliest in
/// the one-line word pi(1), ..., pi(n). The result is always acyclic.
Orientation orientation_from_permutation(const Hypergraph& h, const std::vector<int>& pi);

struct EnumerationBudget {
    long long max_orientations = 10'000'000; // bound on the product of hyperedge sizes
    long long max_permutations = 362'880;    // bound on n! (default 9!)
};

/// All acyclic orientations by filtering the product of hyperedges, in
/// lexicographic order on source sequences. Throws BudgetError (with the
/// counted search-space size) when the product exceeds the budget.
std::vector<Orientation> enumerate_acyclic_by_filter(
    const Hypergraph& h, const EnumerationBudget& budget = {});

/// All acyclic orientations as the image { O_pi : pi in S_n }, same order
/// and (by the surjection property) same contents as the filter method.
std::vector<Orientation> enumerate_acyclic_by_surjection(
    const Hypergraph& h, const EnumerationBudget& budget = {});

// Single-threaded reference implementations, kept for testing and for the
// benchmark target. The public entry points above must match these exactly.
namespace serial {
std::vector<Orientation> enumerate_acyclic_by_filter(
    const Hypergraph& h, const EnumerationBudget& budget = {});
std::vector<Orientation> enumerate_acyclic_by_surjection(
    const Hypergraph& h, const EnumerationBudget& budget = {});
} // namespace serial

long long factorial(int n);

/// Permutation at `rank` (0-based) in lexicographic order on S_n.
std::vector<int> unrank_permutation(int n, long long rank);

} // namespace hyperposet
