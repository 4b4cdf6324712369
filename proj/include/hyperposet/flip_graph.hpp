#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hyperposet/flip.hpp"

namespace hyperposet {

struct FlipEdge {
    int from = 0;
    int to = 0;
    FlipSpec flip;

    bool operator==(const FlipEdge&) const = default;
};

/// The increasing flip graph: nodes are all acyclic orientations in
/// canonical (lex) order, edges are coherent increasing flips. A DAG:
/// every edge strictly increases the source sequence componentwise.
class FlipGraph {
public:
    static FlipGraph build(const Hypergraph& h, const EnumerationBudget& budget = {});

    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Orientation>& nodes() const { return nodes_; }
    const Orientation& node(int id) const { return nodes_[static_cast<size_t>(id)]; }

    const std::vector<FlipEdge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int id) const { return out_[static_cast<size_t>(id)]; }

    /// Node id for this orientation, or -1 when it is not an acyclic
    /// orientation of the hypergraph.
    int find_node(const Orientation& a) const;

    /// find_node, throwing DomainError for unknown nodes.
    int node_id(const Orientation& a) const;

private:
    std::vector<Orientation> nodes_; // sorted lex on source sequences
    std::vector<FlipEdge> edges_;    // sorted by (from, i, j)
    std::vector<std::vector<int>> out_;
};

/// Reachability closure of a flip graph: per-node bitsets over the lex
/// node order, which is already topological. Reflexive and transitive;
/// antisymmetric because the graph is a DAG.
class PosetOracle {
public:
    static PosetOracle build(const FlipGraph& g);

    int node_count() const { return node_count_; }

    /// a <= b in the hypergraphic poset (b reachable by increasing flips).
    bool leq(int a, int b) const;

    /// Nodes of the up-set of a, ascending.
    std::vector<int> up_set(int a) const;

    /// Cover relations (transitive reduction), sorted by (from, to).
    std::vector<std::pair<int, int>> covers() const;

    /// Unique least upper bound of {a, b}, if any.
    std::optional<int> join(int a, int b) const;
    std::optional<int> meet(int a, int b) const;

private:
    bool bit(const std::vector<uint64_t>& rows, int a, int b) const;

    int node_count_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> up_;   // up_[a*words_ ..] = nodes reachable from a
    std::vector<uint64_t> down_; // down_[a*words_ ..] = nodes reaching a
};

bool leq_by_closure(const PosetOracle& p, const FlipGraph& g,
                    const Orientation& a, const Orientation& b);

/// Componentwise comparison of source sequences over stored hyperedges;
/// implied singletons tie trivially. Throws DomainError on shape mismatch.
bool leq_by_sources(const Orientation& a, const Orientation& b);

struct OrderEquivalenceReport {
    long long pairs_checked = 0;
    int node_count = 0;
    // (a, b, leq_by_closure, leq_by_sources) for every disagreeing pair
    std::vector<std::tuple<int, int, bool, bool>> counterexamples;

    bool ok() const { return counterexamples.empty(); }
};

/// Checks leq_by_closure == leq_by_sources on every ordered pair of
/// acyclic orientations of h.
OrderEquivalenceReport verify_order_equivalence(const Hypergraph& h, const EnumerationBudget& budget = {});
OrderEquivalenceReport verify_order_equivalence(const FlipGraph& g, const PosetOracle& p);

struct LatticeWitness {
    int a = 0;
    int b = 0;
    bool join_failed = false; // otherwise the meet failed
};

struct LatticeResult {
    bool is_lattice = false;
    std::optional<LatticeWitness> witness;
};

/// True iff every pair of nodes has a unique least upper bound and a
/// unique greatest lower bound; returns a witness pair on failure.
LatticeResult is_lattice(const PosetOracle& p);

} // namespace hyperposet
