#pragma once

#include <vector>

#include "hyperposet/orientation.hpp"

namespace hyperposet {

/// A path [h_0, ..., h_m] in an orientation: consecutive vertices are
/// linked by a hyperedge whose source is the earlier one. Length 0 (a
/// single vertex) is allowed. In an acyclic orientation all entries are
/// distinct.
using VertexPath = std::vector<Vertex>;

struct FlipSpec {
    Vertex i = 0;
    Vertex j = 0; // i < j for increasing flips

    bool operator==(const FlipSpec&) const = default;
};

/// All simple directed paths from i to j in the induced digraph, in
/// lexicographic order on vertex sequences. Requires an acyclic
/// orientation (path sets need not be finite otherwise); throws
/// DomainError on a cyclic one. i == j yields the single length-0 path.
std::vector<VertexPath> enumerate_paths(const Hypergraph& h, const Orientation& a,
                                        Vertex i, Vertex j);
std::vector<VertexPath> enumerate_paths(const InducedDigraph& g, Vertex i, Vertex j);

/// True iff some path from i to j has length >= 2. DFS witness, no full
/// enumeration.
bool exists_non_edge_path(const Hypergraph& h, const Orientation& a, Vertex i, Vertex j);
bool exists_non_edge_path(const InducedDigraph& g, Vertex i, Vertex j);

/// The flip (i, j) is defined from A iff some hyperedge containing both
/// has source i and none has source j (the biconditional of the flip
/// definition is unsatisfiable otherwise). The second condition holds
/// automatically when A is acyclic and the first holds.
bool flip_defined(const Hypergraph& h, const Orientation& a, FlipSpec f);

/// Retargets every hyperedge containing {i, j} with source i to source j.
/// Throws DomainError ("flip undefined here") when flip_defined is false.
Orientation apply_flip(const Hypergraph& h, const Orientation& a, FlipSpec f);

/// Pre-coherent: the only paths from i to j in A are edges.
bool is_pre_coherent(const Hypergraph& h, const Orientation& a, FlipSpec f);

/// Coherent: the flipped orientation is acyclic. Equivalent to
/// pre-coherent for flips from an acyclic orientation.
bool is_coherent(const Hypergraph& h, const Orientation& a, FlipSpec f);

/// Out-edges of A in the increasing flip graph: every (f, B) with
/// f.i < f.j, the flip defined, and B = apply_flip(A, f) acyclic.
/// Ordered by (i, j).
std::vector<std::pair<FlipSpec, Orientation>> increasing_flip_neighbors(
    const Hypergraph& h, const Orientation& a);

} // namespace hyperposet
