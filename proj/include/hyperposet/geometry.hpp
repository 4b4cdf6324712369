#pragma once

#include <string>
#include <vector>

#include "hyperposet/flip_graph.hpp"

namespace hyperposet {

/// Integer coordinates of the polytope vertex realizing an acyclic
/// orientation: coords[v] = number of stored hyperedges with source v,
/// plus 1 for the implied singleton. With_singletons=false drops the
/// translation, for comparing shapes.
std::vector<int> vertex_coordinates(const Hypergraph& h, const Orientation& a,
                                    bool with_singletons = true);

/// omega = (n-1, n-3, ..., 3-n, 1-n), the generic direction orienting the
/// polytope skeleton. Indexed 0-based: omega[v-1] = n + 1 - 2v.
std::vector<int> omega_direction(int n);

struct GeometryViolation {
    int edge_index = -1;
    std::string reason;
};

struct GeometryReport {
    long long edges_checked = 0;
    int node_count = 0;
    std::vector<GeometryViolation> violations;
    bool injective = true;

    bool ok() const { return violations.empty() && injective; }
};

/// Per flip edge A -> B with label (i, j): the coordinate move must be
/// k * (e_j - e_i) with integer k >= 1, hence omega-decreasing; the vertex
/// map must be injective on nodes.
GeometryReport check_flip_geometry(const Hypergraph& h, const FlipGraph& g);

} // namespace hyperposet
