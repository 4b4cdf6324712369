#pragma once

// Hand-checked golden fixtures. Each keeps its edges in a fixed listing
// order so known source sequences can be written down directly and mapped
// onto the canonical order by from_edge_sources.

#include <vector>

#include "hyperposet/orientation.hpp"

namespace fixtures {

using hyperposet::Hyperedge;
using hyperposet::Hypergraph;
using hyperposet::Orientation;
using hyperposet::Vertex;

struct Fixture {
    Hypergraph h;
    std::vector<Hyperedge> listed_edges; // original listing order

    Orientation orientation(const std::vector<Vertex>& listed_sources) const {
        std::vector<std::pair<Hyperedge, Vertex>> pairs;
        for (size_t k = 0; k < listed_edges.size(); ++k) {
            pairs.emplace_back(listed_edges[k], listed_sources[k]);
        }
        return Orientation::from_edge_sources(h, pairs);
    }
};

inline Fixture make(int n, std::vector<Hyperedge> listed) {
    std::vector<std::vector<Vertex>> raw(listed.begin(), listed.end());
    return Fixture{Hypergraph::build(n, raw), std::move(listed)};
}

// {12, 235, 34, 45}: the non-pre-coherent flip (2, 5) example.
inline Fixture flip25() { return make(5, {{1, 2}, {2, 3, 5}, {3, 4}, {4, 5}}); }

// {1245, 23, 35, 46, 356}: four paths from vertex 1 to vertex 5.
inline Fixture paths15() { return make(6, {{1, 2, 4, 5}, {2, 3}, {3, 5}, {4, 6}, {3, 5, 6}}); }

// {12, 34, 234}: the running poset example (8 acyclic orientations).
inline Fixture poset8() { return make(4, {{1, 2}, {3, 4}, {2, 3, 4}}); }

// {157, 147, 17, 1236, 134}: the minimized-hyperedge chain example. The
// companion target sequence (5,4,7,2,3) is listed in this order.
inline Fixture minimized17() {
    return make(7, {{1, 5, 7}, {1, 4, 7}, {1, 7}, {1, 2, 3, 6}, {1, 3, 4}});
}

// Ten pairs on [8]: the simple-tuple example with A = O_13465782 and
// B = O_34567821.
inline Fixture simple12() {
    return make(8, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {4, 5}, {2, 5}, {1, 6}, {6, 7}, {7, 8},
                    {2, 8}});
}

// {123, 34, 245, 46, 67, 57}: the worked source path kappa = [1,3,4,6]
// with A = O_1346725 and B = O_7523416.
inline Fixture kappa1346() {
    return make(7, {{1, 2, 3}, {3, 4}, {2, 4, 5}, {4, 6}, {6, 7}, {5, 7}});
}

// {12, 145, 134, 127, 25, 37}: the two-round minimized-hyperedge run with
// A = O_1673452 and B = O_6734521.
inline Fixture tworounds() {
    return make(7, {{1, 2}, {1, 4, 5}, {1, 3, 4}, {1, 2, 7}, {2, 5}, {3, 7}});
}

// {123, 13, 124}: the Minkowski sum example; nine polytope vertices.
inline Fixture minkowski9() { return make(4, {{1, 2, 3}, {1, 3}, {1, 2, 4}}); }

} // namespace fixtures
