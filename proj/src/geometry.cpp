#include "hyperposet/geometry.hpp"

#include <algorithm>

namespace hyperposet {

std::vector<int> vertex_coordinates(const Hypergraph& h, const Orientation& a,
                                    bool with_singletons) {
    std::vector<int> coords(static_cast<size_t>(h.vertex_count()), with_singletons ? 1 : 0);
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        ++coords[static_cast<size_t>(a.source(e) - 1)];
    }
    return coords;
}

std::vector<int> omega_direction(int n) {
    std::vector<int> omega(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) omega[static_cast<size_t>(v - 1)] = n + 1 - 2 * v;
    return omega;
}

GeometryReport check_flip_geometry(const Hypergraph& h, const FlipGraph& g) {
    GeometryReport report;
    report.node_count = g.node_count();
    report.edges_checked = static_cast<long long>(g.edges().size());

    std::vector<std::vector<int>> coords(static_cast<size_t>(g.node_count()));
    for (int id = 0; id < g.node_count(); ++id) {
        coords[static_cast<size_t>(id)] = vertex_coordinates(h, g.node(id));
    }

    std::vector<int> omega = omega_direction(h.vertex_count());
    int edge_count = static_cast<int>(g.edges().size());
#pragma omp parallel for schedule(static)
    for (int idx = 0; idx < edge_count; ++idx) {
        const FlipEdge& edge = g.edges()[static_cast<size_t>(idx)];
        const auto& va = coords[static_cast<size_t>(edge.from)];
        const auto& vb = coords[static_cast<size_t>(edge.to)];
        std::string reason;
        long long omega_dot = 0;
        int k = vb[static_cast<size_t>(edge.flip.j - 1)] - va[static_cast<size_t>(edge.flip.j - 1)];
        for (int v = 1; v <= h.vertex_count(); ++v) {
            int delta = vb[static_cast<size_t>(v - 1)] - va[static_cast<size_t>(v - 1)];
            omega_dot += static_cast<long long>(omega[static_cast<size_t>(v - 1)]) * delta;
            int expected = v == edge.flip.j ? k : (v == edge.flip.i ? -k : 0);
            if (delta != expected) reason = "move is not a multiple of e_j - e_i";
        }
        if (reason.empty() && k < 1) reason = "multiplier k < 1";
        if (reason.empty() && omega_dot >= 0) reason = "omega direction not decreasing";
        if (!reason.empty()) {
#pragma omp critical
            report.violations.push_back({idx, reason});
        }
    }
    std::sort(report.violations.begin(), report.violations.end(),
              [](const GeometryViolation& x, const GeometryViolation& y) {
                  return x.edge_index < y.edge_index;
              });

    std::vector<std::vector<int>> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    report.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    return report;
}

} // namespace hyperposet
