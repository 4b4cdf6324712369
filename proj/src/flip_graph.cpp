#include "hyperposet/flip_graph.hpp"

#include <algorithm>

namespace hyperposet {

FlipGraph FlipGraph::build(const Hypergraph& h, const EnumerationBudget& budget) {
    FlipGraph g;
    g.nodes_ = enumerate_acyclic_by_filter(h, budget); // lex order
    int count = g.node_count();
    g.out_.assign(static_cast<size_t>(count), {});

    std::vector<std::vector<std::pair<FlipSpec, Orientation>>> neighbors(
        static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int id = 0; id < count; ++id) {
        neighbors[static_cast<size_t>(id)] = increasing_flip_neighbors(h, g.node(id));
    }

    for (int id = 0; id < count; ++id) {
        for (const auto& [flip, target] : neighbors[static_cast<size_t>(id)]) {
            int to = g.find_node(target);
            if (to < 0) throw Error("internal: flip target is not a node");
            g.out_[static_cast<size_t>(id)].push_back(static_cast<int>(g.edges_.size()));
            g.edges_.push_back(FlipEdge{id, to, flip});
        }
    }
    return g;
}

int FlipGraph::find_node(const Orientation& a) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), a);
    if (it != nodes_.end() && *it == a) return static_cast<int>(it - nodes_.begin());
    return -1;
}

int FlipGraph::node_id(const Orientation& a) const {
    int id = find_node(a);
    if (id < 0) throw DomainError("orientation is not a node of the flip graph (not acyclic?)");
    return id;
}

PosetOracle PosetOracle::build(const FlipGraph& g) {
    PosetOracle p;
    p.node_count_ = g.node_count();
    p.words_ = static_cast<size_t>((p.node_count_ + 63) / 64);
    p.up_.assign(static_cast<size_t>(p.node_count_) * p.words_, 0);
    p.down_.assign(static_cast<size_t>(p.node_count_) * p.words_, 0);

    auto set_bit = [&](std::vector<uint64_t>& rows, int a, int b) {
        rows[static_cast<size_t>(a) * p.words_ + static_cast<size_t>(b) / 64] |=
            uint64_t(1) << (static_cast<size_t>(b) % 64);
    };
    auto or_row = [&](std::vector<uint64_t>& rows, int dst, int src) {
        for (size_t w = 0; w < p.words_; ++w) {
            rows[static_cast<size_t>(dst) * p.words_ + w] |=
                rows[static_cast<size_t>(src) * p.words_ + w];
        }
    };

    // Lex node order is topological (edges increase source sequences), so
    // one reverse sweep fills up-sets and one forward sweep fills down-sets.
    for (int a = p.node_count_ - 1; a >= 0; --a) {
        set_bit(p.up_, a, a);
        for (int eid : g.out_edges(a)) or_row(p.up_, a, g.edges()[static_cast<size_t>(eid)].to);
    }
    for (int b = 0; b < p.node_count_; ++b) set_bit(p.down_, b, b);
    for (int a = 0; a < p.node_count_; ++a) {
        for (int eid : g.out_edges(a)) {
            or_row(p.down_, g.edges()[static_cast<size_t>(eid)].to, a);
        }
    }
    return p;
}

bool PosetOracle::bit(const std::vector<uint64_t>& rows, int a, int b) const {
    return (rows[static_cast<size_t>(a) * words_ + static_cast<size_t>(b) / 64] >>
            (static_cast<size_t>(b) % 64)) &
           1;
}

bool PosetOracle::leq(int a, int b) const { return bit(up_, a, b); }

std::vector<int> PosetOracle::up_set(int a) const {
    std::vector<int> out;
    for (int b = 0; b < node_count_; ++b) {
        if (bit(up_, a, b)) out.push_back(b);
    }
    return out;
}

std::vector<std::pair<int, int>> PosetOracle::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < node_count_; ++a) {
        for (int b = a + 1; b < node_count_; ++b) {
            if (!bit(up_, a, b)) continue;
            bool is_cover = true;
            for (int w = a + 1; w < b && is_cover; ++w) {
                if (bit(up_, a, w) && bit(up_, w, b)) is_cover = false;
            }
            if (is_cover) out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

// Bounds of {a, b} under rows (& of the two rows); the extremum, when it
// exists, is the unique u among them whose row equals the whole set.
std::optional<int> extremum(const std::vector<uint64_t>& rows, size_t words, int count,
                            int a, int b) {
    std::vector<uint64_t> common(words);
    for (size_t w = 0; w < words; ++w) {
        common[w] = rows[static_cast<size_t>(a) * words + w] &
                    rows[static_cast<size_t>(b) * words + w];
    }
    for (int u = 0; u < count; ++u) {
        if (!((common[static_cast<size_t>(u) / 64] >> (static_cast<size_t>(u) % 64)) & 1)) continue;
        bool equal = true;
        for (size_t w = 0; w < words && equal; ++w) {
            equal = rows[static_cast<size_t>(u) * words + w] == common[w];
        }
        if (equal) return u; // unique: two such u would be mutually comparable
    }
    return std::nullopt;
}

} // namespace

std::optional<int> PosetOracle::join(int a, int b) const {
    return extremum(up_, words_, node_count_, a, b);
}

std::optional<int> PosetOracle::meet(int a, int b) const {
    return extremum(down_, words_, node_count_, a, b);
}

bool leq_by_closure(const PosetOracle& p, const FlipGraph& g,
                    const Orientation& a, const Orientation& b) {
    return p.leq(g.node_id(a), g.node_id(b));
}

bool leq_by_sources(const Orientation& a, const Orientation& b) {
    if (a.edge_count() != b.edge_count() || a.vertex_count() != b.vertex_count()) {
        throw DomainError("orientations of different hypergraph shapes are not comparable");
    }
    for (int e = 0; e < a.edge_count(); ++e) {
        if (a.source(e) > b.source(e)) return false;
    }
    return true;
}

OrderEquivalenceReport verify_order_equivalence(const FlipGraph& g, const PosetOracle& p) {
    OrderEquivalenceReport report;
    report.node_count = g.node_count();
    int count = g.node_count();
    report.pairs_checked = static_cast<long long>(count) * count;
#pragma omp parallel for schedule(static)
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            bool by_closure = p.leq(a, b);
            bool by_sources = leq_by_sources(g.node(a), g.node(b));
            if (by_closure != by_sources) {
#pragma omp critical
                report.counterexamples.emplace_back(a, b, by_closure, by_sources);
            }
        }
    }
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    return report;
}

OrderEquivalenceReport verify_order_equivalence(const Hypergraph& h, const EnumerationBudget& budget) {
    FlipGraph g = FlipGraph::build(h, budget);
    PosetOracle p = PosetOracle::build(g);
    return verify_order_equivalence(g, p);
}

LatticeResult is_lattice(const PosetOracle& p) {
    for (int a = 0; a < p.node_count(); ++a) {
        for (int b = a + 1; b < p.node_count(); ++b) {
            if (!p.join(a, b)) return {false, LatticeWitness{a, b, true}};
            if (!p.meet(a, b)) return {false, LatticeWitness{a, b, false}};
        }
    }
    return {true, std::nullopt};
}

} // namespace hyperposet
