#include "hyperposet/source_path.hpp"

#include <algorithm>

#include <json.hpp>

#include "hyperposet/flip_graph.hpp"

namespace hyperposet {

namespace {

void require_comparable_pair(const Hypergraph& h, const Orientation& a, const Orientation& b) {
    if (static_cast<int>(a.sources().size()) != h.edge_count() ||
        static_cast<int>(b.sources().size()) != h.edge_count()) {
        throw DomainError("orientation does not match the hypergraph shape");
    }
    if (!leq_by_sources(a, b)) throw DomainError("source sequences are not comparable");
    if (a == b) throw DomainError("orientations are equal");
}

} // namespace

std::vector<HyperedgeId> candidate_set(const Hypergraph& h, const Orientation& a,
                                       const Orientation& b, Vertex i,
                                       std::optional<Vertex> member) {
    std::vector<HyperedgeId> out;
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (a.source(e) != i) continue;
        if (!(a.source(e) < b.source(e))) continue;
        if (member && !h.edge_contains(e, *member)) continue;
        out.push_back(e);
    }
    return out;
}

HyperedgeId small_hyperedge(const Hypergraph& h, const Orientation& a, const Orientation& b,
                            Vertex i, std::optional<Vertex> member) {
    require_comparable_pair(h, a, b);
    std::vector<HyperedgeId> candidates = candidate_set(h, a, b, i, member);
    if (candidates.empty()) {
        throw DomainError("empty candidate set S_{" + std::to_string(i) +
                          (member ? "," + std::to_string(*member) : std::string()) + "}");
    }
    HyperedgeId best = candidates[0]; // canonical order; first minimum wins ties
    for (HyperedgeId e : candidates) {
        if (b.source(e) < b.source(best)) best = e;
    }
    return best;
}

std::pair<HyperedgeId, MinimizedChain> minimized_hyperedge(
    const Hypergraph& h, const Orientation& a, const Orientation& b, Vertex i, Vertex member) {
    MinimizedChain chain;
    Vertex constraint = member;
    HyperedgeId edge = small_hyperedge(h, a, b, i, constraint);
    chain.steps.push_back({constraint, edge, b.source(edge)});
    // h_k = B(H^(k)) lies in H^(k), so every later candidate set contains
    // the previous hyperedge and the B values cannot increase.
    for (;;) {
        constraint = b.source(edge);
        HyperedgeId next = small_hyperedge(h, a, b, i, constraint);
        chain.steps.push_back({constraint, next, b.source(next)});
        if (b.source(next) == b.source(edge)) {
            chain.stabilization_index = static_cast<int>(chain.steps.size()) - 1;
            return {edge, chain};
        }
        edge = next;
    }
}

bool is_simple_tuple(const Hypergraph& h, const Orientation& a, const Orientation& b,
                     Vertex i, Vertex j, const VertexPath& lambda) {
    if (lambda.size() < 3 || lambda.front() != i || lambda.back() != j) {
        throw DomainError("lambda is not a non-edge path from i to j");
    }
    InducedDigraph g = induced_digraph(h, a);
    for (size_t t = 0; t + 1 < lambda.size(); ++t) {
        const auto& nbrs = g.neighbors(lambda[t]);
        if (!std::binary_search(nbrs.begin(), nbrs.end(), lambda[t + 1])) {
            throw DomainError("lambda is not a path in the orientation");
        }
    }
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (a.source(e) == b.source(e)) continue;
        for (size_t t = 0; t + 1 < lambda.size(); ++t) {
            if (lambda[t] != a.source(e) || !h.edge_contains(e, lambda[t + 1])) continue;
            // e qualifies along lambda
            if (a.source(e) != i || b.source(e) == j) return false;
        }
    }
    return true;
}

namespace {

// Simplicity re-test without path validation, for the hot loop: scans
// every changed hyperedge whose source starts an edge of lambda.
bool tuple_is_simple(const Hypergraph& h, const Orientation& a, const Orientation& b,
                     Vertex i, Vertex j, const VertexPath& lambda) {
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (a.source(e) == b.source(e)) continue;
        for (size_t t = 0; t + 1 < lambda.size(); ++t) {
            if (lambda[t] != a.source(e) || !h.edge_contains(e, lambda[t + 1])) continue;
            if (a.source(e) != i || b.source(e) == j) return false;
        }
    }
    return true;
}

std::vector<VertexPath> non_edge_paths(const InducedDigraph& g, Vertex i, Vertex j) {
    std::vector<VertexPath> all = enumerate_paths(g, i, j);
    std::erase_if(all, [](const VertexPath& p) { return p.size() < 3; });
    return all; // lex order preserved
}

} // namespace

SourcePath construct_source_path(const Hypergraph& h, const Orientation& a,
                                 const Orientation& b, Vertex i, Vertex j) {
    require_comparable_pair(h, a, b);
    InducedDigraph g = induced_digraph(h, a);
    if (!is_acyclic(g) || !is_acyclic(h, b)) {
        throw DomainError("source paths require acyclic orientations");
    }

    HyperedgeId entry = small_hyperedge(h, a, b, i);
    if (b.source(entry) != j) {
        throw DomainError("entry flip target must be B(small hyperedge of S_i)");
    }
    if (!exists_non_edge_path(g, i, j)) {
        throw DomainError("entry flip is coherent; flip directly instead of building a source path");
    }

    SourcePath sp;
    sp.path = {i};
    HyperedgeId current_edge = entry;
    {
        TraceStep s;
        s.kind = TraceStep::Kind::Small;
        s.i = i;
        s.j = j;
        s.edge = entry;
        sp.trace.push_back(std::move(s));
    }

    // The construction always terminates; the bound only guards regressions.
    // Appends are limited by the path length, so they get their own n slack.
    long long remaining = static_cast<long long>(h.vertex_count()) *
                              std::max(1, h.edge_count()) +
                          h.vertex_count() + 8;

    for (;;) {
        if (--remaining < 0) {
            sp.flagged = true;
            throw Error("source path exceeded the instrumented iteration bound");
        }
        if (!exists_non_edge_path(g, i, j)) break;

        std::vector<VertexPath> paths = non_edge_paths(g, i, j);
        auto not_simple = std::find_if(paths.begin(), paths.end(), [&](const VertexPath& p) {
            return !tuple_is_simple(h, a, b, i, j, p);
        });

        if (not_simple != paths.end()) {
            const VertexPath& lambda = *not_simple;
            // First vertex i' != i along lambda that is the source of a
            // changed hyperedge containing its successor in lambda.
            size_t pos = 0;
            std::vector<HyperedgeId> witnesses;
            for (size_t t = 1; t + 1 < lambda.size() && witnesses.empty(); ++t) {
                for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
                    if (a.source(e) == b.source(e)) continue;
                    if (a.source(e) == lambda[t] && h.edge_contains(e, lambda[t + 1])) {
                        witnesses.push_back(e);
                        pos = t;
                    }
                }
            }
            if (witnesses.empty()) {
                // impossible for a non-simple tuple (every violating
                // hyperedge with source i forces one with another source)
                sp.flagged = true;
                throw Error("no vertex i' found along a non-simple path");
            }
            Vertex i_prime = lambda[pos];

            TraceStep append;
            append.kind = TraceStep::Kind::Append;
            append.i = i;
            append.j = i_prime;
            append.lambda = lambda;
            append.segment.assign(lambda.begin() + 1, lambda.begin() + static_cast<long>(pos) + 1);
            append.witnesses = witnesses;
            sp.path.insert(sp.path.end(), append.segment.begin(), append.segment.end());
            sp.trace.push_back(std::move(append));

            i = i_prime;
            current_edge = small_hyperedge(h, a, b, i);
            j = b.source(current_edge);

            TraceStep small;
            small.kind = TraceStep::Kind::Small;
            small.i = i;
            small.j = j;
            small.edge = current_edge;
            sp.trace.push_back(std::move(small));
        } else {
            const VertexPath& lambda = paths.front(); // lex-smallest; all are simple
            Vertex hop = lambda[1];
            if (candidate_set(h, a, b, i, hop).empty()) {
                // A simple non-edge path always yields a candidate through
                // its second vertex; exit and flag rather than guess.
                sp.flagged = true;
                break;
            }
            auto [edge, chain] = minimized_hyperedge(h, a, b, i, hop);
            current_edge = edge;
            j = b.source(edge);

            TraceStep mini;
            mini.kind = TraceStep::Kind::Minimized;
            mini.i = i;
            mini.j = j;
            mini.constraint = hop;
            mini.edge = edge;
            mini.lambda = lambda;
            mini.chain = std::move(chain);
            sp.trace.push_back(std::move(mini));
        }
    }

    sp.final_i = i;
    sp.final_j = j;
    sp.final_edge = current_edge;
    return sp;
}

CoherentFlipResult find_coherent_flip(const Hypergraph& h, const Orientation& a,
                                      const Orientation& b) {
    if (a == b) throw DomainError("orientations are equal; no flip needed");
    require_comparable_pair(h, a, b);
    if (!is_acyclic(h, a) || !is_acyclic(h, b)) {
        throw DomainError("both orientations must be acyclic");
    }

    Vertex i = 0;
    for (Vertex v = 1; v <= h.vertex_count() && i == 0; ++v) {
        if (!candidate_set(h, a, b, v).empty()) i = v;
    }
    HyperedgeId entry = small_hyperedge(h, a, b, i);
    Vertex j = b.source(entry);

    FlipSpec flip{i, j};
    std::optional<SourcePath> sp;
    if (!is_coherent(h, a, flip)) {
        sp = construct_source_path(h, a, b, i, j);
        if (sp->flagged) throw Error("source path trace flagged for review");
        flip = FlipSpec{sp->final_i, sp->final_j};
        // End-state of the construction: only edges between the pair remain.
        if (exists_non_edge_path(h, a, flip.i, flip.j)) {
            throw Error("internal: non-edge path survives at the source-path end");
        }
        TraceStep step;
        step.kind = TraceStep::Kind::Flip;
        step.i = flip.i;
        step.j = flip.j;
        step.edge = sp->final_edge;
        sp->trace.push_back(std::move(step));
    }

    Orientation next = apply_flip(h, a, flip);
    if (!is_acyclic(h, next) || !leq_by_sources(a, next) || a == next ||
        !leq_by_sources(next, b)) {
        throw Error("internal: flip violates the sandwich guarantee");
    }
    return {flip, std::move(next), std::move(sp)};
}

std::vector<FlipStep> flip_sequence(const Hypergraph& h, const Orientation& a,
                                    const Orientation& b) {
    if (!leq_by_sources(a, b)) {
        for (int e = 0; e < a.edge_count(); ++e) {
            if (a.source(e) > b.source(e)) {
                throw DomainError("sources not comparable: hyperedge " + format_edge(h.edge(e)) +
                                  " has A = " + std::to_string(a.source(e)) + " > B = " +
                                  std::to_string(b.source(e)));
            }
        }
    }
    std::vector<FlipStep> steps;
    Orientation current = a;
    while (!(current == b)) {
        CoherentFlipResult r = find_coherent_flip(h, current, b);
        current = r.next;
        steps.push_back({r.flip, std::move(r.next), std::move(r.source_path)});
    }
    return steps;
}

std::string trace_to_json(const Hypergraph& h, const SourcePath& sp) {
    nlohmann::json out = nlohmann::json::array();
    for (const TraceStep& s : sp.trace) {
        nlohmann::json js;
        switch (s.kind) {
        case TraceStep::Kind::Small:
            js["kind"] = "small";
            js["i"] = s.i;
            js["j"] = s.j;
            js["edge"] = h.edge(s.edge);
            break;
        case TraceStep::Kind::Append:
            js["kind"] = "append";
            js["from"] = s.i;
            js["to"] = s.j;
            js["segment"] = s.segment;
            js["lambda"] = s.lambda;
            {
                nlohmann::json w = nlohmann::json::array();
                for (HyperedgeId e : s.witnesses) w.push_back(h.edge(e));
                js["witnesses"] = std::move(w);
            }
            break;
        case TraceStep::Kind::Minimized:
            js["kind"] = "minimized";
            js["i"] = s.i;
            js["j"] = s.j;
            js["h"] = *s.constraint;
            js["lambda"] = s.lambda;
            js["edge"] = h.edge(s.edge);
            js["M"] = s.chain.stabilization_index;
            {
                nlohmann::json chain = nlohmann::json::array();
                for (const MinimizedChainStep& c : s.chain.steps) {
                    chain.push_back({{"h", c.h}, {"edge", h.edge(c.edge)}, {"b", c.b_value}});
                }
                js["chain"] = std::move(chain);
            }
            break;
        case TraceStep::Kind::Flip:
            js["kind"] = "flip";
            js["i"] = s.i;
            js["j"] = s.j;
            js["edge"] = h.edge(s.edge);
            break;
        }
        out.push_back(std::move(js));
    }
    nlohmann::json root;
    root["kappa"] = sp.path;
    root["flagged"] = sp.flagged;
    root["steps"] = std::move(out);
    return root.dump();
}

} // namespace hyperposet
