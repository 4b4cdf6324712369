#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperposet/flip.hpp"

namespace hyperposet {

// The operations below are all relative to a fixed pair (A, B) of acyclic
// orientations of the same hypergraph with S_A <= S_B componentwise and
// A != B. Candidate sets: S_{i,h} = hyperedges H with A(H) = i, A(H) < B(H)
// and h in H; S_i drops the membership constraint.

/// Hyperedges of S_{i,h} (or S_i when h is absent), in canonical order.
std::vector<HyperedgeId> candidate_set(const Hypergraph& h, const Orientation& a,
                                       const Orientation& b, Vertex i,
                                       std::optional<Vertex> member = std::nullopt);

/// A hyperedge of the candidate set minimizing B(H); ties broken by
/// canonical hyperedge order. Throws DomainError on an empty set.
HyperedgeId small_hyperedge(const Hypergraph& h, const Orientation& a, const Orientation& b,
                            Vertex i, std::optional<Vertex> member = std::nullopt);

struct MinimizedChainStep {
    Vertex h = 0;          // constraint h_{k-1} used to pick this hyperedge
    HyperedgeId edge = -1; // H^(k)
    Vertex b_value = 0;    // B(H^(k)) = h_k
};

struct MinimizedChain {
    std::vector<MinimizedChainStep> steps; // runs through H^(M+1), witnessing stabilization
    int stabilization_index = 0;           // M

    HyperedgeId minimized_edge() const {
        return steps[static_cast<size_t>(stabilization_index - 1)].edge;
    }
};

/// Iterates h_k = B(H_{i,h_{k-1}}) to stabilization and returns the
/// minimized hyperedge H^(M) with the full chain. From k >= 1 on the
/// values B(H^(k)) are non-increasing, so the loop always terminates.
std::pair<HyperedgeId, MinimizedChain> minimized_hyperedge(
    const Hypergraph& h, const Orientation& a, const Orientation& b, Vertex i, Vertex member);

/// A tuple (i, j) with a non-edge path lambda from i to j is simple iff
/// every hyperedge H' with A(H') != B(H') and a consecutive pair
/// [A(H'), h'] of lambda with h' in H' satisfies A(H') = i and B(H') != j.
bool is_simple_tuple(const Hypergraph& h, const Orientation& a, const Orientation& b,
                     Vertex i, Vertex j, const VertexPath& lambda);

struct TraceStep {
    enum class Kind { Small, Append, Minimized, Flip };
    Kind kind = Kind::Small;
    Vertex i = 0;
    Vertex j = 0;
    std::optional<Vertex> constraint;       // h for small/minimized steps
    HyperedgeId edge = -1;                  // chosen hyperedge (small/minimized/flip)
    VertexPath segment;                     // appended subpath (append steps)
    VertexPath lambda;                      // the path driving the step
    std::vector<HyperedgeId> witnesses;     // every H' witnessing i' (append steps)
    MinimizedChain chain;                   // minimized steps only
};

struct SourcePath {
    VertexPath path;              // kappa, length >= 0
    std::vector<TraceStep> trace; // ordered log of the construction
    Vertex final_i = 0;           // last vertex of kappa
    Vertex final_j = 0;           // final flip target
    HyperedgeId final_edge = -1;  // the small/minimized hyperedge behind final_j
    bool flagged = false;         // empty candidate set mid-run (never expected)
};

/// Runs the source-path construction for the non-coherent entry flip
/// (i, j). Requires j = B(small_hyperedge(A, B, i)); throws DomainError if
/// the entry flip is already coherent (callers should flip directly).
/// Deterministic choices: the lexicographically smallest qualifying
/// non-edge path in both loops, canonical tie-breaks for hyperedges.
SourcePath construct_source_path(const Hypergraph& h, const Orientation& a,
                                 const Orientation& b, Vertex i, Vertex j);

struct CoherentFlipResult {
    FlipSpec flip;
    Orientation next;
    std::optional<SourcePath> source_path; // set when the entry flip was not coherent
};

/// Produces one coherent increasing flip with S_A < S_{A'} <= S_B and
/// sum(B - A') < sum(B - A). Entry point: i = smallest vertex with
/// S_i nonempty, j = B(small hyperedge of S_i); falls back to the source
/// path when that flip is not coherent. Throws DomainError when A == B.
CoherentFlipResult find_coherent_flip(const Hypergraph& h, const Orientation& a,
                                      const Orientation& b);

struct FlipStep {
    FlipSpec flip;
    Orientation next;
    std::optional<SourcePath> source_path;
};

/// Coherent increasing flips from A to B; empty when A == B. Every step
/// satisfies S_prev < S_next <= S_B; the length is at most sum(B - A).
/// Throws DomainError when the source sequences are not comparable.
std::vector<FlipStep> flip_sequence(const Hypergraph& h, const Orientation& a,
                                    const Orientation& b);

/// JSON array of trace steps, for golden-file regression.
std::string trace_to_json(const Hypergraph& h, const SourcePath& sp);

} // namespace hyperposet
