#pragma once

#include <string>

#include "hyperposet/flip_graph.hpp"

namespace hyperposet {

std::string source_sequence_label(const Orientation& a);

/// Orientation as a JSON array of sources in canonical edge order.
std::string orientation_to_json(const Orientation& a);
Orientation orientation_from_json(const Hypergraph& h, const std::string& text);

/// DOT digraph of the increasing flip graph; nodes are quoted source
/// sequences in canonical order, edges labeled "i→j". Deterministic.
std::string dot_flip_graph(const FlipGraph& g);

/// DOT digraph of the hypergraphic poset: cover relations only.
std::string dot_poset(const FlipGraph& g, const PosetOracle& p);

std::string json_flip_graph(const FlipGraph& g);
std::string json_poset(const FlipGraph& g, const PosetOracle& p);

/// One row per acyclic orientation: source sequence and coordinates.
std::string csv_vertices(const Hypergraph& h, const FlipGraph& g);
std::string json_vertices(const Hypergraph& h, const FlipGraph& g);

} // namespace hyperposet
