#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hyperposet/hypergraph.hpp"

namespace hyperposet {

/// Each subset of [n] with size >= 2 is included independently with
/// probability p. Draws are platform-independent (53-bit uniforms from
/// mt19937_64), so a seed pins the family everywhere.
Hypergraph random_hypergraph(int n, double p, std::mt19937_64& rng);

/// `count` hypergraphs drawn sequentially from one seeded stream.
std::vector<Hypergraph> random_family(int count, int n, double p, uint64_t seed);

} // namespace hyperposet
