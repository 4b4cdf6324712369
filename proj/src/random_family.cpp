#include "hyperposet/random_family.hpp"

#include <cmath>

namespace hyperposet {

namespace {

double uniform01(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

} // namespace

Hypergraph random_hypergraph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::vector<Vertex>> raw;
    for (const Hyperedge& e : all_subsets_min2(n)) {
        if (uniform01(rng) < p) raw.push_back(e);
    }
    return Hypergraph::build(n, raw);
}

std::vector<Hypergraph> random_family(int count, int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Hypergraph> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(random_hypergraph(n, p, rng));
    return out;
}

} // namespace hyperposet
