#include "hyperposet/orientation.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperposet {

Orientation Orientation::from_sources(const Hypergraph& h, std::vector<Vertex> sources) {
    if (static_cast<int>(sources.size()) != h.edge_count()) {
        throw ValidationError("source sequence has " + std::to_string(sources.size()) +
                              " entries for " + std::to_string(h.edge_count()) + " hyperedges");
    }
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (!h.edge_contains(e, sources[static_cast<size_t>(e)])) {
            throw ValidationError("source " + std::to_string(sources[static_cast<size_t>(e)]) +
                                  " is not a member of hyperedge " + format_edge(h.edge(e)));
        }
    }
    return Orientation(h.vertex_count(), std::move(sources));
}

Orientation Orientation::from_edge_sources(
    const Hypergraph& h, const std::vector<std::pair<Hyperedge, Vertex>>& pairs) {
    std::vector<Vertex> sources(static_cast<size_t>(h.edge_count()), 0);
    for (const auto& [members, src] : pairs) {
        Hyperedge sorted = members;
        std::sort(sorted.begin(), sorted.end());
        HyperedgeId e = h.find_edge(sorted);
        if (e < 0) throw ValidationError("no such hyperedge: " + format_edge(sorted));
        if (sources[static_cast<size_t>(e)] != 0) {
            throw ValidationError("hyperedge given twice: " + format_edge(sorted));
        }
        sources[static_cast<size_t>(e)] = src;
    }
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        if (sources[static_cast<size_t>(e)] == 0) {
            throw ValidationError("no source given for hyperedge " + format_edge(h.edge(e)));
        }
    }
    return from_sources(h, std::move(sources));
}

long long Orientation::source_sum() const {
    return std::accumulate(sources_.begin(), sources_.end(), 0LL);
}

InducedDigraph induced_digraph(const Hypergraph& h, const Orientation& a) {
    InducedDigraph g;
    g.n = h.vertex_count();
    g.out.assign(static_cast<size_t>(g.n) + 1, {});
    for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
        Vertex s = a.source(e);
        for (Vertex v : h.edge(e)) {
            if (v != s) g.out[static_cast<size_t>(s)].push_back(v);
        }
    }
    for (auto& nbrs : g.out) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

// Kahn's algorithm.
bool is_acyclic(const InducedDigraph& g) {
    std::vector<int> in_degree(static_cast<size_t>(g.n) + 1, 0);
    for (Vertex v = 1; v <= g.n; ++v) {
        for (Vertex w : g.neighbors(v)) ++in_degree[static_cast<size_t>(w)];
    }
    std::vector<Vertex> stack;
    for (Vertex v = 1; v <= g.n; ++v) {
        if (in_degree[static_cast<size_t>(v)] == 0) stack.push_back(v);
    }
    int removed = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++removed;
        for (Vertex w : g.neighbors(v)) {
            if (--in_degree[static_cast<size_t>(w)] == 0) stack.push_back(w);
        }
    }
    return removed == g.n;
}

bool is_acyclic(const Hypergraph& h, const Orientation& a) {
    return is_acyclic(induced_digraph(h, a));
}

Orientation orientation_from_permutation(const Hypergraph& h, const std::vector<int>& pi) {
    int n = h.vertex_count();
    if (static_cast<int>(pi.size()) != n) {
        throw ValidationError("permutation length " + std::to_string(pi.size()) +
                              " does not match n = " + std::to_string(n));
    }
    // position[v] = j with pi(j) = v; also validates bijectivity
    std::vector<int> position(static_cast<size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
        int v = pi[static_cast<size_t>(j - 1)];
        if (v < 1 || v > n || position[static_cast<size_t>(v)] != 0) {
            throw ValidationError("not a permutation of [n]");
        }
        position[static_cast<size_t>(v)] = j;
    }
    std::vector<Vertex> sources;
    sources.reserve(static_cast<size_t>(h.edge_count()));
    for (const Hyperedge& e : h.edges()) {
        Vertex best = e[0];
        for (Vertex v : e) {
            if (position[static_cast<size_t>(v)] < position[static_cast<size_t>(best)]) best = v;
        }
        sources.push_back(best);
    }
    return Orientation::from_sources(h, std::move(sources));
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

std::vector<int> unrank_permutation(int n, long long rank) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> pi;
    pi.reserve(static_cast<size_t>(n));
    long long radix = factorial(n);
    for (int k = n; k >= 1; --k) {
        radix /= k;
        long long digit = rank / radix;
        rank %= radix;
        pi.push_back(pool[static_cast<size_t>(digit)]);
        pool.erase(pool.begin() + static_cast<long>(digit));
    }
    return pi;
}

namespace {

long long product_space_size(const Hypergraph& h) {
    long long product = 1;
    for (const Hyperedge& e : h.edges()) {
        product *= static_cast<long long>(e.size());
        if (product > (1LL << 60)) return product; // already hopeless, stop multiplying
    }
    return product;
}

// Per-thread scratch for the enumeration kernels: the inner loops run
// once per candidate and must not allocate.
struct KernelScratch {
    std::vector<int> in_degree;   // n + 1
    std::vector<int> bucket_head; // n + 1; edges sourced at v as intrusive list
    std::vector<int> edge_next;   // m
    std::vector<Vertex> stack;
    std::vector<int> position;    // n + 1; word positions for the surjection

    void resize(int n, int m) {
        in_degree.assign(static_cast<size_t>(n) + 1, 0);
        bucket_head.assign(static_cast<size_t>(n) + 1, -1);
        edge_next.assign(static_cast<size_t>(m), -1);
        stack.reserve(static_cast<size_t>(n));
        position.assign(static_cast<size_t>(n) + 1, 0);
    }
};

// Kahn's algorithm on the arcs induced by `sources`, without building an
// explicit digraph. Parallel arcs keep their multiplicity, which does not
// change the verdict.
bool acyclic_sources(const Hypergraph& h, const std::vector<Vertex>& sources,
                     KernelScratch& scratch) {
    int n = h.vertex_count();
    int m = h.edge_count();
    std::fill(scratch.in_degree.begin(), scratch.in_degree.end(), 0);
    std::fill(scratch.bucket_head.begin(), scratch.bucket_head.end(), -1);
    for (int e = 0; e < m; ++e) {
        Vertex src = sources[static_cast<size_t>(e)];
        scratch.edge_next[static_cast<size_t>(e)] = scratch.bucket_head[static_cast<size_t>(src)];
        scratch.bucket_head[static_cast<size_t>(src)] = e;
        for (Vertex v : h.edge(e)) {
            if (v != src) ++scratch.in_degree[static_cast<size_t>(v)];
        }
    }
    scratch.stack.clear();
    for (Vertex v = 1; v <= n; ++v) {
        if (scratch.in_degree[static_cast<size_t>(v)] == 0) scratch.stack.push_back(v);
    }
    int removed = 0;
    while (!scratch.stack.empty()) {
        Vertex v = scratch.stack.back();
        scratch.stack.pop_back();
        ++removed;
        for (int e = scratch.bucket_head[static_cast<size_t>(v)]; e >= 0;
             e = scratch.edge_next[static_cast<size_t>(e)]) {
            for (Vertex w : h.edge(e)) {
                if (w != v && --scratch.in_degree[static_cast<size_t>(w)] == 0) {
                    scratch.stack.push_back(w);
                }
            }
        }
    }
    return removed == n;
}

// Walks the product space as a mixed-radix odometer with the first edge as
// the most significant digit, so index order equals lex order on source
// sequences.
std::vector<Orientation> filter_range(const Hypergraph& h, long long begin, long long end) {
    int m = h.edge_count();
    std::vector<int> digit(static_cast<size_t>(m), 0);
    std::vector<Vertex> sources(static_cast<size_t>(m));
    long long rem = begin;
    for (int e = m - 1; e >= 0; --e) {
        long long size = static_cast<long long>(h.edge(e).size());
        digit[static_cast<size_t>(e)] = static_cast<int>(rem % size);
        rem /= size;
        sources[static_cast<size_t>(e)] = h.edge(e)[static_cast<size_t>(digit[static_cast<size_t>(e)])];
    }

    KernelScratch scratch;
    scratch.resize(h.vertex_count(), m);
    std::vector<Orientation> found;
    for (long long idx = begin; idx < end; ++idx) {
        if (acyclic_sources(h, sources, scratch)) {
            found.push_back(Orientation::from_sources(h, sources));
        }
        for (int e = m - 1; e >= 0; --e) {
            const Hyperedge& members = h.edge(e);
            if (++digit[static_cast<size_t>(e)] < static_cast<int>(members.size())) {
                sources[static_cast<size_t>(e)] =
                    members[static_cast<size_t>(digit[static_cast<size_t>(e)])];
                break;
            }
            digit[static_cast<size_t>(e)] = 0;
            sources[static_cast<size_t>(e)] = members[0];
        }
    }
    return found;
}

// Lexicographic walk over a permutation rank range; one sorted, deduped
// chunk of images.
std::vector<Orientation> surjection_range(const Hypergraph& h, long long begin, long long end) {
    int n = h.vertex_count();
    int m = h.edge_count();
    std::vector<int> pi = unrank_permutation(n, begin);
    KernelScratch scratch;
    scratch.resize(n, m);
    std::vector<Vertex> sources(static_cast<size_t>(m));

    std::vector<Orientation> image;
    for (long long rank = begin; rank < end; ++rank) {
        for (int j = 1; j <= n; ++j) {
            scratch.position[static_cast<size_t>(pi[static_cast<size_t>(j - 1)])] = j;
        }
        for (int e = 0; e < m; ++e) {
            Vertex best = h.edge(e)[0];
            for (Vertex v : h.edge(e)) {
                if (scratch.position[static_cast<size_t>(v)] <
                    scratch.position[static_cast<size_t>(best)]) {
                    best = v;
                }
            }
            sources[static_cast<size_t>(e)] = best;
        }
        image.push_back(Orientation::from_sources(h, sources));
        std::next_permutation(pi.begin(), pi.end());
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

long long chunk_bound(long long total, int part, int parts) {
    return static_cast<long long>(static_cast<unsigned __int128>(total) *
                                  static_cast<unsigned>(part) / static_cast<unsigned>(parts));
}

void check_filter_budget(const Hypergraph& h, const EnumerationBudget& budget, long long product) {
    if (product > budget.max_orientations) {
        throw BudgetError("orientation search space " + std::to_string(product) +
                          " exceeds budget " + std::to_string(budget.max_orientations));
    }
}

void check_permutation_budget(int n, const EnumerationBudget& budget, long long total) {
    if (total > budget.max_permutations) {
        throw BudgetError("permutation search space " + std::to_string(total) + " (n = " +
                          std::to_string(n) + ") exceeds budget " +
                          std::to_string(budget.max_permutations));
    }
}

} // namespace

// The reference implementations stay deliberately naive: one explicit
// digraph per candidate, one unranking per permutation. The optimized
// kernels above are tested against them.
namespace serial {

std::vector<Orientation> enumerate_acyclic_by_filter(const Hypergraph& h,
                                                     const EnumerationBudget& budget) {
    long long product = product_space_size(h);
    check_filter_budget(h, budget, product);
    int m = h.edge_count();
    std::vector<Orientation> found;
    for (long long idx = 0; idx < product; ++idx) {
        std::vector<Vertex> sources(static_cast<size_t>(m));
        long long rem = idx;
        for (int e = m - 1; e >= 0; --e) {
            const Hyperedge& members = h.edge(e);
            long long size = static_cast<long long>(members.size());
            sources[static_cast<size_t>(e)] = members[static_cast<size_t>(rem % size)];
            rem /= size;
        }
        Orientation a = Orientation::from_sources(h, std::move(sources));
        if (is_acyclic(h, a)) found.push_back(std::move(a));
    }
    return found;
}

std::vector<Orientation> enumerate_acyclic_by_surjection(const Hypergraph& h,
                                                         const EnumerationBudget& budget) {
    long long total = factorial(h.vertex_count());
    check_permutation_budget(h.vertex_count(), budget, total);
    std::vector<Orientation> image;
    for (long long rank = 0; rank < total; ++rank) {
        image.push_back(
            orientation_from_permutation(h, unrank_permutation(h.vertex_count(), rank)));
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return image;
}

} // namespace serial

std::vector<Orientation> enumerate_acyclic_by_filter(const Hypergraph& h,
                                                     const EnumerationBudget& budget) {
    long long product = product_space_size(h);
    check_filter_budget(h, budget, product);

#ifdef _OPENMP
    if (product >= 4096) {
        int threads = omp_get_max_threads();
        std::vector<std::vector<Orientation>> chunks(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            int t = omp_get_thread_num();
            int actual = omp_get_num_threads();
            long long begin = chunk_bound(product, t, actual);
            long long end = chunk_bound(product, t + 1, actual);
            chunks[static_cast<size_t>(t)] = filter_range(h, begin, end);
        }
        // index order = lex order, so chunk concatenation is already sorted
        std::vector<Orientation> all;
        for (auto& chunk : chunks) {
            all.insert(all.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
        }
        return all;
    }
#endif
    return filter_range(h, 0, product);
}

std::vector<Orientation> enumerate_acyclic_by_surjection(const Hypergraph& h,
                                                         const EnumerationBudget& budget) {
    long long total = factorial(h.vertex_count());
    check_permutation_budget(h.vertex_count(), budget, total);

#ifdef _OPENMP
    if (total >= 4096) {
        int threads = omp_get_max_threads();
        std::vector<std::vector<Orientation>> chunks(static_cast<size_t>(threads));
#pragma omp parallel num_threads(threads)
        {
            int t = omp_get_thread_num();
            int actual = omp_get_num_threads();
            long long begin = chunk_bound(total, t, actual);
            long long end = chunk_bound(total, t + 1, actual);
            chunks[static_cast<size_t>(t)] = surjection_range(h, begin, end);
        }
        // chunks are sorted; fold them with merges instead of re-sorting
        std::vector<Orientation> image;
        for (auto& chunk : chunks) {
            size_t mid = image.size();
            image.insert(image.end(), std::make_move_iterator(chunk.begin()),
                         std::make_move_iterator(chunk.end()));
            std::inplace_merge(image.begin(), image.begin() + static_cast<long>(mid),
                               image.end());
        }
        image.erase(std::unique(image.begin(), image.end()), image.end());
        return image;
    }
#endif
    return surjection_range(h, 0, total);
}

} // namespace hyperposet
