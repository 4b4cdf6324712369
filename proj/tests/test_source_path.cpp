#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"

#include "hyperposet/flip_graph.hpp"
#include "hyperposet/source_path.hpp"
#include "hyperposet/verify.hpp"

using namespace hyperposet;

namespace {

// The minimized-chain fixture pair: the identity image against the pinned
// target sequence (5,4,7,2,3), in the fixture's listing order.
struct MinimizedPair {
    fixtures::Fixture fx = fixtures::minimized17();
    Orientation a = orientation_from_permutation(fx.h, {1, 2, 3, 4, 5, 6, 7});
    Orientation b = fx.orientation({5, 4, 7, 2, 3});
};

long long source_distance(const Orientation& a, const Orientation& b) {
    long long d = 0;
    for (int e = 0; e < a.edge_count(); ++e) d += b.source(e) - a.source(e);
    return d;
}

} // namespace

TEST_CASE("small hyperedges minimize B over the candidate set") {
    MinimizedPair p;
    CHECK(is_acyclic(p.fx.h, p.a));
    CHECK(is_acyclic(p.fx.h, p.b));
    CHECK(p.a == p.fx.orientation({1, 1, 1, 1, 1}));

    CHECK(p.fx.h.edge(small_hyperedge(p.fx.h, p.a, p.b, 1, 7)) == Hyperedge{1, 4, 7});
    CHECK(p.fx.h.edge(small_hyperedge(p.fx.h, p.a, p.b, 1, 4)) == Hyperedge{1, 3, 4});

    // singleton candidate set
    CHECK(candidate_set(p.fx.h, p.a, p.b, 1, 2) ==
          std::vector<HyperedgeId>{p.fx.h.find_edge({1, 2, 3, 6})});
    CHECK(p.fx.h.edge(small_hyperedge(p.fx.h, p.a, p.b, 1, 2)) == Hyperedge{1, 2, 3, 6});

    // without the membership constraint, the minimum B over all of S_1
    CHECK(p.fx.h.edge(small_hyperedge(p.fx.h, p.a, p.b, 1)) == Hyperedge{1, 2, 3, 6});

    CHECK_THROWS_WITH_AS(static_cast<void>(small_hyperedge(p.fx.h, p.a, p.b, 5)),
                         doctest::Contains("empty candidate set"), DomainError);
}

TEST_CASE("flipping at a small hyperedge target keeps the sequences comparable") {
    // even when the flip is not coherent, the result stays below B
    std::vector<Hypergraph> family = exhaustive_family(3);
    family.push_back(fixtures::kappa1346().h);
    family.push_back(fixtures::tworounds().h);
    for (const Hypergraph& h : family) {
        std::vector<Orientation> nodes = enumerate_acyclic_by_filter(h);
        for (const Orientation& a : nodes) {
            for (const Orientation& b : nodes) {
                if (a == b || !leq_by_sources(a, b)) continue;
                for (Vertex i = 1; i <= h.vertex_count(); ++i) {
                    if (candidate_set(h, a, b, i).empty()) continue;
                    Vertex j = b.source(small_hyperedge(h, a, b, i));
                    Orientation flipped = apply_flip(h, a, {i, j});
                    CHECK(leq_by_sources(a, flipped));
                    CHECK(leq_by_sources(flipped, b));
                }
            }
        }
    }
}

TEST_CASE("minimized hyperedge chain stabilizes") {
    MinimizedPair p;
    auto [edge, chain] = minimized_hyperedge(p.fx.h, p.a, p.b, 1, 7);
    CHECK(p.fx.h.edge(edge) == Hyperedge{1, 2, 3, 6});
    CHECK(chain.stabilization_index == 3);
    REQUIRE(chain.steps.size() == 4);
    CHECK(p.fx.h.edge(chain.steps[0].edge) == Hyperedge{1, 4, 7});
    CHECK(chain.steps[0].h == 7);
    CHECK(chain.steps[0].b_value == 4);
    CHECK(p.fx.h.edge(chain.steps[1].edge) == Hyperedge{1, 3, 4});
    CHECK(chain.steps[1].b_value == 3);
    CHECK(p.fx.h.edge(chain.steps[2].edge) == Hyperedge{1, 2, 3, 6});
    CHECK(chain.steps[2].b_value == 2);
    CHECK(p.fx.h.edge(chain.steps[3].edge) == Hyperedge{1, 2, 3, 6});
    CHECK(chain.minimized_edge() == edge);

    // the h_k stay non-increasing from k >= 1 on, B values non-increasing
    for (size_t k = 2; k < chain.steps.size(); ++k) {
        CHECK(chain.steps[k].h <= chain.steps[k - 1].h);
        CHECK(chain.steps[k].b_value <= chain.steps[k - 1].b_value);
    }
}

TEST_CASE("immediately stable chains have M = 1") {
    MinimizedPair p;
    // S_{1,2} = {1236} and B(1236) = 2 = h, stable at once
    auto [edge, chain] = minimized_hyperedge(p.fx.h, p.a, p.b, 1, 2);
    CHECK(p.fx.h.edge(edge) == Hyperedge{1, 2, 3, 6});
    CHECK(chain.stabilization_index == 1);
    CHECK(chain.steps.size() == 2);
}

TEST_CASE("two-round minimized chain from the second worked example") {
    auto fx = fixtures::tworounds();
    Orientation a = orientation_from_permutation(fx.h, {1, 6, 7, 3, 4, 5, 2});
    Orientation b = orientation_from_permutation(fx.h, {6, 7, 3, 4, 5, 2, 1});
    CHECK(a == fx.orientation({1, 1, 1, 1, 5, 7}));
    CHECK(b == fx.orientation({2, 4, 3, 7, 5, 7}));

    auto [edge, chain] = minimized_hyperedge(fx.h, a, b, 1, 5);
    CHECK(fx.h.edge(chain.steps[0].edge) == Hyperedge{1, 4, 5});
    CHECK(fx.h.edge(chain.steps[1].edge) == Hyperedge{1, 3, 4});
    CHECK(fx.h.edge(edge) == Hyperedge{1, 3, 4});
    CHECK(chain.stabilization_index == 2);
}

TEST_CASE("simple tuples") {
    auto s12 = fixtures::simple12();
    Orientation a = orientation_from_permutation(s12.h, {1, 3, 4, 6, 5, 7, 8, 2});
    Orientation b = orientation_from_permutation(s12.h, {3, 4, 5, 6, 7, 8, 2, 1});
    CHECK(a == s12.orientation({1, 1, 3, 1, 4, 5, 1, 6, 7, 8}));
    CHECK(b == s12.orientation({2, 3, 3, 4, 4, 5, 6, 6, 7, 8}));

    CHECK(is_simple_tuple(s12.h, a, b, 1, 2, {1, 3, 2}));
    CHECK(is_simple_tuple(s12.h, a, b, 1, 2, {1, 4, 5, 2}));
    CHECK(is_simple_tuple(s12.h, a, b, 1, 2, {1, 6, 7, 8, 2}));

    auto kp = fixtures::kappa1346();
    Orientation ka = orientation_from_permutation(kp.h, {1, 3, 4, 6, 7, 2, 5});
    Orientation kb = orientation_from_permutation(kp.h, {7, 5, 2, 3, 4, 1, 6});
    CHECK(ka == kp.orientation({1, 3, 4, 4, 6, 7}));
    CHECK(kb == kp.orientation({2, 3, 5, 4, 7, 7}));
    // {245} has A = 4 != 1 and the pair [4,2] inside the path
    CHECK_FALSE(is_simple_tuple(kp.h, ka, kb, 1, 2, {1, 3, 4, 2}));

    // a path touching no changed source beyond i is vacuously simple
    CHECK(is_simple_tuple(kp.h, ka, kb, 4, 5, {4, 6, 7, 5}) ==
          false); // {67} changes and [6,7] lies inside
    CHECK(is_simple_tuple(s12.h, a, b, 1, 5, {1, 4, 5}) == true);

    CHECK_THROWS_AS(static_cast<void>(is_simple_tuple(s12.h, a, b, 1, 2, {1, 2})), DomainError);
    CHECK_THROWS_AS(static_cast<void>(is_simple_tuple(s12.h, a, b, 1, 2, {1, 7, 2})),
                    DomainError);
}

TEST_CASE("source path of the worked example is [1,3,4,6]") {
    auto kp = fixtures::kappa1346();
    Orientation a = orientation_from_permutation(kp.h, {1, 3, 4, 6, 7, 2, 5});
    Orientation b = orientation_from_permutation(kp.h, {7, 5, 2, 3, 4, 1, 6});

    SourcePath sp = construct_source_path(kp.h, a, b, 1, 2);
    CHECK(sp.path == VertexPath{1, 3, 4, 6});
    CHECK(sp.final_i == 6);
    CHECK(sp.final_j == 7);
    CHECK(kp.h.edge(sp.final_edge) == Hyperedge{6, 7});
    CHECK_FALSE(sp.flagged);

    // the first appended segment comes from the non-simple path [1,3,4,2]
    REQUIRE(sp.trace.size() >= 3);
    CHECK(sp.trace[0].kind == TraceStep::Kind::Small);
    CHECK(sp.trace[0].j == 2);
    CHECK(sp.trace[1].kind == TraceStep::Kind::Append);
    CHECK(sp.trace[1].segment == VertexPath{3, 4});
    CHECK(sp.trace[1].lambda == VertexPath{1, 3, 4, 2});
}

TEST_CASE("source path with no appends: kappa stays [1]") {
    auto fx = fixtures::tworounds();
    Orientation a = orientation_from_permutation(fx.h, {1, 6, 7, 3, 4, 5, 2});
    Orientation b = orientation_from_permutation(fx.h, {6, 7, 3, 4, 5, 2, 1});

    SourcePath sp = construct_source_path(fx.h, a, b, 1, 2);
    CHECK(sp.path == VertexPath{1});
    CHECK(sp.final_i == 1);
    CHECK(sp.final_j == 7);
    CHECK_FALSE(sp.flagged);

    // two minimized rounds: j moves 2 -> 3 (via {134}), then 3 -> 7
    std::vector<std::pair<Vertex, Hyperedge>> minimized;
    for (const TraceStep& s : sp.trace) {
        if (s.kind == TraceStep::Kind::Minimized) {
            minimized.emplace_back(s.j, fx.h.edge(s.edge));
        }
    }
    REQUIRE(minimized.size() == 2);
    CHECK(minimized[0] == std::pair<Vertex, Hyperedge>{3, {1, 3, 4}});
    CHECK(minimized[1] == std::pair<Vertex, Hyperedge>{7, {1, 2, 7}});

    // final flip is coherent per the flip module
    CHECK(is_coherent(fx.h, a, {sp.final_i, sp.final_j}));
}

TEST_CASE("source path refuses a coherent entry flip") {
    auto p8 = fixtures::poset8();
    Orientation a = Orientation::from_sources(p8.h, {1, 3, 2});
    Orientation b = Orientation::from_sources(p8.h, {2, 3, 2});
    CHECK_THROWS_WITH_AS(static_cast<void>(construct_source_path(p8.h, a, b, 1, 2)),
                         doctest::Contains("coherent"), DomainError);
    // and validates the entry target
    auto kp = fixtures::kappa1346();
    Orientation ka = orientation_from_permutation(kp.h, {1, 3, 4, 6, 7, 2, 5});
    Orientation kb = orientation_from_permutation(kp.h, {7, 5, 2, 3, 4, 1, 6});
    CHECK_THROWS_AS(static_cast<void>(construct_source_path(kp.h, ka, kb, 1, 5)), DomainError);
}

TEST_CASE("find_coherent_flip on the worked example") {
    auto kp = fixtures::kappa1346();
    Orientation a = orientation_from_permutation(kp.h, {1, 3, 4, 6, 7, 2, 5});
    Orientation b = orientation_from_permutation(kp.h, {7, 5, 2, 3, 4, 1, 6});

    CoherentFlipResult r = find_coherent_flip(kp.h, a, b);
    CHECK(r.flip == FlipSpec{6, 7});
    CHECK(r.next == kp.orientation({1, 3, 4, 4, 7, 7}));
    CHECK(is_acyclic(kp.h, r.next));
    CHECK(leq_by_sources(r.next, b));
    REQUIRE(r.source_path.has_value());
    CHECK(r.source_path->path == VertexPath{1, 3, 4, 6});
    CHECK(r.source_path->trace.back().kind == TraceStep::Kind::Flip);

    // one coherent flip below B: returned directly, no source path needed
    Orientation c = apply_flip(kp.h, a, {6, 7});
    CoherentFlipResult direct = find_coherent_flip(kp.h, a, c);
    CHECK(direct.flip == FlipSpec{6, 7});
    CHECK_FALSE(direct.source_path.has_value());

    CHECK_THROWS_AS(static_cast<void>(find_coherent_flip(kp.h, a, a)), DomainError);
}

TEST_CASE("coherent flips with sandwich and progress across the n = 3 family") {
    for (const Hypergraph& h : exhaustive_family(3)) {
        std::vector<Orientation> nodes = enumerate_acyclic_by_filter(h);
        for (const Orientation& a : nodes) {
            for (const Orientation& b : nodes) {
                if (a == b || !leq_by_sources(a, b)) continue;
                CoherentFlipResult r = find_coherent_flip(h, a, b);
                CHECK(r.flip.i < r.flip.j);
                CHECK(is_coherent(h, a, r.flip));
                CHECK(leq_by_sources(a, r.next));
                CHECK(!(a == r.next));
                CHECK(leq_by_sources(r.next, b));
                CHECK(source_distance(r.next, b) < source_distance(a, b));
            }
        }
    }
}

TEST_CASE("flip sequences") {
    auto s12 = fixtures::simple12();
    Orientation a = orientation_from_permutation(s12.h, {1, 3, 4, 6, 5, 7, 8, 2});
    Orientation b = orientation_from_permutation(s12.h, {3, 4, 5, 6, 7, 8, 2, 1});

    CHECK(flip_sequence(s12.h, a, a).empty());

    std::vector<FlipStep> steps = flip_sequence(s12.h, a, b);
    CHECK(!steps.empty());
    CHECK(static_cast<long long>(steps.size()) <= source_distance(a, b));
    Orientation current = a;
    for (const FlipStep& step : steps) {
        CHECK(is_coherent(s12.h, current, step.flip));
        CHECK(leq_by_sources(current, step.next));
        CHECK(leq_by_sources(step.next, b));
        current = step.next;
    }
    CHECK(current == b);

    CHECK_THROWS_WITH_AS(static_cast<void>(flip_sequence(s12.h, b, a)),
                         doctest::Contains("not comparable"), DomainError);
}

TEST_CASE("flip sequences stay inside the closure, n = 3 family") {
    for (const Hypergraph& h : exhaustive_family(3)) {
        FlipGraph g = FlipGraph::build(h);
        PosetOracle p = PosetOracle::build(g);
        for (const Orientation& a : g.nodes()) {
            for (const Orientation& b : g.nodes()) {
                if (!leq_by_sources(a, b)) continue;
                Orientation current = a;
                for (const FlipStep& step : flip_sequence(h, a, b)) {
                    CHECK(p.leq(g.node_id(current), g.node_id(step.next)));
                    current = step.next;
                }
                CHECK(current == b);
            }
        }
    }
}

TEST_CASE("qualifying hyperedges exist along every non-edge path of a non-pre-coherent flip") {
    // existence half of the locate step, checked exhaustively at n = 3 and
    // on the worked fixtures
    std::vector<Hypergraph> family = exhaustive_family(3);
    family.push_back(fixtures::kappa1346().h);
    family.push_back(fixtures::tworounds().h);
    for (const Hypergraph& h : family) {
        std::vector<Orientation> nodes = enumerate_acyclic_by_filter(h);
        for (const Orientation& a : nodes) {
            for (const Orientation& b : nodes) {
                if (a == b || !leq_by_sources(a, b)) continue;
                for (HyperedgeId e = 0; e < h.edge_count(); ++e) {
                    if (a.source(e) >= b.source(e)) continue;
                    Vertex i = a.source(e);
                    Vertex j = b.source(e);
                    for (const VertexPath& lambda : enumerate_paths(h, a, i, j)) {
                        if (lambda.size() < 3) continue;
                        bool found = false;
                        for (HyperedgeId q = 0; q < h.edge_count() && !found; ++q) {
                            if (a.source(q) == b.source(q)) continue;
                            for (size_t t = 0; t + 1 < lambda.size(); ++t) {
                                if (lambda[t] == a.source(q) &&
                                    h.edge_contains(q, lambda[t + 1])) {
                                    found = true;
                                    break;
                                }
                            }
                        }
                        CHECK(found);
                    }
                }
            }
        }
    }
}
