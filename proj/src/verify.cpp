#include "hyperposet/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "hyperposet/export.hpp"
#include "hyperposet/geometry.hpp"
#include "hyperposet/source_path.hpp"

namespace hyperposet {

std::vector<Hypergraph> exhaustive_family(int n) {
    std::vector<Hyperedge> pool = all_subsets_min2(n);
    if (pool.size() > 20) throw BudgetError("exhaustive family too large for n = " + std::to_string(n));
    std::vector<Hypergraph> family;
    for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<std::vector<Vertex>> edges;
        for (size_t k = 0; k < pool.size(); ++k) {
            if (mask & (1u << k)) edges.push_back(pool[k]);
        }
        family.push_back(Hypergraph::build(n, edges));
    }
    return family;
}

Hypergraph complete_pairs(int n) {
    std::vector<std::vector<Vertex>> edges;
    for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) edges.push_back({i, j});
    }
    return Hypergraph::build(n, edges);
}

namespace {

struct InstanceOutcome {
    // per-check (units, violations) in the order of kCheckNames
    std::array<std::pair<long long, long long>, 5> counts{};
    std::vector<std::string> details;
    std::string budget_skip; // nonempty when the instance exceeded budgets
};

constexpr const char* kCheckNames[5] = {"order_equivalence", "coherence_eq_pre_coherence",
                                        "surjection_equality", "flip_sequence_sweep",
                                        "geometry"};

void detail(InstanceOutcome& out, int check, const std::string& line) {
    ++out.counts[static_cast<size_t>(check)].second;
    if (out.details.size() < 32) {
        out.details.push_back(std::string(kCheckNames[check]) + ": " + line);
    }
}

InstanceOutcome verify_instance(const Hypergraph& h, const RunConfig& config) {
    InstanceOutcome out;
    FlipGraph graph;
    try {
        graph = FlipGraph::build(h, config.budget);
    } catch (const BudgetError& e) {
        out.budget_skip = e.what();
        return out;
    }
    PosetOracle oracle = PosetOracle::build(graph);
    int count = graph.node_count();

    // Closure order vs source order over all ordered node pairs.
    {
        OrderEquivalenceReport report = verify_order_equivalence(graph, oracle);
        out.counts[0] = {report.pairs_checked, 0};
        for (const auto& [a, b, by_closure, by_sources] : report.counterexamples) {
            detail(out, 0,
                   source_sequence_label(graph.node(a)) + " vs " +
                       source_sequence_label(graph.node(b)) + " closure=" +
                       (by_closure ? "1" : "0") + " sources=" + (by_sources ? "1" : "0"));
        }
    }

    // Coherent == pre-coherent for every defined increasing flip.
    for (int id = 0; id < count; ++id) {
        const Orientation& a = graph.node(id);
        for (Vertex i = 1; i <= h.vertex_count(); ++i) {
            for (Vertex j = i + 1; j <= h.vertex_count(); ++j) {
                FlipSpec f{i, j};
                if (!flip_defined(h, a, f)) continue;
                ++out.counts[1].first;
                if (is_coherent(h, a, f) != is_pre_coherent(h, a, f)) {
                    detail(out, 1, source_sequence_label(a) + " flip (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
                }
            }
        }
    }

    // The two enumeration routes must produce the same canonical list.
    try {
        std::vector<Orientation> by_surjection = enumerate_acyclic_by_surjection(h, config.budget);
        ++out.counts[2].first;
        if (by_surjection != graph.nodes()) {
            detail(out, 2, "filter and surjection enumerations differ (" +
                               std::to_string(graph.node_count()) + " vs " +
                               std::to_string(by_surjection.size()) + " orientations)");
        }
    } catch (const BudgetError& e) {
        out.budget_skip = e.what();
    }

    // Flip sequences between every comparable pair: stepwise coherence,
    // sandwich, length bound, and membership in the closure.
    for (int a_id = 0; a_id < count; ++a_id) {
        for (int b_id = 0; b_id < count; ++b_id) {
            const Orientation& a = graph.node(a_id);
            const Orientation& b = graph.node(b_id);
            if (a_id == b_id || !leq_by_sources(a, b)) continue;
            ++out.counts[3].first;
            std::string label = source_sequence_label(a) + " -> " + source_sequence_label(b);
            try {
                std::vector<FlipStep> steps = flip_sequence(h, a, b);
                long long distance = 0;
                for (int e = 0; e < h.edge_count(); ++e) distance += b.source(e) - a.source(e);
                if (static_cast<long long>(steps.size()) > distance) {
                    detail(out, 3, label + ": length exceeds source distance");
                    continue;
                }
                Orientation current = a;
                bool bad = false;
                for (const FlipStep& step : steps) {
                    if (!(step.flip.i < step.flip.j) || !is_coherent(h, current, step.flip) ||
                        !leq_by_sources(current, step.next) || current == step.next ||
                        !leq_by_sources(step.next, b) ||
                        !oracle.leq(graph.node_id(current), graph.node_id(step.next))) {
                        detail(out, 3, label + ": invalid step");
                        bad = true;
                        break;
                    }
                    current = step.next;
                }
                if (!bad && !(current == b)) detail(out, 3, label + ": did not reach B");
            } catch (const Error& e) {
                detail(out, 3, label + ": " + e.what());
            }
        }
    }

    // Geometry of every flip edge plus injectivity of the vertex map.
    {
        GeometryReport report = check_flip_geometry(h, graph);
        out.counts[4] = {report.edges_checked, 0};
        for (const GeometryViolation& v : report.violations) {
            detail(out, 4, "edge " + std::to_string(v.edge_index) + ": " + v.reason);
        }
        if (!report.injective) detail(out, 4, "vertex map not injective");
    }

    return out;
}

} // namespace

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckCounts& c) { return c.violations == 0; });
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["instances"] = instances;
    j["ok"] = ok();
    nlohmann::json jchecks = nlohmann::json::array();
    for (const CheckCounts& c : checks) {
        jchecks.push_back({{"name", c.name},
                           {"instances", c.instances},
                           {"units", c.units},
                           {"violations", c.violations},
                           {"details", c.details}});
    }
    j["checks"] = std::move(jchecks);
    j["budget_skips"] = budget_skips;
    return j.dump(2);
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    out << instances << " instance(s)";
    if (!budget_skips.empty()) out << ", " << budget_skips.size() << " over budget";
    out << "\n";
    for (const CheckCounts& c : checks) {
        out << "  " << (c.violations == 0 ? "pass" : "FAIL") << "  " << c.name << ": "
            << c.units << " checks, " << c.violations << " violation(s)\n";
    }
    return out.str();
}

VerifyReport run_verification(const std::vector<Hypergraph>& family, const RunConfig& config) {
    int count = static_cast<int>(family.size());
    std::vector<InstanceOutcome> outcomes(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) {
        try {
            outcomes[static_cast<size_t>(k)] =
                verify_instance(family[static_cast<size_t>(k)], config);
        } catch (const Error& e) {
            outcomes[static_cast<size_t>(k)].budget_skip = e.what();
        }
    }

    VerifyReport report;
    report.instances = count;
    for (int check = 0; check < 5; ++check) {
        CheckCounts counts;
        counts.name = kCheckNames[check];
        for (const InstanceOutcome& out : outcomes) {
            if (!out.budget_skip.empty()) continue;
            ++counts.instances;
            counts.units += out.counts[static_cast<size_t>(check)].first;
            counts.violations += out.counts[static_cast<size_t>(check)].second;
        }
        report.checks.push_back(std::move(counts));
    }
    for (int k = 0; k < count; ++k) {
        const InstanceOutcome& out = outcomes[static_cast<size_t>(k)];
        if (!out.budget_skip.empty()) {
            report.budget_skips.push_back("instance " + std::to_string(k) + ": " +
                                          out.budget_skip);
        }
        for (const std::string& line : out.details) {
            for (CheckCounts& c : report.checks) {
                if (line.rfind(c.name + ":", 0) == 0 && c.details.size() < 64) {
                    c.details.push_back("instance " + std::to_string(k) + " " + line);
                }
            }
        }
    }
    return report;
}

} // namespace hyperposet
