#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperposet/flip_graph.hpp"

namespace hyperposet {

struct RunConfig {
    EnumerationBudget budget;
    int workers = 0; // 0 = library default
    std::string format = "json";
    uint64_t seed = 0;
};

struct CheckCounts {
    std::string name;
    long long instances = 0;
    long long units = 0; // pairs, flips, edges... whatever the check counts
    long long violations = 0;
    std::vector<std::string> details; // one line per violation, capped
};

struct VerifyReport {
    long long instances = 0;
    std::vector<CheckCounts> checks;
    std::vector<std::string> budget_skips; // instances skipped per budget, run continues

    bool ok() const;
    std::string to_json() const;
    std::string summary() const;
};

/// Runs every verification sweep on each instance: order equivalence,
/// coherent == pre-coherent, filter == surjection enumeration, the
/// flip-sequence construction over all comparable pairs, and the flip
/// geometry checks. Instance order is preserved in the report.
VerifyReport run_verification(const std::vector<Hypergraph>& family, const RunConfig& config);

/// All 16 hypergraphs on [3] (every subset of the 4 subsets of size >= 2),
/// in a deterministic order.
std::vector<Hypergraph> exhaustive_family(int n);

/// Pairs hypergraph of the complete graph K_n.
Hypergraph complete_pairs(int n);

} // namespace hyperposet
