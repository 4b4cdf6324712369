// hyperposet: enumeration, verification sweeps, flip sequences, exports.
//
// Exit codes: 0 success / all checks pass, 1 verification counterexample,
// 2 usage or parse error, 3 enumeration budget exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hyperposet/export.hpp"
#include "hyperposet/geometry.hpp"
#include "hyperposet/random_family.hpp"
#include "hyperposet/source_path.hpp"
#include "hyperposet/verify.hpp"

using namespace hyperposet;

namespace {

struct Options {
    RunConfig config;
    std::string method = "filter";
    std::string format;
};

void apply_workers(const RunConfig& config) {
#ifdef _OPENMP
    if (config.workers > 0) omp_set_num_threads(config.workers);
#endif
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ValidationError("cannot write file: " + out_path);
    out << content;
}

int cmd_enumerate(const std::string& file, const Options& opt) {
    Hypergraph h = load_hypergraph_file(file);
    std::vector<Orientation> result;
    bool agree = true;
    if (opt.method == "filter") {
        result = enumerate_acyclic_by_filter(h, opt.config.budget);
    } else if (opt.method == "surjection") {
        result = enumerate_acyclic_by_surjection(h, opt.config.budget);
    } else if (opt.method == "both") {
        result = enumerate_acyclic_by_filter(h, opt.config.budget);
        agree = result == enumerate_acyclic_by_surjection(h, opt.config.budget);
    } else {
        throw ValidationError("unknown method: " + opt.method);
    }

    if (opt.format == "json") {
        nlohmann::json j;
        j["count"] = result.size();
        if (opt.method == "both") j["methods_agree"] = agree;
        nlohmann::json list = nlohmann::json::array();
        for (const Orientation& a : result) list.push_back(a.sources());
        j["orientations"] = std::move(list);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << result.size() << " acyclic orientation" << (result.size() == 1 ? "" : "s");
        if (opt.method == "both") std::cout << (agree ? "; methods agree" : "; METHODS DISAGREE");
        std::cout << "\n";
        for (const Orientation& a : result) std::cout << orientation_to_json(a) << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_verify(const std::string& scope, const std::string& file, int count, int n, double p,
               const Options& opt) {
    std::vector<Hypergraph> family;
    if (scope == "exhaustive-n3") {
        family = exhaustive_family(3);
    } else if (scope == "file") {
        if (file.empty()) throw ValidationError("verify file requires a path");
        family.push_back(load_hypergraph_file(file));
    } else if (scope == "random") {
        family = random_family(count, n, p, opt.config.seed);
    } else {
        throw ValidationError("unknown scope: " + scope + " (expected exhaustive-n3|file|random)");
    }

    VerifyReport report = run_verification(family, opt.config);
    std::cout << report.to_json() << "\n";
    std::cerr << report.summary();
    if (!report.ok()) return 1;
    if (!report.budget_skips.empty()) return 3;
    return 0;
}

int cmd_flipseq(const std::string& file, const std::string& a_text, const std::string& b_text,
                const Options& opt) {
    Hypergraph h = load_hypergraph_file(file);
    Orientation a = orientation_from_json(h, a_text);
    Orientation b = orientation_from_json(h, b_text);
    if (!is_acyclic(h, a)) throw DomainError("orientation A is cyclic");
    if (!is_acyclic(h, b)) throw DomainError("orientation B is cyclic");

    std::vector<FlipStep> steps = flip_sequence(h, a, b); // throws when not comparable

    if (opt.format == "json") {
        nlohmann::json j;
        j["start"] = a.sources();
        j["target"] = b.sources();
        nlohmann::json list = nlohmann::json::array();
        for (const FlipStep& step : steps) {
            nlohmann::json js;
            js["flip"] = {step.flip.i, step.flip.j};
            js["sources"] = step.next.sources();
            if (step.source_path) {
                js["trace"] = nlohmann::json::parse(trace_to_json(h, *step.source_path));
            }
            list.push_back(std::move(js));
        }
        j["steps"] = std::move(list);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (steps.empty()) {
        std::cout << "already equal; 0 flips\n";
        return 0;
    }
    std::cout << "start  " << orientation_to_json(a) << "\n";
    for (const FlipStep& step : steps) {
        if (step.source_path) {
            std::cout << "  source path kappa=";
            for (Vertex v : step.source_path->path) std::cout << (v == step.source_path->path[0] ? "[" : ",") << v;
            std::cout << "]\n";
        }
        std::cout << "flip (" << step.flip.i << "," << step.flip.j << ") -> "
                  << orientation_to_json(step.next) << "\n";
    }
    std::cout << steps.size() << " flip(s)\n";
    return 0;
}

int cmd_export(const std::string& file, const std::string& what, const std::string& format,
               const std::string& out_path, const Options& opt) {
    Hypergraph h = load_hypergraph_file(file);
    FlipGraph g = FlipGraph::build(h, opt.config.budget);
    if (what == "flipgraph") {
        if (format == "dot") return write_output(dot_flip_graph(g), out_path), 0;
        if (format == "json") return write_output(json_flip_graph(g), out_path), 0;
    } else if (what == "poset") {
        PosetOracle p = PosetOracle::build(g);
        if (format == "dot") return write_output(dot_poset(g, p), out_path), 0;
        if (format == "json") return write_output(json_poset(g, p), out_path), 0;
    } else if (what == "vertices") {
        if (format == "csv") return write_output(csv_vertices(h, g), out_path), 0;
        if (format == "json") return write_output(json_vertices(h, g), out_path), 0;
    } else {
        throw ValidationError("unknown export target: " + what);
    }
    throw ValidationError("unsupported format '" + format + "' for " + what);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraphic posets: acyclic orientations, increasing flips, order oracles"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--budget-orientations", opt.config.budget.max_orientations,
                   "bound on the product of hyperedge sizes");
    app.add_option("--budget-permutations", opt.config.budget.max_permutations,
                   "bound on n! for the surjection method");
    app.add_option("--workers", opt.config.workers, "worker threads (0 = default)");
    app.add_option("--seed", opt.config.seed, "seed for random families");
    app.add_option("--format", opt.format, "output format (text|json; dot/csv for export)");

    std::string file;
    std::string scope;
    std::string a_text;
    std::string b_text;
    std::string what;
    std::string export_format = "dot";
    std::string out_path;
    int count = 100;
    int n = 5;
    double p = 0.3;

    // global flags remain usable after a subcommand name
    app.fallthrough();

    CLI::App* enumerate = app.add_subcommand("enumerate", "list acyclic orientations");
    enumerate->fallthrough();
    enumerate->add_option("file", file, "hypergraph JSON file")->required();
    enumerate->add_option("--method", opt.method, "filter|surjection|both");

    CLI::App* verify = app.add_subcommand("verify", "run verification sweeps");
    verify->fallthrough();
    verify->add_option("scope", scope, "exhaustive-n3|file|random")->required();
    verify->add_option("file", file, "hypergraph JSON file (scope = file)");
    verify->add_option("--count", count, "number of random instances");
    verify->add_option("--n", n, "vertex count for random instances");
    verify->add_option("--p", p, "hyperedge inclusion probability");

    CLI::App* flipseq = app.add_subcommand("flipseq", "coherent flip sequence from A to B");
    flipseq->fallthrough();
    flipseq->add_option("file", file, "hypergraph JSON file")->required();
    flipseq->add_option("A", a_text, "source sequence of A, JSON array")->required();
    flipseq->add_option("B", b_text, "source sequence of B, JSON array")->required();

    CLI::App* exporter = app.add_subcommand("export", "write flipgraph|poset|vertices");
    exporter->fallthrough();
    exporter->add_option("file", file, "hypergraph JSON file")->required();
    exporter->add_option("what", what, "flipgraph|poset|vertices")->required();
    exporter->add_option("format", export_format, "dot|json|csv");
    exporter->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    apply_workers(opt.config);
    try {
        if (opt.config.budget.max_orientations < 1 || opt.config.budget.max_permutations < 1) {
            throw ValidationError("budgets must be positive");
        }
        if (app.got_subcommand(enumerate)) return cmd_enumerate(file, opt);
        if (app.got_subcommand(verify)) return cmd_verify(scope, file, count, n, p, opt);
        if (app.got_subcommand(flipseq)) return cmd_flipseq(file, a_text, b_text, opt);
        if (app.got_subcommand(exporter))
            return cmd_export(file, what, export_format, out_path, opt);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
