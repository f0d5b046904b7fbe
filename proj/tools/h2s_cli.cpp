// h2s: command-line front end for the hypercube 2-segmentation toolkit.
//
// Exit codes: 0 success, 1 a verification verdict failed, 2 usage or input error.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "h2s/h2s.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

h2s::Method parse_method(const std::string& name) {
    if (name == "exact") return h2s::Method::exact;
    if (name == "local") return h2s::Method::local;
    return h2s::Method::center_pairs;
}

void emit(const h2s::Report& r) { std::cout << r.dump(2) << '\n'; }

struct Options {
    std::size_t order = 0;
    bool verify_code = false;

    std::string method = "exact";
    std::string solver = "exact";
    std::string input;
    std::string graph;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t restarts = 16;
    std::size_t samples = 1000;
    std::size_t max_exact_k = h2s::kDefaultExactLimit;
    std::size_t block_size = 0;
    bool auto_M = false;
    bool timing = false;
    std::uint64_t selftest_seed = h2s::selftest::kSeed;
};

int run_hadamard(const Options& o) {
    if (!h2s::is_power_of_two(o.order)) {
        std::cerr << "hadamard: order " << o.order << " is not a power of 2\n";
        return kUsage;
    }
    const auto code = h2s::sylvester(o.order);
    for (const auto& row : code.rows()) std::cout << row.to_string() << '\n';
    if (o.verify_code) {
        const bool ok = h2s::verify_orthogonality(code);
        std::cout << "orthogonal: " << (ok ? "true" : "false") << '\n';
        return ok ? kOk : kVerifyFailed;
    }
    return kOk;
}

int run_solve(const Options& o) {
    const auto inst = h2s::load_instance(o.input);
    h2s::SolveResult r;
    switch (parse_method(o.method)) {
        case h2s::Method::exact: r = h2s::solve_exact(inst, {o.max_exact_k, 1}); break;
        case h2s::Method::local: r = h2s::solve_local(inst, o.seed, o.restarts); break;
        case h2s::Method::center_pairs: r = h2s::solve_center_pairs(inst); break;
    }
    emit(h2s::solve_report(inst, r, o.seed, o.restarts, o.timing));
    return kOk;
}

int run_maxcut(const Options& o) {
    const auto g = h2s::load_graph(o.input);
    const bool exact = o.method == "exact";
    const auto r = exact ? h2s::maxcut_exact(g) : h2s::maxcut_local(g, o.seed, o.restarts);
    emit(h2s::maxcut_report(g, r, o.method, o.seed, o.restarts));
    return kOk;
}

int run_reduce(const Options& o) {
    const auto g = h2s::load_graph(o.graph);
    const auto inst = h2s::reduce_graph(h2s::orient_edges(g), h2s::ReductionParams(o.block_size));
    if (o.out.empty()) {
        h2s::write_instance(std::cout, inst);
    } else {
        h2s::save_instance(inst, o.out);
    }
    return kOk;
}

int run_verify(const Options& o) {
    const auto g = h2s::load_graph(o.graph);
    h2s::VerifyOptions vo;
    vo.solver = parse_method(o.solver);
    vo.seed = o.seed;
    vo.samples = o.samples;
    vo.restarts = o.restarts;
    vo.max_exact_k = o.max_exact_k;
    std::size_t M = o.block_size;
    if (o.auto_M) {
        const auto c = g.num_vertices() <= vo.max_exact_n ? h2s::maxcut_exact(g, vo.max_exact_n)
                                                          : h2s::maxcut_local(g, vo.seed, vo.restarts);
        if (c.value < 1) {
            std::cerr << "verify: --auto-M needs a graph with at least one edge\n";
            return kUsage;
        }
        M = h2s::min_valid_M(g.num_vertices(), g.num_edges(), c.value);
    }
    const auto rep = h2s::verify_instance_bounds(g, M, vo);
    emit(h2s::verify_report(rep, vo));
    return rep.all_pass() ? kOk : kVerifyFailed;
}

int run_selftest(const Options& o) { return h2s::selftest::run_all(std::cout, o.selftest_seed) ? kOk : kVerifyFailed; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypercube 2-segmentation: solvers, max-cut reduction and bound verification", "h2s"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> methods{"exact", "local", "pairs"};

    auto* hadamard = app.add_subcommand("hadamard", "Print the Sylvester Hadamard code of order M");
    hadamard->add_option("--order", o.order, "Code order (power of 2)")->required();
    hadamard->add_flag("--verify", o.verify_code, "Check pairwise orthogonality");

    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--method", o.method, "Solver")->check(CLI::IsMember(methods));
    solve->add_option("--input", o.input, "Instance file")->required();
    solve->add_option("--seed", o.seed, "Seed for local search");
    solve->add_option("--restarts", o.restarts, "Local search restarts")->check(CLI::PositiveNumber);
    solve->add_option("--max-exact-k", o.max_exact_k, "Largest k the exact solver accepts");
    solve->add_flag("--timing", o.timing, "Include wall time in the report");

    auto* maxcut = app.add_subcommand("maxcut", "Max-cut of a graph file");
    maxcut->add_option("--input", o.input, "Graph file")->required();
    maxcut->add_option("--method", o.method, "exact or local")->check(CLI::IsMember({"exact", "local"}));
    maxcut->add_option("--seed", o.seed, "Seed for local search");
    maxcut->add_option("--restarts", o.restarts, "Local search restarts")->check(CLI::PositiveNumber);

    auto* reduce = app.add_subcommand("reduce", "Reduce a graph to an instance file");
    reduce->add_option("--graph", o.graph, "Graph file")->required();
    reduce->add_option("--block-size", o.block_size, "Block size M (power of 2, >= 2)")->required();
    reduce->add_option("--out", o.out, "Output instance file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Check the reduction bounds on a graph");
    verify->add_option("--graph", o.graph, "Graph file")->required();
    auto* bs = verify->add_option("--block-size", o.block_size, "Block size M");
    auto* am = verify->add_flag("--auto-M", o.auto_M, "Use the smallest M that opens the gap");
    bs->excludes(am);
    verify->add_option("--solver", o.solver, "Solver for the reduced instance")->check(CLI::IsMember(methods));
    verify->add_option("--samples", o.samples, "Random partitions checked against the upper bound");
    verify->add_option("--seed", o.seed, "Seed");
    verify->add_option("--restarts", o.restarts, "Local search restarts")->check(CLI::PositiveNumber);
    verify->add_option("--max-exact-k", o.max_exact_k, "Largest k the exact solver accepts");

    auto* self = app.add_subcommand("selftest", "Run the invariant suite");
    self->add_option("--seed", o.selftest_seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kUsage;
    }

    try {
        if (*hadamard) return run_hadamard(o);
        if (*solve) return run_solve(o);
        if (*maxcut) return run_maxcut(o);
        if (*reduce) return run_reduce(o);
        if (*verify) {
            if (o.block_size == 0 && !o.auto_M) {
                std::cerr << "verify: one of --block-size or --auto-M is required\n";
                return kUsage;
            }
            return run_verify(o);
        }
        if (*self) return run_selftest(o);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
