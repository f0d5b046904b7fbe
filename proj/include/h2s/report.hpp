#ifndef H2S_REPORT_HPP
#define H2S_REPORT_HPP

#include <string>

#include <json.hpp>

#include "h2s/core.hpp"
#include "h2s/maxcut.hpp"
#include "h2s/reduction.hpp"
#include "h2s/solvers.hpp"

namespace h2s {

// Reports are ordered JSON documents. Wall time is the only non-deterministic
// field, so it is emitted only on request.
using Report = nlohmann::ordered_json;

inline Report solve_report(const H2SInstance& inst, const SolveResult& r, std::uint64_t seed, std::size_t restarts,
                           bool with_timing) {
    Report j;
    j["command"] = "solve";
    j["method"] = std::string(to_string(r.method));
    j["k"] = inst.size();
    j["d"] = inst.dim();
    if (r.method == Method::local) {
        j["seed"] = seed;
        j["restarts"] = restarts;
    }
    j["l1_value"] = r.l1_value;
    j["agreement_value"] = r.agreement_value;
    j["partition"] = r.partition.to_string();
    j["center1"] = r.centers.c1.to_string();
    j["center2"] = r.centers.c2.to_string();
    j["iterations"] = r.stats.iterations;
    if (with_timing) j["wall_seconds"] = r.stats.wall_seconds;
    return j;
}

inline Report maxcut_report(const Graph& g, const CutResult& r, std::string_view method, std::uint64_t seed,
                            std::size_t restarts) {
    Report j;
    j["command"] = "maxcut";
    j["method"] = std::string(method);
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    if (method == "local") {
        j["seed"] = seed;
        j["restarts"] = restarts;
    }
    j["cut_value"] = r.value;
    j["assignment"] = r.assignment.to_string();
    return j;
}

inline Report verify_report(const ReductionReport& rep, const VerifyOptions& opts) {
    Report j;
    j["command"] = "verify";
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["M"] = rep.M;
    j["k"] = rep.M * rep.n;
    j["d"] = rep.M * rep.m;
    j["c"] = rep.c;
    j["c_source"] = rep.c_source;
    j["solver"] = std::string(to_string(rep.solver));
    j["seed"] = opts.seed;
    if (rep.solver == Method::local) j["restarts"] = opts.restarts;
    j["samples"] = rep.samples;
    j["min_valid_M"] = rep.min_valid_M;
    j["loose_M"] = rep.loose_M;
    j["yes_bound"] = rep.yes_bound;
    j["upper_bound"] = rep.upper_bound;
    j["gap_upper_bound"] = rep.gap_upper_bound;
    j["gap_applicable"] = rep.gap_applicable;
    Report achieved;
    for (const auto& [name, value] : rep.achieved) achieved[name] = value;
    j["achieved"] = achieved;
    j["solver_partition"] = rep.solver_partition.to_string();
    j["verdicts"] = {{"yes_bound", rep.verdicts.yes_bound_holds},
                     {"upper_bound", rep.verdicts.upper_bound_holds},
                     {"gap", rep.verdicts.gap_holds}};
    j["pass"] = rep.all_pass();
    return j;
}

}  // namespace h2s

#endif  // H2S_REPORT_HPP
