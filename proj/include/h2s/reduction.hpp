/**
 * @file reduction.hpp
 * @brief Max-cut to hypercube 2-segmentation reduction and its bounds.
 *
 * A graph with n vertices and m edges becomes an instance with k = M*n
 * vectors of dimension d = M*m. Coordinates form m blocks of M, one per edge;
 * vertex i contributes copies (i, 0..M-1). Inside the block of edge e, copy j
 * of vertex i holds
 *   - all +1 if i is the head of e,
 *   - all -1 if i is the tail of e,
 *   - row j of the Sylvester code H_M otherwise.
 *
 * Any cut of size c induces a partition scoring at least
 *   yes_bound = c * (2M^2 - (n-2) M^{3/2}),
 * while every partition scores at most
 *   upper_bound = 2M^2 * maxcut + sqrt(2) (n-2) m M^{3/2}.
 * Once 2 sqrt(M) > (sqrt(2) m + c)(n-2), a graph with a cut of size c yields a
 * strictly larger optimum than any graph whose max-cut is at most c-1.
 */

#ifndef H2S_REDUCTION_HPP
#define H2S_REDUCTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "h2s/core.hpp"
#include "h2s/hadamard.hpp"
#include "h2s/maxcut.hpp"
#include "h2s/random.hpp"
#include "h2s/solvers.hpp"

namespace h2s {

struct Arc {
    std::size_t tail = 0;
    std::size_t head = 0;
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct OrientedGraph {
    Graph base;
    std::vector<Arc> arcs;  // arcs[e] orients base.edges()[e]
};

struct ReductionParams {
    std::size_t block_size = 2;

    explicit ReductionParams(std::size_t M) : block_size(M) {
        if (M < 2 || !is_power_of_two(M)) {
            throw std::invalid_argument("ReductionParams: block size " + std::to_string(M) +
                                        " must be a power of 2 and at least 2");
        }
    }
};

/// Canonical orientation: the smaller endpoint is the tail.
inline OrientedGraph orient_edges(const Graph& g) {
    OrientedGraph og{g, {}};
    og.arcs.reserve(g.num_edges());
    for (const auto& e : g.edges()) og.arcs.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    return og;
}

inline std::size_t vector_index(std::size_t vertex, std::size_t copy, std::size_t M) { return vertex * M + copy; }

inline H2SInstance reduce_graph(const OrientedGraph& og, const ReductionParams& params) {
    const std::size_t n = og.base.num_vertices();
    const std::size_t m = og.arcs.size();
    const std::size_t M = params.block_size;
    if (n < 2) throw std::invalid_argument("reduce_graph: the graph needs at least 2 vertices");
    if (m < 1) throw std::invalid_argument("reduce_graph: the graph needs at least 1 edge");

    const auto code = sylvester(M);
    BlockMeta meta;
    meta.block_size = M;
    for (std::size_t e = 0; e < m; ++e) meta.edge_blocks.push_back(e);

    std::vector<SignVector> vectors;
    vectors.reserve(n * M);
    for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t j = 0; j < M; ++j) {
            std::vector<std::int8_t> entries(m * M);
            for (std::size_t e = 0; e < m; ++e) {
                auto* block = entries.data() + e * M;
                if (og.arcs[e].head == v) {
                    std::fill(block, block + M, std::int8_t{1});
                } else if (og.arcs[e].tail == v) {
                    std::fill(block, block + M, std::int8_t{-1});
                } else {
                    const auto row = code.row(j).entries();
                    std::copy(row.begin(), row.end(), block);
                }
            }
            vectors.emplace_back(std::move(entries));
            meta.vector_groups.push_back({v, j});
        }
    }
    return H2SInstance(std::move(vectors), std::move(meta));
}

namespace detail {

inline const BlockMeta& require_meta(const H2SInstance& inst, const char* what) {
    if (!inst.block_meta()) {
        throw std::invalid_argument(std::string(what) + ": instance carries no reduction block metadata");
    }
    return *inst.block_meta();
}

}  // namespace detail

/// Puts all M copies of each vertex on that vertex's side of the cut.
inline Bipartition partition_from_cut(const H2SInstance& inst, const CutAssignment& cut) {
    const auto& meta = detail::require_meta(inst, "partition_from_cut");
    if (cut.size() != meta.num_vertices()) {
        throw std::invalid_argument("partition_from_cut: cut has " + std::to_string(cut.size()) +
                                    " labels for " + std::to_string(meta.num_vertices()) + " vertices");
    }
    Bipartition p(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) p.side[i] = cut.side.at(meta.vector_groups[i].vertex);
    return p;
}

/// x_i = fraction of vertex i's copies on side 1.
inline FractionalCut fractional_cut_from_partition(const H2SInstance& inst, const Bipartition& p) {
    const auto& meta = detail::require_meta(inst, "fractional_cut_from_partition");
    detail::require_partition(inst, p, "fractional_cut_from_partition");
    const std::size_t n = meta.num_vertices();
    std::vector<std::size_t> on_one(n, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto v = meta.vector_groups[i].vertex;
        if (v >= n) throw std::invalid_argument("fractional_cut_from_partition: vertex ids are not contiguous");
        on_one[v] += p.side[i] == Side::One;
    }
    std::vector<double> x(n);
    for (std::size_t v = 0; v < n; ++v) x[v] = static_cast<double>(on_one[v]) / static_cast<double>(meta.block_size);
    return FractionalCut(std::move(x));
}

/// l1 norm, within the block of edge e, of the sum of the endpoint copies
/// that lie on side s. Equals M^2 * y_e for the induced fractional cut.
inline std::int64_t endpoint_block_l1(const H2SInstance& inst, const OrientedGraph& og, const Bipartition& p,
                                      std::size_t e, Side s) {
    const auto& meta = detail::require_meta(inst, "endpoint_block_l1");
    detail::require_partition(inst, p, "endpoint_block_l1");
    const std::size_t M = meta.block_size;
    const auto [tail, head] = og.arcs.at(e);
    IntVector sum(M, 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto v = meta.vector_groups[i].vertex;
        if (p.side[i] != s || (v != tail && v != head)) continue;
        for (std::size_t j = 0; j < M; ++j) sum[j] += inst[i][e * M + j];
    }
    return l1_norm(sum);
}

inline double pow_three_halves(double M) { return M * std::sqrt(M); }

/// Lower bound on the score of a partition induced by a cut of size c.
inline double yes_bound(std::size_t n, std::size_t /*m*/, std::int64_t c, std::size_t M) {
    const double Md = static_cast<double>(M);
    return static_cast<double>(c) * (2.0 * Md * Md - static_cast<double>(n - 2) * pow_three_halves(Md));
}

/// Upper bound on the score of any partition when sum_e y_e <= cut_cap.
inline double upper_bound(std::size_t n, std::size_t m, std::int64_t cut_cap, std::size_t M) {
    const double Md = static_cast<double>(M);
    return 2.0 * Md * Md * static_cast<double>(cut_cap) +
           std::sqrt(2.0) * static_cast<double>(n - 2) * static_cast<double>(m) * pow_three_halves(Md);
}

/// True iff yes_bound(c) > upper_bound(c - 1) at block size M, i.e.
/// 2 sqrt(M) > (sqrt(2) m + c)(n - 2).
inline bool gap_condition(std::size_t n, std::size_t m, std::int64_t c, std::size_t M) {
    return 2.0 * std::sqrt(static_cast<double>(M)) >
           (std::sqrt(2.0) * static_cast<double>(m) + static_cast<double>(c)) * static_cast<double>(n - 2);
}

/// Smallest power of 2 (at least 2) satisfying gap_condition.
inline std::size_t min_valid_M(std::size_t n, std::size_t m, std::int64_t c) {
    if (n < 2) throw std::invalid_argument("min_valid_M: n must be at least 2");
    std::size_t M = 2;
    while (!gap_condition(n, m, c, M)) M *= 2;
    return M;
}

/// Smallest power of 2 strictly above 2 m^2 n^2; always sufficient.
inline std::size_t loose_valid_M(std::size_t n, std::size_t m) {
    const std::uint64_t target = 2ULL * m * m * n * n;
    std::uint64_t M = 1;
    while (M <= target) M *= 2;
    return M;
}

struct BoundVerdicts {
    bool yes_bound_holds = false;    // cut-induced partition scores >= yes_bound
    bool upper_bound_holds = false;  // solver and sampled partitions score <= upper_bound
    bool gap_holds = false;          // yes_bound(c) > upper_bound(c-1); vacuously true below min_valid_M
};

struct ReductionReport {
    std::size_t n = 0, m = 0, M = 0;
    std::int64_t c = 0;
    std::string c_source;  // "exact", "local" or "supplied"
    std::size_t min_valid_M = 0;
    std::size_t loose_M = 0;
    double yes_bound = 0.0;
    double upper_bound = 0.0;
    double gap_upper_bound = 0.0;  // upper_bound with cut_cap = c - 1
    bool gap_applicable = false;
    Method solver = Method::exact;
    std::map<std::string, std::int64_t> achieved;  // "cut", solver name, "random_max"
    Bipartition solver_partition;
    std::size_t samples = 0;
    BoundVerdicts verdicts;

    bool all_pass() const {
        return verdicts.yes_bound_holds && verdicts.upper_bound_holds && verdicts.gap_holds;
    }
};

struct VerifyOptions {
    Method solver = Method::exact;
    std::uint64_t seed = 1;
    std::size_t samples = 1000;
    std::size_t restarts = 16;
    std::size_t max_exact_k = kDefaultExactLimit;
    std::size_t max_exact_n = kDefaultMaxcutExactLimit;
    /// Reference cut value to use instead of an exact max-cut, paired with its
    /// assignment.
    std::optional<CutResult> supplied_cut;
    unsigned workers = 1;
};

inline constexpr double kBoundRelTolerance = 1e-9;
inline constexpr double kBoundAbsTolerance = 1e-6;

inline double bound_tolerance(double bound) {
    return std::max(kBoundAbsTolerance, kBoundRelTolerance * std::abs(bound));
}

inline SolveResult run_solver(const H2SInstance& inst, Method method, const VerifyOptions& opts) {
    switch (method) {
        case Method::exact: return solve_exact(inst, {opts.max_exact_k, opts.workers});
        case Method::local: return solve_local(inst, opts.seed, opts.restarts);
        case Method::center_pairs: return solve_center_pairs(inst);
    }
    throw std::invalid_argument("run_solver: unknown method");
}

/// Builds the reduced instance of g at block size M and checks the three
/// bounds: the cut-induced partition reaches yes_bound, no examined partition
/// exceeds upper_bound, and (for M >= min_valid_M) the decision gap is open.
inline ReductionReport verify_instance_bounds(const Graph& g, std::size_t M, const VerifyOptions& opts = {}) {
    const ReductionParams params(M);
    ReductionReport rep;
    rep.n = g.num_vertices();
    rep.m = g.num_edges();
    rep.M = M;
    rep.solver = opts.solver;

    CutResult cut;
    if (opts.supplied_cut) {
        cut = *opts.supplied_cut;
        rep.c_source = "supplied";
    } else if (rep.n <= opts.max_exact_n) {
        cut = maxcut_exact(g, opts.max_exact_n);
        rep.c_source = "exact";
    } else {
        cut = maxcut_local(g, opts.seed, opts.restarts);
        rep.c_source = "local";
    }
    rep.c = cut.value;

    const auto og = orient_edges(g);
    const auto inst = reduce_graph(og, params);

    rep.min_valid_M = rep.c >= 1 ? min_valid_M(rep.n, rep.m, rep.c) : 0;
    rep.loose_M = loose_valid_M(rep.n, rep.m);
    rep.yes_bound = yes_bound(rep.n, rep.m, rep.c, M);
    rep.upper_bound = upper_bound(rep.n, rep.m, rep.c, M);
    rep.gap_upper_bound = upper_bound(rep.n, rep.m, std::max<std::int64_t>(rep.c - 1, 0), M);

    const auto cut_l1 = score_l1(inst, partition_from_cut(inst, cut.assignment));
    rep.achieved["cut"] = cut_l1;
    rep.verdicts.yes_bound_holds = static_cast<double>(cut_l1) >= rep.yes_bound - bound_tolerance(rep.yes_bound);

    const auto solved = run_solver(inst, opts.solver, opts);
    rep.achieved[std::string(to_string(opts.solver))] = solved.l1_value;
    rep.solver_partition = solved.partition;

    // Each sample draws from its own derived stream, so the maximum does not
    // depend on how samples are split across workers.
    rep.samples = opts.samples;
    const unsigned workers = std::max(1U, opts.workers);
    std::vector<std::int64_t> stripe_max(workers, 0);
    auto sample = [&](unsigned w) {
        for (std::size_t s = w; s < opts.samples; s += workers) {
            Rng rng(mix_seed(opts.seed, s + 1));
            stripe_max[w] = std::max(stripe_max[w], score_l1(inst, random_partition(rng, inst.size())));
        }
    };
    if (workers == 1) {
        sample(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sample, w);
    }
    const auto random_max = *std::max_element(stripe_max.begin(), stripe_max.end());
    rep.achieved["random_max"] = random_max;

    const double upper_tol = rep.upper_bound + bound_tolerance(rep.upper_bound);
    rep.verdicts.upper_bound_holds = static_cast<double>(std::max({solved.l1_value, random_max, cut_l1})) <= upper_tol;

    rep.gap_applicable = rep.c >= 1 && M >= rep.min_valid_M;
    rep.verdicts.gap_holds = !rep.gap_applicable || rep.yes_bound > rep.gap_upper_bound;
    return rep;
}

}  // namespace h2s

#endif  // H2S_REDUCTION_HPP
