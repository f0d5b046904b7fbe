/**
 * @file selftest.hpp
 * @brief Desk-scale verification of the segmentation identities, the
 * Hadamard row-sum bounds, the approximation floor and every bound used by
 * the max-cut reduction.
 *
 * Each check is seeded and deterministic, carries its own time budget and
 * reports a single pass/fail verdict. The CLI `selftest` subcommand and the
 * acceptance binary both run this list.
 */

#ifndef H2S_SELFTEST_HPP
#define H2S_SELFTEST_HPP

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "h2s/core.hpp"
#include "h2s/hadamard.hpp"
#include "h2s/maxcut.hpp"
#include "h2s/random.hpp"
#include "h2s/reduction.hpp"
#include "h2s/solvers.hpp"

namespace h2s::selftest {

inline constexpr std::uint64_t kSeed = 0x5E67'2014ULL;

/// Lower bound on pairs/exact agreement ratio (2*sqrt(2) - 2, truncated).
inline constexpr double kApproxFloor = 0.8284;

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Labeled simple graphs on n vertices that are connected.
inline std::vector<Graph> connected_graphs(std::size_t n) {
    std::vector<Edge> all;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if ((mask >> i) & 1U) es.push_back(all[i]);
        }
        Graph g(n, std::move(es));
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

inline Graph random_graph(Rng& rng, std::size_t n, double density) {
    std::vector<Edge> es;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (uniform_real(rng) < density) es.push_back({u, v});
        }
    }
    return Graph(n, std::move(es));
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> es;
    for (std::size_t v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph(n, std::move(es));
}

inline Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

// 1. Agreement under majority centers equals (k*d + l1) / 2.
inline std::string check_equivalence_identity(std::uint64_t seed) {
    Rng rng(seed);
    std::size_t partitions = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto k = uniform_int(rng, 1, 10);
        const auto d = uniform_int(rng, 1, 12);
        const auto inst = random_instance(rng, k, d);
        auto check = [&](const Bipartition& p) {
            const auto centers = majority_centers(inst, p);
            const auto lhs = 2 * assigned_agreement(inst, p, centers);
            const auto rhs = static_cast<std::int64_t>(k * d) + score_l1(inst, p);
            ++partitions;
            if (lhs != rhs) {
                throw std::logic_error("instance " + std::to_string(t) + " partition " + p.to_string() + ": 2*agree " +
                                       std::to_string(lhs) + " != kd + l1 " + std::to_string(rhs));
            }
        };
        if (t < 50) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                check(Bipartition::from_mask(k, mask << 1));
            }
        } else {
            for (int s = 0; s < 100; ++s) check(random_partition(rng, k));
        }
    }
    return std::to_string(partitions) + " partitions over 1000 instances";
}

// 2. No center beats the majority center on its cluster.
inline std::string check_majority_optimality(std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 200; ++t) {
        const auto d = uniform_int(rng, 1, 4);
        const auto size = uniform_int(rng, 0, 9);
        std::vector<SignVector> cluster;
        for (std::size_t i = 0; i < size; ++i) cluster.push_back(random_sign_vector(rng, d));
        auto total = [&](const SignVector& c) {
            std::size_t s = 0;
            for (const auto& x : cluster) s += agree(c, x);
            return s;
        };
        const auto best = total(majority_center(cluster, d));
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
            std::vector<std::int8_t> e(d);
            for (std::size_t j = 0; j < d; ++j) e[j] = (bits >> j) & 1U ? 1 : -1;
            if (total(SignVector(std::move(e))) > best) {
                throw std::logic_error("cluster " + std::to_string(t) + ": a center beats the majority");
            }
        }
    }
    return "200 clusters, all centers compared";
}

// 3. l1 of any sum of distinct rows of H_M is at most M^{3/2}.
inline std::string check_row_sum_bound() {
    std::uint64_t subsets = 0;
    for (std::size_t M : {1, 2, 4, 8, 16}) {
        const auto code = sylvester(M);
        IntVector sum(M, 0);
        std::uint64_t mask = 0;
        if (!within_row_sum_bound(0, M)) throw std::logic_error("empty subset");
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << M); ++step) {
            const auto r = detail::gray_flip_bit(step);
            if ((mask >> r) & 1U) {
                subtract_from(sum, code.row(r));
            } else {
                add_into(sum, code.row(r));
            }
            mask ^= std::uint64_t{1} << r;
            if (!within_row_sum_bound(l1_norm(sum), M)) {
                throw std::logic_error("M=" + std::to_string(M) + " subset mask " + std::to_string(mask) +
                                       " exceeds M^{3/2}");
            }
        }
        subsets += std::uint64_t{1} << M;
    }
    return std::to_string(subsets) + " subsets checked exactly";
}

// 4. Splitting all rows of H_M into two groups: l1(A) + l1(B) <= sqrt(2) M^{3/2}.
inline std::string check_split_bound(std::uint64_t seed) {
    std::uint64_t colorings = 0;
    double worst_ratio = 0.0;
    auto check = [&](std::size_t M, const IntVector& a, const IntVector& total) {
        std::int64_t lb = 0;
        for (std::size_t j = 0; j < M; ++j) lb += std::abs(total[j] - a[j]);
        const double value = static_cast<double>(l1_norm(a) + lb);
        const double bound = split_bound(M);
        worst_ratio = std::max(worst_ratio, value / bound);
        ++colorings;
        if (value > bound + 1e-6) {
            throw std::logic_error("M=" + std::to_string(M) + ": split value " + std::to_string(value) +
                                   " exceeds sqrt(2) M^{3/2}");
        }
    };
    for (std::size_t M : {2, 4, 8, 16}) {
        const auto code = sylvester(M);
        const auto total = cluster_sum(code.rows(), M);
        IntVector a(M, 0);
        std::uint64_t mask = 0;
        check(M, a, total);
        for (std::uint64_t step = 1; step < (std::uint64_t{1} << M); ++step) {
            const auto r = detail::gray_flip_bit(step);
            if ((mask >> r) & 1U) {
                subtract_from(a, code.row(r));
            } else {
                add_into(a, code.row(r));
            }
            mask ^= std::uint64_t{1} << r;
            check(M, a, total);
        }
    }
    Rng rng(seed);
    for (std::size_t M : {32, 64}) {
        const auto code = sylvester(M);
        const auto total = cluster_sum(code.rows(), M);
        for (int s = 0; s < 10000; ++s) {
            IntVector a(M, 0);
            for (std::size_t r = 0; r < M; ++r) {
                if (coin(rng)) add_into(a, code.row(r));
            }
            check(M, a, total);
        }
    }
    std::ostringstream os;
    os << colorings << " colorings, max value/bound " << worst_ratio;
    return os.str();
}

// 5. Center-pair heuristic reaches the approximation floor; exact >= local >=
//    random start and exact >= pairs.
inline std::string check_approximation_floor(std::uint64_t seed) {
    Rng rng(seed);
    double worst = 1.0;
    for (int t = 0; t < 300; ++t) {
        const auto k = uniform_int(rng, 1, 12);
        const auto d = uniform_int(rng, 1, 10);
        const auto inst = random_instance(rng, k, d);
        const auto exact = solve_exact(inst);
        const auto local = solve_local(inst, mix_seed(seed, t), 4);
        const auto pairs = solve_center_pairs(inst);
        const auto where = "instance " + std::to_string(t) + ": ";
        if (static_cast<double>(pairs.agreement_value) < kApproxFloor * static_cast<double>(exact.agreement_value)) {
            throw std::logic_error(where + "pairs agreement " + std::to_string(pairs.agreement_value) +
                                   " below floor of exact " + std::to_string(exact.agreement_value));
        }
        if (exact.l1_value < local.l1_value || local.l1_value < local.stats.best_start_l1 ||
            exact.l1_value < pairs.l1_value) {
            throw std::logic_error(where + "dominance chain violated");
        }
        worst = std::min(worst, static_cast<double>(pairs.agreement_value) / static_cast<double>(exact.agreement_value));
    }
    std::ostringstream os;
    os << "300 instances, worst pairs/exact agreement ratio " << worst;
    return os.str();
}

// 6. Endpoint copies inside an edge block contribute exactly M^2 y_e per cluster.
inline std::string check_edge_accounting(std::uint64_t seed) {
    Rng rng(seed);
    std::size_t checks = 0;
    for (const auto& g : {triangle(), path_graph(3), path_graph(4)}) {
        const auto og = orient_edges(g);
        for (std::size_t M : {2, 4}) {
            const auto inst = reduce_graph(og, ReductionParams(M));
            for (int s = 0; s < 100; ++s) {
                const auto p = random_partition(rng, inst.size());
                const auto x = fractional_cut_from_partition(inst, p);
                for (std::size_t e = 0; e < og.arcs.size(); ++e) {
                    const double y = std::abs(x.x[og.arcs[e].tail] - x.x[og.arcs[e].head]);
                    const double expected = static_cast<double>(M * M) * y;
                    for (Side side : {Side::One, Side::Two}) {
                        const auto got = endpoint_block_l1(inst, og, p, e, side);
                        ++checks;
                        if (static_cast<double>(got) != expected) {
                            throw std::logic_error("M=" + std::to_string(M) + " edge " + std::to_string(e) +
                                                   ": block l1 " + std::to_string(got) + " != M^2 y_e");
                        }
                    }
                }
            }
        }
    }
    return std::to_string(checks) + " (partition, edge, cluster) contributions exact";
}

// 7. Optimum of every reduced connected graph with n <= 4 lies between the bounds.
inline std::string check_sandwich() {
    std::size_t cases = 0;
    double min_slack_low = 1e300, min_slack_high = 1e300;
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const auto& g : connected_graphs(n)) {
            const auto c = maxcut_exact(g).value;
            const auto og = orient_edges(g);
            for (std::size_t M : {2, 4}) {
                const auto opt = solve_exact(reduce_graph(og, ReductionParams(M)), {16, 1}).l1_value;
                const double lo = yes_bound(n, g.num_edges(), c, M);
                const double hi = upper_bound(n, g.num_edges(), c, M);
                const double v = static_cast<double>(opt);
                ++cases;
                if (v < lo - 1e-6 || v > hi + 1e-6) {
                    throw std::logic_error("n=" + std::to_string(n) + " m=" + std::to_string(g.num_edges()) +
                                           " M=" + std::to_string(M) + ": optimum " + std::to_string(opt) +
                                           " outside the bounds");
                }
                min_slack_low = std::min(min_slack_low, v - lo);
                min_slack_high = std::min(min_slack_high, hi - v);
            }
        }
    }
    std::ostringstream os;
    os << cases << " (graph, M) cases; tightest gap to yes bound " << min_slack_low << ", to upper bound " << min_slack_high;
    return os.str();
}

// 8. At M = min_valid_M the yes bound clears the no bound, and M stays below
//    the loose 2 m^2 n^2 threshold.
inline std::string check_gap_positivity() {
    std::size_t cases = 0;
    std::size_t largest = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::size_t m = 1; m <= n * (n - 1) / 2; ++m) {
            for (std::int64_t c = 1; c <= static_cast<std::int64_t>(m); ++c) {
                const auto M = min_valid_M(n, m, c);
                ++cases;
                largest = std::max(largest, M);
                if (!(yes_bound(n, m, c, M) > upper_bound(n, m, c - 1, M))) {
                    throw std::logic_error("no gap at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                           " c=" + std::to_string(c));
                }
                if (M > loose_valid_M(n, m)) throw std::logic_error("min_valid_M above the loose threshold");
            }
        }
    }
    return std::to_string(cases) + " (n, m, c) triples, largest M " + std::to_string(largest);
}

// 9. Rounding never loses cut value; exact max-cut exceeds m/2.
inline std::string check_rounding(std::uint64_t seed) {
    Rng rng(seed);
    for (int t = 0; t < 10000; ++t) {
        const auto n = uniform_int(rng, 1, 12);
        const auto g = random_graph(rng, n, uniform_real(rng));
        std::vector<double> x(n);
        for (auto& v : x) v = (t % 4 == 0) ? static_cast<double>(uniform_int(rng, 0, 4)) / 4.0 : uniform_real(rng);
        const FractionalCut f(std::move(x));
        const double frac = fractional_cut_value(g, f);
        const auto rounded = cut_value(g, round_fractional(g, f));
        if (static_cast<double>(rounded) < frac - kRoundingTolerance) {
            throw std::logic_error("pair " + std::to_string(t) + ": rounded cut " + std::to_string(rounded) +
                                   " below fractional " + std::to_string(frac));
        }
        if (g.num_edges() >= 1 && 2 * maxcut_exact(g).value <= static_cast<std::int64_t>(g.num_edges())) {
            throw std::logic_error("pair " + std::to_string(t) + ": max-cut not above m/2");
        }
    }
    return "10000 (graph, fractional cut) pairs";
}

struct Check {
    int id;
    std::string name;
    double budget_seconds;
    std::function<std::string()> body;
};

inline std::vector<Check> checks(std::uint64_t seed = kSeed) {
    return {
        {1, "equivalence identity", 10, [=] { return check_equivalence_identity(mix_seed(seed, 1)); }},
        {2, "majority optimality", 1, [=] { return check_majority_optimality(mix_seed(seed, 2)); }},
        {3, "row-sum bound M^{3/2} (exact)", 30, [] { return check_row_sum_bound(); }},
        {4, "split bound sqrt(2) M^{3/2}", 60, [=] { return check_split_bound(mix_seed(seed, 4)); }},
        {5, "approximation floor and dominance", 60, [=] { return check_approximation_floor(mix_seed(seed, 5)); }},
        {6, "per-edge accounting", 10, [=] { return check_edge_accounting(mix_seed(seed, 6)); }},
        {7, "sandwich bounds", 300, [] { return check_sandwich(); }},
        {8, "gap positivity", 1, [] { return check_gap_positivity(); }},
        {9, "rounding soundness", 10, [=] { return check_rounding(mix_seed(seed, 9)); }},
    };
}

inline CheckResult run_check(const Check& c) {
    CheckResult r{c.id, c.name, false, {}, 0.0, c.budget_seconds};
    const auto start = std::chrono::steady_clock::now();
    try {
        r.detail = c.body();
        r.pass = true;
    } catch (const std::exception& ex) {
        r.detail = ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && r.seconds >= r.budget_seconds) {
        r.pass = false;
        r.detail += " (over time budget)";
    }
    return r;
}

inline void print(std::ostream& out, const CheckResult& r) {
    out << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << " ("
        << std::fixed;
    out.precision(2);
    out << r.seconds << " s, budget " << r.budget_seconds << " s)" << std::defaultfloat << '\n';
    out.precision(6);
}

/// Runs every check; true iff all pass.
inline bool run_all(std::ostream& out, std::uint64_t seed = kSeed) {
    bool ok = true;
    for (const auto& c : checks(seed)) {
        const auto r = run_check(c);
        print(out, r);
        ok = ok && r.pass;
    }
    return ok;
}

}  // namespace h2s::selftest

#endif  // H2S_SELFTEST_HPP
