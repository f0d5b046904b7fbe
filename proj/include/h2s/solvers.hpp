/**
 * @file solvers.hpp
 * @brief Exact and heuristic solvers for hypercube 2-segmentation.
 *
 * All solvers search over bipartitions and report the majority centers of the
 * partition they return, so agreement_value = (k*d + l1_value) / 2 always.
 * Value ties are broken toward the lexicographically smallest partition
 * (side 1 < side 2, vector 0 first), which keeps results independent of
 * enumeration order and worker count.
 */

#ifndef H2S_SOLVERS_HPP
#define H2S_SOLVERS_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "h2s/core.hpp"
#include "h2s/random.hpp"

namespace h2s {

enum class Method { exact, local, center_pairs };

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::local: return "local";
        case Method::center_pairs: return "pairs";
    }
    return "unknown";
}

struct SolveStats {
    std::uint64_t iterations = 0;  // partitions examined, flips made, or center pairs tried
    double wall_seconds = 0.0;
    std::int64_t best_start_l1 = 0;  // local search: best score among the random starts
};

struct SolveResult {
    Bipartition partition;
    CenterPair centers;
    std::int64_t l1_value = 0;
    std::int64_t agreement_value = 0;
    Method method = Method::exact;
    SolveStats stats;
};

inline constexpr std::size_t kDefaultExactLimit = 24;

struct ExactOptions {
    std::size_t max_k = kDefaultExactLimit;
    unsigned workers = 1;
};

namespace detail {

inline SolveResult finish(const H2SInstance& inst, Bipartition p, Method method, SolveStats stats,
                          std::chrono::steady_clock::time_point start) {
    SolveResult r;
    r.centers = majority_centers(inst, p);
    r.l1_value = score_l1(inst, p);
    r.agreement_value = agreement_from_l1(inst, r.l1_value);
    r.partition = std::move(p);
    r.method = method;
    r.stats = stats;
    r.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct MaskBest {
    std::int64_t value = -1;
    std::uint64_t mask = 0;

    void offer(std::int64_t v, std::uint64_t m) {
        if (v > value || (v == value && lex_less_mask(m, mask))) {
            value = v;
            mask = m;
        }
    }
};

/// Incrementally maintained side sums and their total l1 norm.
class SideSums {
public:
    SideSums(const H2SInstance& inst, std::uint64_t mask) : inst_(inst), s1_(inst.dim(), 0), s2_(inst.dim(), 0) {
        for (std::size_t i = 0; i < inst.size(); ++i) add_into((mask >> i) & 1U ? s2_ : s1_, inst[i]);
        l1_ = l1_norm(s1_) + l1_norm(s2_);
    }

    std::int64_t l1() const noexcept { return l1_; }

    /// Moves vector i from side 1 to side 2 (to_two) or back.
    void move(std::size_t i, bool to_two) {
        auto& from = to_two ? s1_ : s2_;
        auto& to = to_two ? s2_ : s1_;
        const auto x = inst_[i].entries();
        for (std::size_t j = 0; j < x.size(); ++j) {
            l1_ -= abs64(from[j]) + abs64(to[j]);
            from[j] -= x[j];
            to[j] += x[j];
            l1_ += abs64(from[j]) + abs64(to[j]);
        }
    }

    /// Change in total l1 if vector i moved off its current side.
    std::int64_t gain(std::size_t i, bool on_two) const {
        const auto& from = on_two ? s2_ : s1_;
        const auto& to = on_two ? s1_ : s2_;
        const auto x = inst_[i].entries();
        std::int64_t g = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            g += abs64(from[j] - x[j]) + abs64(to[j] + x[j]) - abs64(from[j]) - abs64(to[j]);
        }
        return g;
    }

private:
    static std::int64_t abs64(std::int64_t v) noexcept { return v < 0 ? -v : v; }

    const H2SInstance& inst_;
    IntVector s1_, s2_;
    std::int64_t l1_ = 0;
};

/// Gray-code sweep over vectors 1..low_bits with the remaining bits fixed by
/// `base`.
inline MaskBest sweep(const H2SInstance& inst, std::uint64_t base, std::size_t low_bits) {
    SideSums sums(inst, base);
    MaskBest best;
    std::uint64_t mask = base;
    best.offer(sums.l1(), mask);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t step = 1; step < steps; ++step) {
        const std::size_t i = gray_flip_bit(step) + 1;
        const bool to_two = ((mask >> i) & 1U) == 0;
        sums.move(i, to_two);
        mask ^= std::uint64_t{1} << i;
        best.offer(sums.l1(), mask);
    }
    return best;
}

}  // namespace detail

/// Global optimum by enumerating all 2^(k-1) bipartitions with vector 0 on
/// side 1. Refuses instances with k above the configured limit.
inline SolveResult solve_exact(const H2SInstance& inst, ExactOptions opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = inst.size();
    const std::size_t limit = std::min<std::size_t>(opts.max_k, 63);
    if (k > limit) {
        throw std::invalid_argument("solve_exact: k = " + std::to_string(k) + " exceeds the exact limit of " +
                                    std::to_string(limit));
    }
    const std::size_t free_bits = k - 1;
    std::size_t prefix_bits = 0;
    while ((std::size_t{1} << prefix_bits) < std::max(1U, opts.workers) && prefix_bits < free_bits) ++prefix_bits;
    const std::size_t low_bits = free_bits - prefix_bits;
    const std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, opts.workers), prefixes));

    std::vector<detail::MaskBest> found(workers);
    auto run = [&](unsigned w) {
        for (std::uint64_t q = w; q < prefixes; q += workers) {
            const auto b = detail::sweep(inst, q << (low_bits + 1), low_bits);
            found[w].offer(b.value, b.mask);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    detail::MaskBest best;
    for (const auto& b : found) best.offer(b.value, b.mask);

    SolveStats stats;
    stats.iterations = std::uint64_t{1} << free_bits;
    return detail::finish(inst, Bipartition::from_mask(k, best.mask), Method::exact, stats, start);
}

/// Hill climbing on the l1 objective from `restarts` random partitions.
/// Each step flips the vector with the largest strictly positive gain (ties:
/// lowest index); the result is 1-flip locally optimal.
inline SolveResult solve_local(const H2SInstance& inst, std::uint64_t seed, std::size_t restarts) {
    if (restarts == 0) throw std::invalid_argument("solve_local: restarts must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = inst.size();
    Rng rng(mix_seed(seed));
    SolveStats stats;
    Bipartition best_p;
    std::int64_t best = -1;
    stats.best_start_l1 = -1;
    for (std::size_t r = 0; r < restarts; ++r) {
        Bipartition p = random_partition(rng, k);
        detail::SideSums sums(inst, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (p.side[i] == Side::Two) sums.move(i, true);
        }
        stats.best_start_l1 = std::max(stats.best_start_l1, sums.l1());
        for (;;) {
            std::int64_t best_gain = 0;
            std::size_t best_i = k;
            for (std::size_t i = 0; i < k; ++i) {
                const auto g = sums.gain(i, p.side[i] == Side::Two);
                if (g > best_gain) {
                    best_gain = g;
                    best_i = i;
                }
            }
            if (best_i == k) break;
            sums.move(best_i, p.side[best_i] == Side::One);
            p.side[best_i] = other(p.side[best_i]);
            ++stats.iterations;
        }
        if (sums.l1() > best || (sums.l1() == best && p < best_p)) {
            best = sums.l1();
            best_p = p;
        }
    }
    return detail::finish(inst, std::move(best_p), Method::local, stats, start);
}

/// Tries every unordered pair of input vectors as centers, assigns each
/// vector to its better center and re-centers each cluster on its majority.
///
/// For any optimal clustering, the best input vector of each cluster as a
/// center already attains at least a (2*sqrt(2) - 2) fraction of the optimal
/// agreement; assigning by best center and re-centering only increase it.
inline SolveResult solve_center_pairs(const H2SInstance& inst) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t k = inst.size();
    Bipartition best_p;
    std::int64_t best = -1;
    SolveStats stats;
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a; b < k; ++b) {
            auto p = voronoi_assign(inst, {inst[a], inst[b]});
            const auto v = score_l1(inst, p);
            ++stats.iterations;
            if (v > best || (v == best && p < best_p)) {
                best = v;
                best_p = std::move(p);
            }
        }
    }
    return detail::finish(inst, std::move(best_p), Method::center_pairs, stats, start);
}

}  // namespace h2s

#endif  // H2S_SOLVERS_HPP
