#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "h2s/random.hpp"
#include "h2s/solvers.hpp"

using namespace h2s;

namespace {

SignVector sv(const char* s) { return SignVector::from_string(s); }

H2SInstance toy() { return H2SInstance({sv("++"), sv("+-"), sv("--")}); }

// Optimum of the agreement formulation by brute force over all center pairs.
std::int64_t center_space_oracle(const H2SInstance& inst) {
    const std::size_t d = inst.dim();
    const std::uint64_t n = 1ULL << d;
    std::int64_t best = 0;
    for (std::uint64_t a = 0; a < n; ++a) {
        for (std::uint64_t b = a; b < n; ++b) {
            std::int64_t total = 0;
            for (const auto& x : inst.vectors()) {
                std::int64_t ga = 0, gb = 0;
                for (std::size_t j = 0; j < d; ++j) {
                    const int ca = (a >> j) & 1U ? 1 : -1;
                    const int cb = (b >> j) & 1U ? 1 : -1;
                    ga += ca == x[j];
                    gb += cb == x[j];
                }
                total += std::max(ga, gb);
            }
            best = std::max(best, total);
        }
    }
    return best;
}

// Optimum of the l1 formulation over all 2^k labelings.
std::int64_t partition_oracle(const H2SInstance& inst) {
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << inst.size()); ++mask) {
        best = std::max(best, score_l1(inst, Bipartition::from_mask(inst.size(), mask)));
    }
    return best;
}

void expect_consistent(const H2SInstance& inst, const SolveResult& r) {
    EXPECT_EQ(r.l1_value, score_l1(inst, r.partition));
    EXPECT_EQ(r.centers, majority_centers(inst, r.partition));
    EXPECT_EQ(2 * r.agreement_value, static_cast<std::int64_t>(inst.size() * inst.dim()) + r.l1_value);
}

}  // namespace

TEST(SolveExact, Examples) {
    const H2SInstance pairs({sv("++"), sv("++"), sv("--"), sv("--")});
    EXPECT_EQ(solve_exact(pairs).l1_value, 8);

    const H2SInstance single({sv("+-+")});
    const auto r1 = solve_exact(single);
    EXPECT_EQ(r1.l1_value, 3);
    EXPECT_EQ(r1.centers.c1, sv("+-+"));

    const auto t = solve_exact(toy());
    EXPECT_EQ(t.l1_value, 4);
    EXPECT_EQ(partition_oracle(toy()), 4);
    EXPECT_EQ(t.partition.side.front(), Side::One);
    expect_consistent(toy(), t);
}

TEST(SolveExact, MatchesBothOracles) {
    Rng rng(47);
    for (int t = 0; t < 150; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 8), uniform_int(rng, 1, 4));
        const auto r = solve_exact(inst);
        expect_consistent(inst, r);
        EXPECT_EQ(r.l1_value, partition_oracle(inst));
        EXPECT_EQ(r.agreement_value, center_space_oracle(inst));
        EXPECT_EQ(score_agreement(inst, r.centers), r.agreement_value);
    }
}

TEST(SolveExact, WorkerCountDoesNotChangeResult) {
    Rng rng(53);
    for (int t = 0; t < 20; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 14), uniform_int(rng, 1, 6));
        const auto serial = solve_exact(inst);
        for (unsigned w : {2U, 3U, 8U}) {
            const auto par = solve_exact(inst, {kDefaultExactLimit, w});
            EXPECT_EQ(par.partition, serial.partition);
            EXPECT_EQ(par.l1_value, serial.l1_value);
        }
    }
}

TEST(SolveExact, ReturnsLexSmallestOptimum) {
    // Identical vectors: every partition is optimal, so all on side 1.
    const H2SInstance same({sv("+-"), sv("+-"), sv("+-"), sv("+-")});
    EXPECT_EQ(solve_exact(same).partition, Bipartition(4));
}

TEST(SolveExact, RefusesAboveLimit) {
    Rng rng(59);
    const auto inst = random_instance(rng, 25, 3);
    EXPECT_THROW(solve_exact(inst), std::invalid_argument);
    EXPECT_THROW(solve_exact(random_instance(rng, 6, 3), {5, 1}), std::invalid_argument);
}

TEST(SolveLocal, Examples) {
    const H2SInstance same({sv("+-+"), sv("+-+"), sv("+-+")});
    EXPECT_EQ(solve_local(same, 3, 1).l1_value, 9);
    for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(solve_local(toy(), seed, 2).l1_value, 4);
    EXPECT_THROW(solve_local(toy(), 1, 0), std::invalid_argument);
}

TEST(SolveLocal, LocallyOptimalDeterministicAndDominated) {
    Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 12), uniform_int(rng, 1, 10));
        const auto r = solve_local(inst, t, 3);
        expect_consistent(inst, r);
        EXPECT_LE(r.l1_value, solve_exact(inst).l1_value);
        EXPECT_GE(r.l1_value, r.stats.best_start_l1);
        for (std::size_t i = 0; i < inst.size(); ++i) {
            auto q = r.partition;
            q.side[i] = other(q.side[i]);
            EXPECT_LE(score_l1(inst, q), r.l1_value);
        }
        const auto again = solve_local(inst, t, 3);
        EXPECT_EQ(again.partition, r.partition);
        EXPECT_EQ(again.l1_value, r.l1_value);
        EXPECT_EQ(again.stats.iterations, r.stats.iterations);
    }
}

TEST(SolveCenterPairs, Examples) {
    const H2SInstance same({sv("+-+"), sv("+-+"), sv("+-+")});
    EXPECT_EQ(solve_center_pairs(same).agreement_value, 9);
    // Optimal centers (++, --) are input vectors.
    EXPECT_EQ(solve_center_pairs(toy()).l1_value, 4);
    const H2SInstance clusters({sv("+++-"), sv("+++-"), sv("---+"), sv("+-+-"), sv("---+")});
    EXPECT_EQ(solve_center_pairs(clusters).l1_value, solve_exact(clusters).l1_value);
}

TEST(SolveCenterPairs, ApproximationFloor) {
    Rng rng(67);
    for (int t = 0; t < 200; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 12), uniform_int(rng, 1, 10));
        const auto r = solve_center_pairs(inst);
        const auto e = solve_exact(inst);
        expect_consistent(inst, r);
        EXPECT_LE(r.l1_value, e.l1_value);
        EXPECT_GE(static_cast<double>(r.agreement_value), 0.8284 * static_cast<double>(e.agreement_value));
        EXPECT_EQ(r.stats.iterations, inst.size() * (inst.size() + 1) / 2);
    }
}

TEST(Solvers, SideRelabelingInvariance) {
    Rng rng(71);
    for (int t = 0; t < 50; ++t) {
        const auto inst = random_instance(rng, uniform_int(rng, 1, 10), uniform_int(rng, 1, 8));
        const auto r = solve_exact(inst);
        EXPECT_EQ(score_l1(inst, r.partition.swapped()), r.l1_value);
    }
}
