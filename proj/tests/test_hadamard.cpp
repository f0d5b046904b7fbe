#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "h2s/hadamard.hpp"
#include "h2s/random.hpp"

using namespace h2s;

namespace {

std::vector<std::size_t> rows_of(std::uint64_t mask, std::size_t M) {
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < M; ++r) {
        if ((mask >> r) & 1U) idx.push_back(r);
    }
    return idx;
}

}  // namespace

TEST(Sylvester, SmallOrders) {
    const auto h1 = sylvester(1);
    ASSERT_EQ(h1.order(), 1U);
    EXPECT_EQ(h1.row(0), SignVector({1}));

    const auto h2 = sylvester(2);
    EXPECT_EQ(h2.row(0).to_string(), "++");
    EXPECT_EQ(h2.row(1).to_string(), "+-");

    const auto h4 = sylvester(4);
    const std::vector<std::string> expected{"++++", "+-+-", "++--", "+--+"};
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h4.row(j).to_string(), expected[j]);
    // exhaustive pairwise dot products
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
            int s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += h4.row(a)[j] * h4.row(b)[j];
            EXPECT_EQ(s, a == b ? 4 : 0);
        }
    }
}

TEST(Sylvester, RejectsNonPowersOfTwo) {
    EXPECT_THROW(sylvester(0), std::invalid_argument);
    EXPECT_THROW(sylvester(3), std::invalid_argument);
    EXPECT_THROW(sylvester(12), std::invalid_argument);
}

TEST(Orthogonality, Verify) {
    EXPECT_TRUE(verify_orthogonality(sylvester(8)));
    EXPECT_TRUE(verify_orthogonality(sylvester(1)));
    for (std::size_t M = 1; M <= 128; M *= 2) {
        const auto h = sylvester(M);
        EXPECT_TRUE(verify_orthogonality(h));
        for (const auto& r : h.rows()) EXPECT_EQ(dot(r, r), static_cast<std::int64_t>(M));
    }
    auto rows = sylvester(4).rows();
    rows[3] = rows[1];
    EXPECT_FALSE(verify_orthogonality(HadamardCode(rows)));
}

TEST(SubsetSum, Examples) {
    const auto h4 = sylvester(4);
    const std::vector<std::size_t> all{0, 1, 2, 3};
    EXPECT_EQ(subset_sum(h4, all), (IntVector{4, 0, 0, 0}));
    EXPECT_EQ(subset_sum_l1(h4, all), 4);
    EXPECT_TRUE(within_row_sum_bound(4, 4));

    const auto h16 = sylvester(16);
    for (std::size_t j = 0; j < 16; ++j) {
        const std::vector<std::size_t> one{j};
        EXPECT_EQ(subset_sum_l1(h16, one), 16);
    }
    EXPECT_EQ(subset_sum_l1(h16, {}), 0);
}

TEST(SubsetSum, RejectsBadIndices) {
    const auto h4 = sylvester(4);
    const std::vector<std::size_t> repeated{1, 1};
    const std::vector<std::size_t> outside{4};
    EXPECT_THROW(subset_sum_l1(h4, repeated), std::invalid_argument);
    EXPECT_THROW(subset_sum_l1(h4, outside), std::out_of_range);
}

TEST(SubsetSum, RowSumBoundsExhaustive) {
    for (std::size_t M : {1, 2, 4, 8, 16}) {
        const auto h = sylvester(M);
        for (std::uint64_t mask = 0; mask < (1ULL << M); ++mask) {
            const auto idx = rows_of(mask, M);
            const auto sum = subset_sum(h, idx);
            const auto l1 = l1_norm(sum);
            std::int64_t l2sq = 0;
            for (auto e : sum) l2sq += e * e;
            ASSERT_EQ(l2sq, static_cast<std::int64_t>(idx.size() * M)) << "M=" << M << " mask=" << mask;
            ASSERT_TRUE(within_row_sum_bound(l1, M)) << "M=" << M << " mask=" << mask;
            ASSERT_TRUE(within_refined_bound(l1, M, idx.size())) << "M=" << M << " mask=" << mask;
        }
    }
}

TEST(SubsetSum, SplitBoundSampled) {
    Rng rng(29);
    for (std::size_t M : {32, 64}) {
        const auto h = sylvester(M);
        for (int t = 0; t < 2000; ++t) {
            std::vector<std::size_t> a, b;
            for (std::size_t r = 0; r < M; ++r) (coin(rng) ? a : b).push_back(r);
            const double v = static_cast<double>(subset_sum_l1(h, a) + subset_sum_l1(h, b));
            ASSERT_LE(v, split_bound(M) + 1e-6);
        }
    }
}

TEST(SubsetSum, BoundHelpersAreTight) {
    // M = 4: M^{3/2} = 8 exactly.
    EXPECT_TRUE(within_row_sum_bound(8, 4));
    EXPECT_FALSE(within_row_sum_bound(9, 4));
    // M = 2: M^{3/2} = 2.828...
    EXPECT_TRUE(within_row_sum_bound(2, 2));
    EXPECT_FALSE(within_row_sum_bound(3, 2));
    EXPECT_NEAR(split_bound(4), std::sqrt(2.0) * 8.0, 1e-12);
}
