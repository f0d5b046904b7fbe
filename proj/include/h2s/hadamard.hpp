/**
 * @file hadamard.hpp
 * @brief Sylvester Hadamard codes and the l1 bounds on sums of their rows.
 *
 * For q distinct rows of an order-M code the squared l2 norm of the sum is
 * exactly q*M (orthogonality), so its l1 norm is at most sqrt(M) * sqrt(q*M)
 * = M*sqrt(q) <= M^{3/2}. Splitting all M rows into two groups of sizes q and
 * M-q bounds the two l1 norms together by M*(sqrt(q) + sqrt(M-q)) <= sqrt(2)*M^{3/2}.
 */

#ifndef H2S_HADAMARD_HPP
#define H2S_HADAMARD_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "h2s/core.hpp"

namespace h2s {

inline bool is_power_of_two(std::uint64_t v) noexcept { return v != 0 && (v & (v - 1)) == 0; }

/// A list of M sign vectors of length M. Rows are 0-indexed; row j is the
/// codeword used by copy j in the reduction.
class HadamardCode {
public:
    explicit HadamardCode(std::vector<SignVector> rows) : rows_(std::move(rows)) {
        for (const auto& r : rows_) {
            if (r.size() != rows_.size()) {
                throw std::invalid_argument("HadamardCode: rows must have length equal to the row count");
            }
        }
    }

    std::size_t order() const noexcept { return rows_.size(); }
    const SignVector& row(std::size_t j) const { return rows_.at(j); }
    const std::vector<SignVector>& rows() const noexcept { return rows_; }

private:
    std::vector<SignVector> rows_;
};

/// H_1 = [+], H_2M = [[H, H], [H, -H]].
inline HadamardCode sylvester(std::size_t M) {
    if (!is_power_of_two(M)) {
        throw std::invalid_argument("sylvester: order " + std::to_string(M) + " is not a power of 2");
    }
    std::vector<std::vector<std::int8_t>> h{{1}};
    for (std::size_t n = 1; n < M; n *= 2) {
        std::vector<std::vector<std::int8_t>> next(2 * n, std::vector<std::int8_t>(2 * n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                next[i][j] = h[i][j];
                next[i][j + n] = h[i][j];
                next[i + n][j] = h[i][j];
                next[i + n][j + n] = static_cast<std::int8_t>(-h[i][j]);
            }
        }
        h = std::move(next);
    }
    std::vector<SignVector> rows;
    rows.reserve(M);
    for (auto& r : h) rows.emplace_back(std::move(r));
    return HadamardCode(std::move(rows));
}

/// True iff every pair of distinct rows is orthogonal. Entries are +-1 by
/// construction of SignVector.
inline bool verify_orthogonality(const HadamardCode& code) {
    const auto& rows = code.rows();
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            if (dot(rows[a], rows[b]) != 0) return false;
        }
    }
    return true;
}

inline IntVector subset_sum(const HadamardCode& code, std::span<const std::size_t> idxs) {
    const std::size_t M = code.order();
    std::vector<bool> used(M, false);
    IntVector sum(M, 0);
    for (auto j : idxs) {
        if (j >= M) {
            throw std::out_of_range("subset_sum: row index " + std::to_string(j) + " outside 0.." +
                                    std::to_string(M - 1));
        }
        if (used[j]) throw std::invalid_argument("subset_sum: row index " + std::to_string(j) + " repeated");
        used[j] = true;
        add_into(sum, code.row(j));
    }
    return sum;
}

/// l1 norm of the sum of distinct rows.
inline std::int64_t subset_sum_l1(const HadamardCode& code, std::span<const std::size_t> idxs) {
    return l1_norm(subset_sum(code, idxs));
}

/// l1 <= M^{3/2}, checked exactly as l1^2 <= M^3.
inline bool within_row_sum_bound(std::int64_t l1, std::uint64_t M) {
    const auto sq = static_cast<std::uint64_t>(l1) * static_cast<std::uint64_t>(l1);
    return sq <= M * M * M;
}

/// l1 <= M*sqrt(q), checked exactly as l1^2 <= M^2 * q.
inline bool within_refined_bound(std::int64_t l1, std::uint64_t M, std::uint64_t q) {
    const auto sq = static_cast<std::uint64_t>(l1) * static_cast<std::uint64_t>(l1);
    return sq <= M * M * q;
}

inline double split_bound(std::size_t M) {
    return std::sqrt(2.0) * std::pow(static_cast<double>(M), 1.5);
}

}  // namespace h2s

#endif  // H2S_HADAMARD_HPP
