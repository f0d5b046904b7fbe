/**
 * @file core.hpp
 * @brief Domain types and scoring for hypercube 2-segmentation.
 *
 * Everything inside the library works over {+1,-1}. The two objective
 * formulations are linked by agree(x, y) = (d + <x, y>) / 2: for a cluster
 * scored against its coordinatewise-majority center, the total agreement is
 * (|cluster| * d + l1(cluster sum)) / 2.
 */

#ifndef H2S_CORE_HPP
#define H2S_CORE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace h2s {

/// A point of {+1,-1}^d.
class SignVector {
public:
    SignVector() = default;

    explicit SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw std::invalid_argument("SignVector: dimension must be at least 1");
        }
        for (auto e : entries_) {
            if (e != 1 && e != -1) {
                throw std::invalid_argument("SignVector: entries must be +1 or -1");
            }
        }
    }

    SignVector(std::initializer_list<int> entries)
        : SignVector(std::vector<std::int8_t>(entries.begin(), entries.end())) {}

    /// Parses a string of '+' / '-' characters.
    static SignVector from_string(std::string_view s) {
        std::vector<std::int8_t> e;
        e.reserve(s.size());
        for (char ch : s) {
            if (ch == '+') {
                e.push_back(1);
            } else if (ch == '-') {
                e.push_back(-1);
            } else {
                throw std::invalid_argument(std::string("SignVector: invalid character '") + ch + "'");
            }
        }
        return SignVector(std::move(e));
    }

    /// All-(+1) vector of dimension d.
    static SignVector ones(std::size_t d) { return SignVector(std::vector<std::int8_t>(d, 1)); }

    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t j) const { return entries_[j]; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }
    std::span<const std::int8_t> entries() const noexcept { return entries_; }

    SignVector negated() const {
        auto e = entries_;
        for (auto& v : e) v = static_cast<std::int8_t>(-v);
        return SignVector(std::move(e));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(entries_.size());
        for (auto e : entries_) s.push_back(e > 0 ? '+' : '-');
        return s;
    }

    friend bool operator==(const SignVector&, const SignVector&) = default;

private:
    std::vector<std::int8_t> entries_;
};

/// Coordinatewise sum of sign vectors.
using IntVector = std::vector<std::int64_t>;

enum class Side : std::uint8_t { One = 1, Two = 2 };

inline Side other(Side s) noexcept { return s == Side::One ? Side::Two : Side::One; }

/// Assignment of each instance vector to cluster 1 or cluster 2. Either
/// cluster may be empty.
struct Bipartition {
    std::vector<Side> side;

    Bipartition() = default;
    explicit Bipartition(std::vector<Side> s) : side(std::move(s)) {}
    explicit Bipartition(std::size_t k, Side s = Side::One) : side(k, s) {}

    /// Bit i of `mask` set means vector i is on side 2.
    static Bipartition from_mask(std::size_t k, std::uint64_t mask) {
        Bipartition p(k);
        for (std::size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1U) p.side[i] = Side::Two;
        }
        return p;
    }

    std::size_t size() const noexcept { return side.size(); }

    Bipartition swapped() const {
        Bipartition p = *this;
        for (auto& s : p.side) s = other(s);
        return p;
    }

    /// "1122..." rendering used in reports.
    std::string to_string() const {
        std::string s;
        s.reserve(side.size());
        for (auto v : side) s.push_back(v == Side::One ? '1' : '2');
        return s;
    }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
    /// Lexicographic on labels, side 1 < side 2.
    friend auto operator<=>(const Bipartition& a, const Bipartition& b) { return a.side <=> b.side; }
};

struct CenterPair {
    SignVector c1;
    SignVector c2;
    friend bool operator==(const CenterPair&, const CenterPair&) = default;
};

/// Copy `copy` of graph vertex `vertex`.
struct VectorGroup {
    std::size_t vertex = 0;
    std::size_t copy = 0;
    friend bool operator==(const VectorGroup&, const VectorGroup&) = default;
};

/// Provenance of an instance produced by the max-cut reduction.
struct BlockMeta {
    std::size_t block_size = 0;
    std::vector<std::size_t> edge_blocks;    // block index -> edge id
    std::vector<VectorGroup> vector_groups;  // vector index -> (vertex, copy)

    std::size_t num_vertices() const {
        std::set<std::size_t> seen;
        for (const auto& g : vector_groups) seen.insert(g.vertex);
        return seen.size();
    }

    friend bool operator==(const BlockMeta&, const BlockMeta&) = default;
};

class H2SInstance {
public:
    explicit H2SInstance(std::vector<SignVector> vectors, std::optional<BlockMeta> meta = std::nullopt)
        : vectors_(std::move(vectors)), meta_(std::move(meta)) {
        if (vectors_.empty()) {
            throw std::invalid_argument("H2SInstance: at least one vector is required");
        }
        dim_ = vectors_.front().size();
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (vectors_[i].size() != dim_) {
                throw std::invalid_argument("H2SInstance: vector " + std::to_string(i) + " has dimension " +
                                            std::to_string(vectors_[i].size()) + ", expected " +
                                            std::to_string(dim_));
            }
        }
        if (meta_) validate_meta(*meta_);
    }

    std::size_t size() const noexcept { return vectors_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    const SignVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<SignVector>& vectors() const noexcept { return vectors_; }
    const std::optional<BlockMeta>& block_meta() const noexcept { return meta_; }

    friend bool operator==(const H2SInstance&, const H2SInstance&) = default;

private:
    void validate_meta(const BlockMeta& meta) const {
        const std::size_t M = meta.block_size;
        if (M == 0) throw std::invalid_argument("BlockMeta: block size must be positive");
        if (dim_ != M * meta.edge_blocks.size()) {
            throw std::invalid_argument("BlockMeta: d must equal M times the number of edge blocks");
        }
        if (meta.vector_groups.size() != vectors_.size()) {
            throw std::invalid_argument("BlockMeta: one vector group entry per vector is required");
        }
        if (vectors_.size() != M * meta.num_vertices()) {
            throw std::invalid_argument("BlockMeta: k must equal M times the number of vertex groups");
        }
        for (const auto& g : meta.vector_groups) {
            if (g.copy >= M) throw std::invalid_argument("BlockMeta: copy index out of range");
        }
    }

    std::vector<SignVector> vectors_;
    std::size_t dim_ = 0;
    std::optional<BlockMeta> meta_;
};

namespace detail {

inline void require_same_dim(const SignVector& x, const SignVector& y, const char* what) {
    if (x.size() != y.size()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()) + ")");
    }
}

inline void require_partition(const H2SInstance& inst, const Bipartition& p, const char* what) {
    if (p.size() != inst.size()) {
        throw std::invalid_argument(std::string(what) + ": partition has " + std::to_string(p.size()) +
                                    " labels for " + std::to_string(inst.size()) + " vectors");
    }
}

inline void require_centers(const H2SInstance& inst, const CenterPair& c, const char* what) {
    if (c.c1.size() != inst.dim() || c.c2.size() != inst.dim()) {
        throw std::invalid_argument(std::string(what) + ": center dimension does not match instance");
    }
}

/// True if side-2 mask a is lexicographically smaller than b (index 0
/// first, side 1 before side 2).
inline bool lex_less_mask(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    return (a & low) == 0;
}

inline std::size_t gray_flip_bit(std::uint64_t step) noexcept {
    return static_cast<std::size_t>(__builtin_ctzll(step));
}

}  // namespace detail

inline std::int64_t dot(const SignVector& x, const SignVector& y) {
    detail::require_same_dim(x, y, "dot");
    std::int64_t s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * y[j];
    return s;
}

/// Number of coordinates on which x and y agree.
inline std::size_t agree(const SignVector& x, const SignVector& y) {
    detail::require_same_dim(x, y, "agree");
    std::size_t n = 0;
    for (std::size_t j = 0; j < x.size(); ++j) n += (x[j] == y[j]);
    return n;
}

inline std::size_t hamming(const SignVector& x, const SignVector& y) {
    detail::require_same_dim(x, y, "hamming");
    return x.size() - agree(x, y);
}

inline void add_into(IntVector& acc, const SignVector& v) {
    for (std::size_t j = 0; j < v.size(); ++j) acc[j] += v[j];
}

inline void subtract_from(IntVector& acc, const SignVector& v) {
    for (std::size_t j = 0; j < v.size(); ++j) acc[j] -= v[j];
}

/// Coordinatewise sum; an empty list gives the zero vector of dimension d.
inline IntVector cluster_sum(std::span<const SignVector> vs, std::size_t d) {
    IntVector sum(d, 0);
    for (const auto& v : vs) {
        if (v.size() != d) {
            throw std::invalid_argument("cluster_sum: vector of dimension " + std::to_string(v.size()) +
                                        " in a cluster of dimension " + std::to_string(d));
        }
        add_into(sum, v);
    }
    return sum;
}

inline std::int64_t l1_norm(const IntVector& v) {
    std::int64_t s = 0;
    for (auto e : v) s += e < 0 ? -e : e;
    return s;
}

/// Sign of each coordinate of a cluster sum; zero coordinates become +1.
inline SignVector sign_of(const IntVector& sum) {
    std::vector<std::int8_t> e(sum.size());
    for (std::size_t j = 0; j < sum.size(); ++j) e[j] = sum[j] >= 0 ? 1 : -1;
    return SignVector(std::move(e));
}

/// Coordinatewise majority; ties and empty clusters give +1.
inline SignVector majority_center(std::span<const SignVector> vs, std::size_t d) {
    return sign_of(cluster_sum(vs, d));
}

/// Cluster sums (side 1, side 2) of a bipartition.
inline std::pair<IntVector, IntVector> side_sums(const H2SInstance& inst, const Bipartition& p) {
    detail::require_partition(inst, p, "side_sums");
    IntVector s1(inst.dim(), 0), s2(inst.dim(), 0);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        add_into(p.side[i] == Side::One ? s1 : s2, inst[i]);
    }
    return {std::move(s1), std::move(s2)};
}

/// Sum of the l1 norms of the two cluster sums.
inline std::int64_t score_l1(const H2SInstance& inst, const Bipartition& p) {
    auto [s1, s2] = side_sums(inst, p);
    return l1_norm(s1) + l1_norm(s2);
}

inline CenterPair majority_centers(const H2SInstance& inst, const Bipartition& p) {
    auto [s1, s2] = side_sums(inst, p);
    return {sign_of(s1), sign_of(s2)};
}

/// Sum over vectors of the better agreement with the two centers.
inline std::int64_t score_agreement(const H2SInstance& inst, const CenterPair& centers) {
    detail::require_centers(inst, centers, "score_agreement");
    std::int64_t total = 0;
    for (const auto& x : inst.vectors()) {
        total += static_cast<std::int64_t>(std::max(agree(centers.c1, x), agree(centers.c2, x)));
    }
    return total;
}

/// Agreement when each vector is scored against its own cluster's center.
inline std::int64_t assigned_agreement(const H2SInstance& inst, const Bipartition& p, const CenterPair& centers) {
    detail::require_partition(inst, p, "assigned_agreement");
    detail::require_centers(inst, centers, "assigned_agreement");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& c = p.side[i] == Side::One ? centers.c1 : centers.c2;
        total += static_cast<std::int64_t>(agree(c, inst[i]));
    }
    return total;
}

/// Each vector goes to the center it agrees with more; ties go to side 1.
inline Bipartition voronoi_assign(const H2SInstance& inst, const CenterPair& centers) {
    detail::require_centers(inst, centers, "voronoi_assign");
    Bipartition p(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) {
        if (agree(centers.c1, inst[i]) < agree(centers.c2, inst[i])) p.side[i] = Side::Two;
    }
    return p;
}

/// Agreement value implied by an l1 score under majority centers.
inline std::int64_t agreement_from_l1(const H2SInstance& inst, std::int64_t l1) {
    return (static_cast<std::int64_t>(inst.size() * inst.dim()) + l1) / 2;
}

}  // namespace h2s

#endif  // H2S_CORE_HPP
