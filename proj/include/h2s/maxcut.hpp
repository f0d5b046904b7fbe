/**
 * @file maxcut.hpp
 * @brief Unweighted max-cut: exact enumeration, local search, fractional cuts
 * and their rounding to integer cuts.
 */

#ifndef H2S_MAXCUT_HPP
#define H2S_MAXCUT_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "h2s/core.hpp"
#include "h2s/random.hpp"

namespace h2s {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected graph: no self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            const auto [u, v] = edges_[e];
            if (u >= n_ || v >= n_) {
                throw std::invalid_argument("Graph: edge " + std::to_string(e) + " has an endpoint outside 0.." +
                                            std::to_string(n_ == 0 ? 0 : n_ - 1));
            }
            if (u == v) throw std::invalid_argument("Graph: edge " + std::to_string(e) + " is a self-loop");
            if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
                throw std::invalid_argument("Graph: edge " + std::to_string(e) + " is a duplicate");
            }
        }
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(n_);
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    bool connected() const {
        if (n_ == 0) return true;
        auto adj = adjacency();
        std::vector<bool> seen(n_, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n_;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

struct CutAssignment {
    std::vector<Side> side;

    std::size_t size() const noexcept { return side.size(); }

    /// Bit i of `mask` set means vertex i is on side 2.
    static CutAssignment from_mask(std::size_t n, std::uint64_t mask) {
        CutAssignment a{std::vector<Side>(n, Side::One)};
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) a.side[i] = Side::Two;
        }
        return a;
    }

    std::string to_string() const {
        std::string s;
        for (auto v : side) s.push_back(v == Side::One ? '1' : '2');
        return s;
    }

    friend bool operator==(const CutAssignment&, const CutAssignment&) = default;
};

/// x[i] in [0,1] is the extent to which vertex i lies on side 1.
struct FractionalCut {
    std::vector<double> x;

    FractionalCut() = default;
    explicit FractionalCut(std::vector<double> values) : x(std::move(values)) {
        for (auto v : x) {
            if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("FractionalCut: entries must lie in [0,1]");
        }
    }

    static FractionalCut from_assignment(const CutAssignment& a) {
        std::vector<double> x(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) x[i] = a.side[i] == Side::One ? 1.0 : 0.0;
        return FractionalCut(std::move(x));
    }

    std::size_t size() const noexcept { return x.size(); }
};

struct CutResult {
    CutAssignment assignment;
    std::int64_t value = 0;
};

inline constexpr std::size_t kDefaultMaxcutExactLimit = 22;
inline constexpr double kRoundingTolerance = 1e-9;

inline std::int64_t cut_value(const Graph& g, const CutAssignment& a) {
    if (a.size() != g.num_vertices()) {
        throw std::invalid_argument("cut_value: assignment has " + std::to_string(a.size()) + " labels for " +
                                    std::to_string(g.num_vertices()) + " vertices");
    }
    std::int64_t c = 0;
    for (const auto& e : g.edges()) c += (a.side[e.u] != a.side[e.v]);
    return c;
}

/// Sum over edges of |x_u - x_v|.
inline double fractional_cut_value(const Graph& g, const FractionalCut& f) {
    if (f.size() != g.num_vertices()) {
        throw std::invalid_argument("fractional_cut_value: size mismatch");
    }
    double s = 0.0;
    for (const auto& e : g.edges()) s += std::abs(f.x[e.u] - f.x[e.v]);
    return s;
}

/// Exhaustive max-cut over the 2^(n-1) assignments with vertex 0 on side 1,
/// visited in Gray-code order. Among optimal assignments the
/// lexicographically smallest is returned.
inline CutResult maxcut_exact(const Graph& g, std::size_t limit = kDefaultMaxcutExactLimit) {
    const std::size_t n = g.num_vertices();
    if (n > limit || n > 63) {
        throw std::invalid_argument("maxcut_exact: n = " + std::to_string(n) + " exceeds the exact limit of " +
                                    std::to_string(std::min<std::size_t>(limit, 63)));
    }
    if (n == 0) return {};
    const auto adj = g.adjacency();
    std::uint64_t mask = 0;  // bit i set: vertex i on side 2
    std::int64_t value = 0;
    std::uint64_t best_mask = 0;
    std::int64_t best = 0;
    const std::uint64_t steps = std::uint64_t{1} << (n - 1);
    for (std::uint64_t step = 1; step < steps; ++step) {
        const std::size_t v = detail::gray_flip_bit(step) + 1;
        const bool v_side = (mask >> v) & 1U;
        std::int64_t same = 0;
        for (auto w : adj[v]) same += (((mask >> w) & 1U) == v_side);
        value += same - (static_cast<std::int64_t>(adj[v].size()) - same);
        mask ^= std::uint64_t{1} << v;
        if (value > best || (value == best && detail::lex_less_mask(mask, best_mask))) {
            best = value;
            best_mask = mask;
        }
    }
    return {CutAssignment::from_mask(n, best_mask), best};
}

namespace detail {

/// Best-improvement single-vertex moves until no move increases the cut.
/// Ties in gain go to the lowest vertex index.
inline std::int64_t climb_cut(const std::vector<std::vector<std::size_t>>& adj, std::vector<Side>& side,
                              std::int64_t value) {
    const std::size_t n = side.size();
    for (;;) {
        std::int64_t best_gain = 0;
        std::size_t best_v = n;
        for (std::size_t v = 0; v < n; ++v) {
            std::int64_t gain = 0;
            for (auto w : adj[v]) gain += side[w] == side[v] ? 1 : -1;
            if (gain > best_gain) {
                best_gain = gain;
                best_v = v;
            }
        }
        if (best_v == n) return value;
        side[best_v] = other(side[best_v]);
        value += best_gain;
    }
}

}  // namespace detail

/// Randomly restarted 1-swap local search. A 1-swap local optimum cuts at
/// least half the edges at every vertex, hence at least ceil(m/2) overall.
inline CutResult maxcut_local(const Graph& g, std::uint64_t seed, std::size_t restarts) {
    if (restarts == 0) throw std::invalid_argument("maxcut_local: restarts must be at least 1");
    const std::size_t n = g.num_vertices();
    const auto adj = g.adjacency();
    Rng rng(mix_seed(seed));
    CutResult best;
    bool have = false;
    for (std::size_t r = 0; r < restarts; ++r) {
        CutAssignment a{std::vector<Side>(n, Side::One)};
        for (auto& s : a.side) s = coin(rng) ? Side::Two : Side::One;
        const auto value = detail::climb_cut(adj, a.side, cut_value(g, a));
        if (!have || value > best.value || (value == best.value && a.side < best.assignment.side)) {
            best = {std::move(a), value};
            have = true;
        }
    }
    return best;
}

/// Rounds a fractional cut to an integer cut that is at least as large.
///
/// Vertices are fixed in index order. With the other coordinates held, the
/// objective is a sum of |x_i - x_j| terms and so convex in x_i; its maximum
/// over [0,1] sits at an endpoint, and moving x_i there cannot lower the total.
/// Ties go to x_i = 1 (side 1).
inline CutAssignment round_fractional(const Graph& g, const FractionalCut& f) {
    if (f.size() != g.num_vertices()) throw std::invalid_argument("round_fractional: size mismatch");
    const auto adj = g.adjacency();
    std::vector<double> x = f.x;
    CutAssignment a{std::vector<Side>(x.size(), Side::One)};
    for (std::size_t i = 0; i < x.size(); ++i) {
        double at0 = 0.0, at1 = 0.0;
        for (auto j : adj[i]) {
            at0 += std::abs(0.0 - x[j]);
            at1 += std::abs(1.0 - x[j]);
        }
        x[i] = at1 >= at0 - kRoundingTolerance ? 1.0 : 0.0;
        a.side[i] = x[i] == 1.0 ? Side::One : Side::Two;
    }
    return a;
}

}  // namespace h2s

#endif  // H2S_MAXCUT_HPP
