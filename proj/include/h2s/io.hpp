/**
 * @file io.hpp
 * @brief Text formats for graphs and instances.
 *
 * Graph file: a header line "n m" followed by m lines "u v" (0-indexed).
 *
 * Instance file: a header line "k d" followed by k rows of exactly d
 * characters from {'+','-'}. The header "binary k d" switches the rows to
 * {'1','0'}, read as +1 / -1. Lines starting with '#' are comments, except
 * "#meta" lines before the header, which carry reduction block metadata:
 *
 *     #meta block_size 4
 *     #meta edge_blocks 0 1 2
 *     #meta vector_groups 0:0 0:1 0:2 0:3 1:0 ...
 */

#ifndef H2S_IO_HPP
#define H2S_IO_HPP

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "h2s/core.hpp"
#include "h2s/maxcut.hpp"

namespace h2s {

class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& source, std::size_t line, const std::string& reason)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + reason), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

inline std::optional<std::size_t> parse_size(std::string_view tok) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

/// Reads lines, tracking 1-based line numbers.
class LineReader {
public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        ++line_no_;
        return true;
    }

    std::size_t line_no() const noexcept { return line_no_; }
    const std::string& source() const noexcept { return source_; }

    [[noreturn]] void fail(const std::string& reason) const { throw FormatError(source_, line_no_, reason); }
    [[noreturn]] void fail_at(std::size_t line, const std::string& reason) const {
        throw FormatError(source_, line, reason);
    }

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_no_ = 0;
};

inline std::size_t expect_size(const LineReader& r, std::string_view tok, const char* what) {
    auto v = parse_size(tok);
    if (!v) r.fail(std::string("expected a non-negative integer for ") + what + ", got '" + std::string(tok) + "'");
    return *v;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path, 0, "cannot open file");
    return in;
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, const std::string& source = "<graph>") {
    detail::LineReader r(in, source);
    std::string line;
    std::optional<std::size_t> n, m;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (r.next(line)) {
        const auto body = detail::trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto tok = detail::split_ws(body);
        if (tok.size() != 2) r.fail("expected two integers, got " + std::to_string(tok.size()) + " fields");
        if (!n) {
            n = detail::expect_size(r, tok[0], "n");
            m = detail::expect_size(r, tok[1], "m");
            continue;
        }
        const auto u = detail::expect_size(r, tok[0], "u");
        const auto v = detail::expect_size(r, tok[1], "v");
        if (edges.size() == *m) r.fail("more than the declared " + std::to_string(*m) + " edges");
        if (u >= *n || v >= *n) r.fail("vertex id outside 0.." + std::to_string(*n == 0 ? 0 : *n - 1));
        if (u == v) r.fail("self-loop on vertex " + std::to_string(u));
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
            r.fail("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        edges.push_back({u, v});
    }
    if (!n) r.fail_at(r.line_no() + 1, "missing header line \"n m\"");
    if (edges.size() != *m) {
        r.fail_at(r.line_no() + 1, "expected " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(*n, std::move(edges));
}

inline Graph load_graph(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_graph(in, path);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace detail {

inline void parse_meta_line(const LineReader& r, std::string_view body, BlockMeta& meta, bool& any) {
    const auto tok = split_ws(body);
    if (tok.size() < 2) r.fail("malformed #meta line");
    any = true;
    if (tok[1] == "block_size") {
        if (tok.size() != 3) r.fail("#meta block_size takes one value");
        meta.block_size = expect_size(r, tok[2], "block_size");
    } else if (tok[1] == "edge_blocks") {
        for (std::size_t i = 2; i < tok.size(); ++i) meta.edge_blocks.push_back(expect_size(r, tok[i], "edge id"));
    } else if (tok[1] == "vector_groups") {
        for (std::size_t i = 2; i < tok.size(); ++i) {
            const auto colon = tok[i].find(':');
            if (colon == std::string_view::npos) r.fail("vector group must be vertex:copy, got '" + std::string(tok[i]) + "'");
            meta.vector_groups.push_back(
                {expect_size(r, tok[i].substr(0, colon), "vertex"), expect_size(r, tok[i].substr(colon + 1), "copy")});
        }
    } else {
        r.fail("unknown #meta key '" + std::string(tok[1]) + "'");
    }
}

}  // namespace detail

inline H2SInstance parse_instance(std::istream& in, const std::string& source = "<instance>") {
    detail::LineReader r(in, source);
    std::string line;
    BlockMeta meta;
    bool have_meta = false;
    bool binary = false;
    std::optional<std::size_t> k, d;
    std::size_t header_line = 0;
    std::vector<SignVector> rows;
    while (r.next(line)) {
        const auto body = detail::trim(line);
        if (!k) {
            if (body.empty()) continue;
            if (body.starts_with("#meta")) {
                detail::parse_meta_line(r, body, meta, have_meta);
                continue;
            }
            if (body.front() == '#') continue;
            auto tok = detail::split_ws(body);
            if (!tok.empty() && tok[0] == "binary") {
                binary = true;
                tok.erase(tok.begin());
            }
            if (tok.size() != 2) r.fail("expected header \"k d\" or \"binary k d\"");
            k = detail::expect_size(r, tok[0], "k");
            d = detail::expect_size(r, tok[1], "d");
            if (*k == 0 || *d == 0) r.fail("k and d must be positive");
            header_line = r.line_no();
            continue;
        }
        if (body.empty() || body.front() == '#') continue;
        if (rows.size() == *k) r.fail("more than the declared " + std::to_string(*k) + " rows");
        if (body.size() != *d) {
            r.fail("row length " + std::to_string(body.size()) + " != " + std::to_string(*d));
        }
        std::vector<std::int8_t> e(*d);
        for (std::size_t j = 0; j < *d; ++j) {
            const char ch = body[j];
            if (!binary && ch == '+') {
                e[j] = 1;
            } else if (!binary && ch == '-') {
                e[j] = -1;
            } else if (binary && ch == '1') {
                e[j] = 1;
            } else if (binary && ch == '0') {
                e[j] = -1;
            } else {
                r.fail(std::string("invalid character '") + ch + "' at column " + std::to_string(j + 1));
            }
        }
        rows.emplace_back(std::move(e));
    }
    if (!k) r.fail_at(r.line_no() + 1, "missing header line \"k d\"");
    if (rows.size() != *k) {
        r.fail_at(r.line_no() + 1, "expected " + std::to_string(*k) + " rows, found " + std::to_string(rows.size()));
    }
    try {
        return H2SInstance(std::move(rows), have_meta ? std::optional<BlockMeta>(std::move(meta)) : std::nullopt);
    } catch (const std::invalid_argument& ex) {
        throw FormatError(source, header_line, ex.what());
    }
}

inline H2SInstance load_instance(const std::string& path) {
    auto in = detail::open_input(path);
    return parse_instance(in, path);
}

/// Canonical form: metadata, "k d" header, '+'/'-' rows.
inline void write_instance(std::ostream& out, const H2SInstance& inst) {
    if (const auto& meta = inst.block_meta()) {
        out << "#meta block_size " << meta->block_size << '\n';
        out << "#meta edge_blocks";
        for (auto e : meta->edge_blocks) out << ' ' << e;
        out << '\n';
        out << "#meta vector_groups";
        for (const auto& g : meta->vector_groups) out << ' ' << g.vertex << ':' << g.copy;
        out << '\n';
    }
    out << inst.size() << ' ' << inst.dim() << '\n';
    for (const auto& v : inst.vectors()) out << v.to_string() << '\n';
}

inline void save_instance(const H2SInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_instance: cannot open " + path + " for writing");
    write_instance(out, inst);
    if (!out) throw std::runtime_error("save_instance: write to " + path + " failed");
}

}  // namespace h2s

#endif  // H2S_IO_HPP
