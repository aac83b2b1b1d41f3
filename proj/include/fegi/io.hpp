#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fegi/graph.hpp"

namespace fegi {

// Thrown by every text parser here. `position` is the 0-based byte offset of
// the offending character for graph6 records, and the 1-based line number for
// edge-list text.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

namespace detail {

inline std::string offset_msg(const std::string& what, std::size_t off) {
    return what + " at byte " + std::to_string(off);
}

} // namespace detail

// graph6: printable 6-bit encoding, one record per line. Single-byte size
// header only (n < 63); payload bits run over the upper triangle in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ...
inline graph parse_graph6(std::string_view line) {
    if (line.empty()) throw parse_error(detail::offset_msg("graph6: malformed header (empty record)", 0), 0);
    const unsigned char h = static_cast<unsigned char>(line[0]);
    if (h == 126) throw parse_error(detail::offset_msg("graph6: multi-byte size header unsupported", 0), 0);
    if (h < 63 || h > 126)
        throw parse_error(detail::offset_msg("graph6: header character outside 63..126", 0), 0);
    const int n = static_cast<int>(h) - 63;

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (line.size() < 1 + need)
        throw parse_error(detail::offset_msg("graph6: truncated bit field", line.size()), line.size());
    if (line.size() > 1 + need)
        throw parse_error(detail::offset_msg("graph6: trailing data", 1 + need), 1 + need);

    graph g(n);
    std::size_t bit = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < need; ++k) {
        const unsigned char c = static_cast<unsigned char>(line[1 + k]);
        if (c < 63 || c > 126)
            throw parse_error(detail::offset_msg("graph6: payload character outside 63..126", 1 + k), 1 + k);
        const unsigned v = static_cast<unsigned>(c) - 63;
        for (int b = 5; b >= 0 && bit < bits; --b, ++bit) {
            if ((v >> b) & 1u) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

inline std::string emit_graph6(const graph& g) {
    const int n = g.size();
    if (n >= 63) throw std::invalid_argument("emit_graph6: n >= 63 unsupported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

namespace detail {

inline bool parse_int(std::string_view tok, int& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) toks.push_back(s.substr(start, i - start));
    }
    return toks;
}

} // namespace detail

// Edge-list text: first line "n <count>", then one "u v" per edge.
// Duplicate edges collapse; blank lines are ignored.
inline graph parse_edge_list(std::string_view text) {
    std::size_t lineno = 0;
    bool have_header = false;
    graph g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (!have_header) {
            int n = -1;
            if (toks.size() != 2 || toks[0] != "n" || !detail::parse_int(toks[1], n) || n < 0)
                throw parse_error("edge list: expected header \"n <count>\" at line " + std::to_string(lineno), lineno);
            g = graph(n);
            have_header = true;
            continue;
        }
        int u = -1, v = -1;
        if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
            throw parse_error("edge list: unparseable token at line " + std::to_string(lineno), lineno);
        if (u < 0 || u >= g.size() || v < 0 || v >= g.size())
            throw parse_error("edge list: node index out of range at line " + std::to_string(lineno), lineno);
        if (u == v)
            throw parse_error("edge list: self-loop at line " + std::to_string(lineno), lineno);
        g.add_edge(u, v);
    }
    if (!have_header) throw parse_error("edge list: missing header line", 1);
    return g;
}

inline std::string emit_edge_list(const graph& g) {
    std::string out = "n " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

enum class graph_format { graph6, edges };

// File-level reader. graph6: one record per non-blank line. edges: blocks,
// each starting at a line "n <count>". Errors carry the absolute line number.
inline std::vector<graph> read_graphs(std::istream& in, graph_format fmt) {
    std::vector<graph> out;
    std::string line;
    if (fmt == graph_format::graph6) {
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            try {
                out.push_back(parse_graph6(line));
            } catch (const parse_error& e) {
                throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), lineno);
            }
        }
        return out;
    }
    // Edge-list blocks: accumulate lines, cut before each "n <count>" header.
    std::vector<std::pair<std::size_t, std::string>> blocks; // (start line, text)
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "n") blocks.emplace_back(lineno, std::string{});
        if (blocks.empty())
            throw parse_error("line " + std::to_string(lineno) + ": edge list: expected header \"n <count>\"", lineno);
        blocks.back().second += line;
        blocks.back().second += '\n';
    }
    for (const auto& [start, text] : blocks) {
        try {
            out.push_back(parse_edge_list(text));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(start + e.position - 1) + ": " + e.what(), start + e.position - 1);
        }
    }
    return out;
}

inline void write_graphs(std::ostream& os, const std::vector<graph>& gs, graph_format fmt) {
    for (const auto& g : gs) {
        if (fmt == graph_format::graph6)
            os << emit_graph6(g) << '\n';
        else
            os << emit_edge_list(g);
    }
}

} // namespace fegi
