#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fegi {

// Simple undirected graph over dense node indices 0..n-1.
// Adjacency is symmetric and loop-free by construction.
class graph {
public:
    graph() = default;
    explicit graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("graph: negative node count");
    }

    static graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int size() const { return n_; }

    bool has_edge(int i, int j) const {
        check_node(i);
        check_node(j);
        return adj_[idx(i, j)] != 0;
    }

    void add_edge(int i, int j) {
        check_node(i);
        check_node(j);
        if (i == j) throw std::invalid_argument("graph: self-loop");
        adj_[idx(i, j)] = 1;
        adj_[idx(j, i)] = 1;
    }

    int degree(int i) const {
        check_node(i);
        int d = 0;
        for (int j = 0; j < n_; ++j) d += adj_[idx(i, j)];
        return d;
    }

    // Ascending original indices.
    std::vector<int> neighbours(int i) const {
        check_node(i);
        std::vector<int> out;
        for (int j = 0; j < n_; ++j)
            if (adj_[idx(i, j)]) out.push_back(j);
        return out;
    }

    // Each edge once, i < j, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (adj_[idx(i, j)]) out.emplace_back(i, j);
        return out;
    }

    int edge_count() const {
        int m = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) m += adj_[idx(i, j)];
        return m;
    }

    bool operator==(const graph& other) const = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
    void check_node(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("graph: node index out of range");
    }

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
};

// Induced subgraph on the given nodes; `nodes` must be ascending original
// indices (the inherited node order of every extractor below).
inline graph induced_subgraph(const graph& g, const std::vector<int>& nodes) {
    graph s(static_cast<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            if (g.has_edge(nodes[a], nodes[b])) s.add_edge(static_cast<int>(a), static_cast<int>(b));
    return s;
}

inline graph neighbourhood_subgraph(const graph& g, int i) {
    return induced_subgraph(g, g.neighbours(i));
}

// i == j is allowed; the shared set is then N(i).
inline graph shared_neighbours_subgraph(const graph& g, int i, int j) {
    std::vector<int> nodes;
    for (int v = 0; v < g.size(); ++v)
        if (g.has_edge(i, v) && g.has_edge(j, v)) nodes.push_back(v);
    return induced_subgraph(g, nodes);
}

// Node set N(i) ∪ N(j); i itself belongs iff i is adjacent to j.
inline graph union_neighbours_subgraph(const graph& g, int i, int j) {
    std::vector<int> nodes;
    for (int v = 0; v < g.size(); ++v)
        if (g.has_edge(i, v) || g.has_edge(j, v)) nodes.push_back(v);
    return induced_subgraph(g, nodes);
}

inline bool is_connected(const graph& g) {
    const int n = g.size();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (!seen[v] && g.has_edge(u, v)) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

// Bijection on [0, n); map[i] is the image of node i.
struct permutation {
    std::vector<int> map;

    permutation() = default;
    explicit permutation(std::vector<int> m) : map(std::move(m)) {
        if (!valid()) throw std::invalid_argument("permutation: not a bijection");
    }

    static permutation identity(int n) {
        std::vector<int> m(static_cast<std::size_t>(n));
        std::iota(m.begin(), m.end(), 0);
        return permutation(std::move(m));
    }

    int size() const { return static_cast<int>(map.size()); }
    int operator()(int i) const { return map[static_cast<std::size_t>(i)]; }

    bool valid() const {
        std::vector<char> seen(map.size(), 0);
        for (int v : map) {
            if (v < 0 || v >= static_cast<int>(map.size()) || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
};

inline permutation inverse(const permutation& p) {
    std::vector<int> inv(p.map.size());
    for (int i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p(i))] = i;
    return permutation(std::move(inv));
}

// (p(u), p(v)) is an edge of the result iff (u, v) is an edge of g.
inline graph apply_permutation(const graph& g, const permutation& p) {
    if (p.size() != g.size()) throw std::invalid_argument("apply_permutation: size mismatch");
    graph h(g.size());
    for (auto [u, v] : g.edges()) h.add_edge(p(u), p(v));
    return h;
}

// Fisher–Yates over a seeded deterministic generator: same seed, same result.
inline permutation random_permutation(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_permutation: negative size");
    std::mt19937_64 rng(seed);
    std::vector<int> m(static_cast<std::size_t>(n));
    std::iota(m.begin(), m.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(pick(rng))]);
    }
    return permutation(std::move(m));
}

} // namespace fegi
