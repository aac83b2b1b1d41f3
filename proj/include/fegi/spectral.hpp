#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fegi/dd_real.hpp"
#include "fegi/graph.hpp"

namespace fegi {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct reducible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hop-count matrix. Off-diagonal unreachable pairs hold the finite
// surrogate L = n, which strictly exceeds any possible diameter (n-1).
struct distance_matrix {
    int n = 0;
    std::vector<int> d;

    explicit distance_matrix(int n_) : n(n_), d(static_cast<std::size_t>(n_) * n_, 0) {}
    int operator()(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

// Floyd–Warshall on unit edge weights.
inline distance_matrix all_pairs_shortest_distance(const graph& g) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("all_pairs_shortest_distance: empty graph");
    const int far = 2 * n; // anything > n works as +inf during relaxation
    distance_matrix dm(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dm.at(i, j) = i == j ? 0 : (g.has_edge(i, j) ? 1 : far);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dm.at(i, j) = std::min(dm(i, j), dm(i, k) + dm(k, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && dm(i, j) > n) dm.at(i, j) = n; // surrogate L
    return dm;
}

// Dense nonnegative square matrix; entry (i,j) is the edge weight, i.e. the
// energy term attached to the step i -> j.
template <class R>
struct weight_matrix {
    int n = 0;
    std::vector<R> w;

    weight_matrix() = default;
    explicit weight_matrix(int n_) : n(n_), w(static_cast<std::size_t>(n_) * n_, R(0.0)) {}

    R& operator()(int i, int j) { return w[static_cast<std::size_t>(i) * n + j]; }
    const R& operator()(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
};

// W(i,j) = 1/d(i,j) off the diagonal, 0 on it. Every off-diagonal entry is
// >= 1/L > 0, so the matrix is irreducible whatever the graph looks like.
template <class R>
weight_matrix<R> reciprocal_distance_matrix(const graph& g) {
    const auto dm = all_pairs_shortest_distance(g);
    weight_matrix<R> w(dm.n);
    for (int i = 0; i < dm.n; ++i)
        for (int j = 0; j < dm.n; ++j)
            if (i != j) w(i, j) = R(1.0) / R(static_cast<double>(dm(i, j)));
    return w;
}

struct power_options {
    double tol = 1e-13;
    long max_iter = 100000;
};

template <class R>
struct spectral_result {
    R perron{};
    std::vector<R> right_vec;
    std::vector<R> left_vec;
    std::vector<R> stationary;
};

namespace detail {

template <class R>
void check_nonnegative(const weight_matrix<R>& m) {
    for (const R& x : m.w)
        if (x < R(0.0)) throw std::invalid_argument("weight matrix entry < 0");
}

template <class R>
struct dominant_pair {
    R value{};
    std::vector<R> vec;
};

// Power iteration on m + I. The shift makes the iteration matrix primitive
// even for bipartite-structured inputs (spectrum ±λ) and moves eigenvectors
// not at all; the returned value is the shifted estimate minus 1.
//
// Convergence: successive eigenvalue estimates within tol·max(1,|est|);
// when track_vector is set the normalized iterate must also settle to tol in
// the ∞-norm, which is what makes the stationary distribution trustworthy.
template <class R>
dominant_pair<R> dominant_shifted(const weight_matrix<R>& m, bool transposed,
                                  const power_options& opt, bool track_vector) {
    using std::abs;
    using std::sqrt;
    const int n = m.n;
    const R tol(opt.tol);

    std::vector<R> v(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    {
        R inv_norm = R(1.0) / sqrt(R(static_cast<double>(n)));
        for (auto& x : v) x = inv_norm;
    }
    R est_prev(0.0);
    bool have_prev = false;
    for (long it = 0; it < opt.max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            R acc = v[static_cast<std::size_t>(i)]; // the +I shift
            for (int j = 0; j < n; ++j) {
                const R& mij = transposed ? m(j, i) : m(i, j);
                acc += mij * v[static_cast<std::size_t>(j)];
            }
            y[static_cast<std::size_t>(i)] = acc;
        }
        R rayleigh(0.0), norm2(0.0);
        for (int i = 0; i < n; ++i) {
            rayleigh += v[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
            norm2 += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        }
        const R norm = sqrt(norm2);
        for (auto& x : y) x /= norm;
        const R est = rayleigh - R(1.0);

        bool eig_ok = have_prev && abs(est - est_prev) <= tol * std::max(R(1.0), abs(est));
        bool vec_ok = true;
        if (track_vector) {
            R diff(0.0);
            for (int i = 0; i < n; ++i)
                diff = std::max(diff, abs(y[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]));
            vec_ok = diff <= tol;
        }
        v.swap(y);
        if (eig_ok && vec_ok) return {est, std::move(v)};
        est_prev = est;
        have_prev = true;
    }
    throw convergence_error("power iteration: no convergence within iteration cap");
}

} // namespace detail

// Perron root (largest eigenvalue) of a nonnegative matrix.
template <class R>
R perron(const weight_matrix<R>& m, const power_options& opt = {}) {
    if (m.n == 0) return R(0.0);
    detail::check_nonnegative(m);
    return detail::dominant_shifted(m, false, opt, false).value;
}

// Perron root plus left/right eigenvectors and the stationary distribution
// pi_i = eta_i * xi_i / sum_k eta_k * xi_k.
template <class R>
spectral_result<R> parry_stationary(const weight_matrix<R>& m, const power_options& opt = {}) {
    if (m.n < 1) throw std::invalid_argument("parry_stationary: empty matrix");
    detail::check_nonnegative(m);
    auto right = detail::dominant_shifted(m, false, opt, true);
    auto left = detail::dominant_shifted(m, true, opt, true);

    // Reducible inputs cannot produce exact zeros from a positive start in
    // floating point; components merely decay. Treat a collapsed component
    // as the non-positive entry the theory predicts.
    for (const auto* vec : {&right.vec, &left.vec}) {
        R lo = (*vec)[0], hi = (*vec)[0];
        for (const R& x : *vec) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        if (!(lo > R(0.0)) || lo <= R(1e-8) * hi)
            throw reducible_error("parry_stationary: non-positive eigenvector component (matrix reducible?)");
    }

    spectral_result<R> out;
    out.perron = right.value;
    out.right_vec = std::move(right.vec);
    out.left_vec = std::move(left.vec);
    out.stationary.resize(out.right_vec.size());
    R total(0.0);
    for (std::size_t i = 0; i < out.stationary.size(); ++i) {
        out.stationary[i] = out.left_vec[i] * out.right_vec[i];
        total += out.stationary[i];
    }
    for (auto& x : out.stationary) x /= total;
    return out;
}

// Free energy of a (possibly disconnected, possibly tiny) graph: the Perron
// root of its reciprocal-distance matrix. Graphs with fewer than two nodes
// carry zero energy.
template <class R>
R subgraph_free_energy(const graph& g, const power_options& opt = {}) {
    if (g.size() < 1) return R(0.0);
    return perron(reciprocal_distance_matrix<R>(g), opt);
}

} // namespace fegi
