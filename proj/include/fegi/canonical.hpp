#pragma once

#include <stdexcept>
#include <vector>

#include "fegi/graph.hpp"
#include "fegi/spectral.hpp"

namespace fegi {

// Output of the refinement pass: the fully encoded weight matrix plus the
// three structural energy tables it was assembled from.
template <class R>
struct refined_matrix {
    weight_matrix<R> base;
    std::vector<R> nh_table;  // neighbourhood-graph energies, one per node
    weight_matrix<R> sn_table; // shared-neighbours energies, per pair
    weight_matrix<R> un_table; // union-neighbours energies, per pair
};

template <class R>
using node_weights = std::vector<R>;

// Build the refined matrix:
//   W(i,j) = 1/d(i,j) [i != j, else 0]
//          + NH(i) + NH(j) + SN(i,j) + UN(i,j)
// over every pair including the diagonal. NH(i) is the free energy of the
// neighbourhood graph of i, SN/UN those of the shared/union neighbours
// graphs. SN(i,i) and UN(i,i) both equal NH(i): all three extractors yield
// the same subgraph when i == j.
template <class R>
refined_matrix<R> refine(const graph& g, const power_options& opt = {}) {
    const int n = g.size();
    if (n < 1) throw std::invalid_argument("refine: empty graph");
    refined_matrix<R> r{weight_matrix<R>(n), std::vector<R>(static_cast<std::size_t>(n)),
                        weight_matrix<R>(n), weight_matrix<R>(n)};

    const auto dm = all_pairs_shortest_distance(g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) r.base(i, j) = R(1.0) / R(static_cast<double>(dm(i, j)));

    for (int i = 0; i < n; ++i) {
        const R nh = subgraph_free_energy<R>(neighbourhood_subgraph(g, i), opt);
        r.nh_table[static_cast<std::size_t>(i)] = nh;
        r.sn_table(i, i) = nh;
        r.un_table(i, i) = nh;
        for (int j = i + 1; j < n; ++j) {
            const R sn = subgraph_free_energy<R>(shared_neighbours_subgraph(g, i, j), opt);
            const R un = subgraph_free_energy<R>(union_neighbours_subgraph(g, i, j), opt);
            r.sn_table(i, j) = r.sn_table(j, i) = sn;
            r.un_table(i, j) = r.un_table(j, i) = un;
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r.base(i, j) += r.nh_table[static_cast<std::size_t>(i)] + r.nh_table[static_cast<std::size_t>(j)] +
                            r.sn_table(i, j) + r.un_table(i, j);
    return r;
}

template <class R>
R canonical_number(const graph& g, const power_options& opt = {}) {
    return perron(refine<R>(g, opt).base, opt);
}

// Spread node weights onto edges: M(i,j) = base(i,j) + w(i) + w(j), the
// diagonal picking up 2*w(i). Symmetry and irreducibility survive.
template <class R>
weight_matrix<R> overlay_node_weights(const refined_matrix<R>& r, const node_weights<R>& w) {
    const int n = r.base.n;
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("overlay_node_weights: dimension mismatch");
    weight_matrix<R> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = r.base(i, j) + w[static_cast<std::size_t>(i)] + w[static_cast<std::size_t>(j)];
    return m;
}

template <class R>
R weighted_canonical_number(const refined_matrix<R>& r, const node_weights<R>& w,
                            const power_options& opt = {}) {
    return perron(overlay_node_weights(r, w), opt);
}

} // namespace fegi
