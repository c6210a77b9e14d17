#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tilegraph/column_grid.hpp"
#include "tilegraph/dual_graph.hpp"

namespace tilegraph {

// Weighted graph with edge conductances and per-vertex self-loop weights.
// Self-loops do not enter the Laplacian; they only add laziness to the walk
// law Pr[u→v] = c_uv / c_u with c_u = c_uu + Σ_v c_uv.
struct WeightedGraph {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets;
    std::vector<std::int64_t> nbrs;
    std::vector<double> cond;
    std::vector<double> self_loop;
    std::vector<double> vertex_weight;  // c_u
    bool path_shape = false;            // vertices form a path in index order

    std::int64_t num_vertices() const { return n; }
    template <class F>
    void for_neighbors(std::int64_t v, F&& f) const {
        for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) f(nbrs[i]);
    }
    template <class F>
    void for_weighted_neighbors(std::int64_t v, F&& f) const {
        for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) f(nbrs[i], cond[i]);
    }
};

inline WeightedGraph weighted_from_edges(std::int64_t n,
                                         const std::vector<std::tuple<std::int64_t, std::int64_t, double>>& edges,
                                         std::vector<double> self_loop = {}) {
    WeightedGraph g;
    g.n = n;
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [u, v, w] : edges) {
        if (w <= 0) throw std::invalid_argument("weighted graph: conductances must be positive");
        ++g.offsets[static_cast<std::size_t>(u) + 1];
        ++g.offsets[static_cast<std::size_t>(v) + 1];
    }
    for (std::int64_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
    g.nbrs.resize(static_cast<std::size_t>(g.offsets[n]));
    g.cond.resize(g.nbrs.size());
    std::vector<std::int64_t> cur(g.offsets.begin(), g.offsets.end() - 1);
    for (auto& [u, v, w] : edges) {
        g.nbrs[static_cast<std::size_t>(cur[u])] = v;
        g.cond[static_cast<std::size_t>(cur[u]++)] = w;
        g.nbrs[static_cast<std::size_t>(cur[v])] = u;
        g.cond[static_cast<std::size_t>(cur[v]++)] = w;
    }
    g.self_loop = self_loop.empty() ? std::vector<double>(static_cast<std::size_t>(n), 0.0) : std::move(self_loop);
    if (g.self_loop.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("weighted graph: self-loop size mismatch");
    g.vertex_weight.assign(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t v = 0; v < n; ++v) {
        double s = g.self_loop[static_cast<std::size_t>(v)];
        for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i) s += g.cond[i];
        g.vertex_weight[static_cast<std::size_t>(v)] = s;
        if (s <= 0) throw std::invalid_argument("weighted graph: zero vertex weight");
    }
    return g;
}

// Linearized graph L: every column collapses to one vertex; edge conductances
// count the cross-column edges, self-loops are c_uu = 2|C_u|.
inline WeightedGraph linearize(const DualGraph& g) {
    if (g.columns.empty()) throw std::invalid_argument("linearize: column partition required");
    const std::int64_t m = static_cast<std::int64_t>(g.columns.size());
    std::vector<double> cross(static_cast<std::size_t>(m), 0.0);
    for (std::int64_t v = 0; v < g.n; ++v) {
        const std::int32_t cv = g.column_of[static_cast<std::size_t>(v)];
        g.for_neighbors(v, [&](std::int64_t u) {
            const std::int32_t cu = g.column_of[static_cast<std::size_t>(u)];
            if (cu == cv + 1) cross[static_cast<std::size_t>(cv)] += 1.0;
            else if (cu != cv && cu != cv - 1)
                throw std::invalid_argument("linearize: non-adjacent columns share an edge");
        });
    }
    std::vector<std::tuple<std::int64_t, std::int64_t, double>> edges;
    for (std::int64_t c = 0; c + 1 < m; ++c) edges.emplace_back(c, c + 1, cross[static_cast<std::size_t>(c)]);
    std::vector<double> self(static_cast<std::size_t>(m));
    for (std::int64_t c = 0; c < m; ++c) self[static_cast<std::size_t>(c)] = 2.0 * double(g.columns[static_cast<std::size_t>(c)].size());
    WeightedGraph w = weighted_from_edges(m, edges, std::move(self));
    w.path_shape = true;
    return w;
}

// Same graph computed from the column structure alone.
inline WeightedGraph linearize(const ColumnGrid& grid) {
    const std::int64_t m = grid.num_columns();
    std::vector<std::tuple<std::int64_t, std::int64_t, double>> edges;
    for (std::int64_t c = 0; c + 1 < m; ++c)
        edges.emplace_back(c, c + 1,
                           double(cross_edges(grid.counts[static_cast<std::size_t>(c)],
                                              grid.counts[static_cast<std::size_t>(c + 1)])));
    std::vector<double> self(static_cast<std::size_t>(m));
    for (std::int64_t c = 0; c < m; ++c) self[static_cast<std::size_t>(c)] = 2.0 * double(grid.counts[static_cast<std::size_t>(c)]);
    WeightedGraph w = weighted_from_edges(m, edges, std::move(self));
    w.path_shape = true;
    return w;
}

}  // namespace tilegraph
