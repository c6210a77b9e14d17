#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tilegraph/dual_graph.hpp"
#include "tilegraph/family.hpp"
#include "tilegraph/tiling.hpp"

namespace tilegraph {

// Compact representation of a uniform columnar tiling: column c holds
// counts[c] equal-height tiles spanning the full region height. Every tiling
// produced by the constructions here (powers of column tilings, vertical
// stacks, horizontal concatenations) has this form, which gives O(1) implicit
// adjacency without materializing tiles. Ids are column-major, matching the
// canonical lexicographic tile order of the exact-geometry path.
struct ColumnGrid {
    std::vector<std::int64_t> counts;
    std::vector<std::int64_t> prefix;  // size m+1
    std::vector<Rational> widths;
    Rational height = 1;

    std::int64_t num_columns() const { return static_cast<std::int64_t>(counts.size()); }
    std::int64_t num_vertices() const { return prefix.back(); }

    std::int64_t id_of(std::int64_t c, std::int64_t y) const { return prefix[static_cast<std::size_t>(c)] + y; }
    std::pair<std::int64_t, std::int64_t> locate(std::int64_t id) const {
        const auto it = std::upper_bound(prefix.begin(), prefix.end(), id) - 1;
        const std::int64_t c = it - prefix.begin();
        return {c, id - *it};
    }
    Rational tile_height(std::int64_t c) const { return height / counts[static_cast<std::size_t>(c)]; }

    void finalize() {
        prefix.assign(1, 0);
        prefix.reserve(counts.size() + 1);
        for (std::size_t c = 0; c < counts.size(); ++c) {
            if (counts[c] < 1 || counts[c] > (std::int64_t{1} << 31))
                throw std::invalid_argument("column grid: count out of range");
            prefix.push_back(prefix.back() + counts[c]);
        }
        if (widths.size() != counts.size()) throw std::invalid_argument("column grid: widths/counts mismatch");
    }
};

inline ColumnGrid grid_from_spec(const ColumnSpec& spec) {
    if (spec.gamma.empty()) throw std::invalid_argument("grid_from_spec: empty gamma");
    ColumnGrid g;
    const auto b = static_cast<long long>(spec.b());
    for (auto gm : spec.gamma) {
        g.counts.push_back(static_cast<std::int64_t>(gm));
        g.widths.push_back(rat(1, b));
    }
    g.finalize();
    return g;
}

// Column structure of T_γ^n: the n-fold Kronecker product of γ with itself.
inline ColumnGrid grid_power(const ColumnSpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("grid_power: negative exponent");
    ColumnGrid g;
    g.counts = {1};
    Rational width = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> next;
        next.reserve(spec.gamma.size() * g.counts.size());
        for (auto gm : spec.gamma)
            for (auto c : g.counts) next.push_back(static_cast<std::int64_t>(gm) * c);
        g.counts = std::move(next);
        width /= static_cast<long long>(spec.b());
    }
    g.widths.assign(g.counts.size(), width);
    g.finalize();
    return g;
}

inline ColumnGrid grid_stack(ColumnGrid g, int m) {
    if (m < 1) throw std::invalid_argument("grid_stack: need m >= 1");
    for (auto& c : g.counts) c *= m;
    g.height *= m;
    g.finalize();
    return g;
}

inline ColumnGrid grid_concat(ColumnGrid a, const ColumnGrid& b) {
    if (a.height != b.height) throw std::invalid_argument("grid_concat: height mismatch");
    a.counts.insert(a.counts.end(), b.counts.begin(), b.counts.end());
    a.widths.insert(a.widths.end(), b.widths.begin(), b.widths.end());
    a.finalize();
    return a;
}

// The finite approximant T^0 | T^1 | ... | T^n of the one-ended limit graph.
inline ColumnGrid grid_ray(const ColumnSpec& spec, int n) {
    ColumnGrid g = grid_power(spec, 0);
    for (int j = 1; j <= n; ++j) g = grid_concat(std::move(g), grid_power(spec, j));
    return g;
}

// Horizontal edges between adjacent uniform columns of sizes N and M: the two
// grids share gcd(N,M)-1 interior cut heights, so N + M - gcd(N,M) pairs of
// tiles overlap with positive length.
inline std::int64_t cross_edges(std::int64_t n, std::int64_t m) { return n + m - std::gcd(n, m); }

// Implicit adjacency view over a ColumnGrid; `cylindrical` adds the wrap edge
// joining the top and bottom tile of every column. Vertices are (column, row)
// pairs addressed by global id.
struct GridGraph {
    const ColumnGrid* grid = nullptr;
    bool cylindrical = false;

    std::int64_t num_vertices() const { return grid->num_vertices(); }

    // neighbors of row y in column d overlapping the tile (c, y)
    std::pair<std::int64_t, std::int64_t> side_range(std::int64_t c, std::int64_t y, std::int64_t d) const {
        const std::int64_t nc = grid->counts[static_cast<std::size_t>(c)];
        const std::int64_t nd = grid->counts[static_cast<std::size_t>(d)];
        return {(y * nd) / nc, ((y + 1) * nd - 1) / nc};
    }

    template <class F>
    void for_neighbors_cy(std::int64_t c, std::int64_t y, F&& f) const {
        const std::int64_t nc = grid->counts[static_cast<std::size_t>(c)];
        if (y > 0)
            f(c, y - 1);
        else if (cylindrical && nc >= 3)
            f(c, nc - 1);
        if (y < nc - 1)
            f(c, y + 1);
        else if (cylindrical && nc >= 3)
            f(c, 0);
        for (std::int64_t d : {c - 1, c + 1}) {
            if (d < 0 || d >= grid->num_columns()) continue;
            const auto [lo, hi] = side_range(c, y, d);
            for (std::int64_t z = lo; z <= hi; ++z) f(d, z);
        }
    }
    template <class F>
    void for_neighbors(std::int64_t id, F&& f) const {
        const auto [c, y] = grid->locate(id);
        for_neighbors_cy(c, y, [&](std::int64_t d, std::int64_t z) { f(grid->id_of(d, z)); });
    }
    std::int64_t degree_cy(std::int64_t c, std::int64_t y) const {
        std::int64_t deg = 0;
        for_neighbors_cy(c, y, [&](std::int64_t, std::int64_t) { ++deg; });
        return deg;
    }
};

// Materializes the CSR dual graph (with column partition attached); must agree
// exactly with build_dual() on the corresponding tiling.
inline DualGraph grid_dual(const ColumnGrid& g, std::int64_t max_vertices = 64'000'000) {
    if (g.num_vertices() > max_vertices) throw std::runtime_error("grid_dual: vertex budget exceeded");
    const std::int64_t m = g.num_columns();
    std::vector<std::tuple<std::int64_t, std::int64_t, std::uint8_t>> edges;
    std::int64_t total_edges = 0;
    for (std::int64_t c = 0; c < m; ++c) {
        total_edges += g.counts[static_cast<std::size_t>(c)] - 1;
        if (c + 1 < m)
            total_edges += cross_edges(g.counts[static_cast<std::size_t>(c)], g.counts[static_cast<std::size_t>(c + 1)]);
    }
    edges.reserve(static_cast<std::size_t>(total_edges));
    for (std::int64_t c = 0; c < m; ++c) {
        const std::int64_t nc = g.counts[static_cast<std::size_t>(c)];
        for (std::int64_t y = 0; y + 1 < nc; ++y) edges.emplace_back(g.id_of(c, y), g.id_of(c, y + 1), std::uint8_t{1});
        if (c + 1 == m) continue;
        const std::int64_t nd = g.counts[static_cast<std::size_t>(c + 1)];
        std::int64_t y = 0, z = 0;
        while (y < nc && z < nd) {
            if (std::max(y * nd, z * nc) < std::min((y + 1) * nd, (z + 1) * nc))
                edges.emplace_back(g.id_of(c, y), g.id_of(c + 1, z), std::uint8_t{2});
            const std::int64_t ye = (y + 1) * nd, ze = (z + 1) * nc;
            if (ye <= ze) ++y;
            if (ze <= ye) ++z;
        }
    }
    DualGraph dg = detail::csr_from_edges(g.num_vertices(), edges);
    std::vector<std::vector<std::int64_t>> cols(static_cast<std::size_t>(m));
    for (std::int64_t c = 0; c < m; ++c) {
        auto& col = cols[static_cast<std::size_t>(c)];
        col.resize(static_cast<std::size_t>(g.counts[static_cast<std::size_t>(c)]));
        std::iota(col.begin(), col.end(), g.id_of(c, 0));
    }
    attach_columns(dg, std::move(cols));
    return dg;
}

// Exact tile materialization; intended for modest sizes.
inline Tiling grid_tiling(const ColumnGrid& g, std::int64_t max_tiles = 4'000'000) {
    if (g.num_vertices() > max_tiles) throw std::runtime_error("grid_tiling: tile budget exceeded");
    Tiling t;
    Rational x = 0;
    for (std::int64_t c = 0; c < g.num_columns(); ++c) {
        const std::int64_t nc = g.counts[static_cast<std::size_t>(c)];
        const Rational w = g.widths[static_cast<std::size_t>(c)];
        const Rational h = g.tile_height(c);
        for (std::int64_t y = 0; y < nc; ++y) t.tiles.push_back(Tile{x, h * y, w, h, -1});
        x += w;
    }
    t.region = Tile{0, 0, x, g.height, -1};
    canonicalize(t);
    return t;
}

// Σ 1/|K_i| over columns, exactly; the Nash–Williams lower-bound quantity.
inline Rational nash_williams_column_sum(const ColumnGrid& g) {
    Rational s = 0;
    for (auto c : g.counts) s += Rational(1, c);
    return s;
}

}  // namespace tilegraph
