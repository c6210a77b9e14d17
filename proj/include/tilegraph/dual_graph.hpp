#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "tilegraph/tiling.hpp"

namespace tilegraph {

// Dual graph of a tiling: vertices are tile ids, edges join tiles sharing a
// boundary segment of positive length. Each adjacency entry carries the
// contact axis: 1 when the separating segment is parallel to the x-axis
// (top/bottom neighbors), 2 when parallel to the y-axis (left/right).
struct DualGraph {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets;  // CSR, size n+1
    std::vector<std::int64_t> nbrs;     // sorted within each row
    std::vector<std::uint8_t> axis;     // parallel to nbrs

    std::vector<std::vector<std::int64_t>> columns;  // empty unless columnar
    std::vector<std::int32_t> column_of;

    std::int64_t num_vertices() const { return n; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(nbrs.size()) / 2; }
    std::int64_t degree(std::int64_t v) const { return offsets[v + 1] - offsets[v]; }
    std::span<const std::int64_t> neighbors(std::int64_t v) const {
        return {nbrs.data() + offsets[v], nbrs.data() + offsets[v + 1]};
    }
    template <class F>
    void for_neighbors(std::int64_t v, F&& f) const {
        for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) f(nbrs[i]);
    }
    bool has_edge(std::int64_t u, std::int64_t v) const {
        for (std::int64_t i = offsets[u]; i < offsets[u + 1]; ++i)
            if (nbrs[i] == v) return true;
        return false;
    }
};

namespace detail {

inline DualGraph csr_from_edges(std::int64_t n,
                                std::vector<std::tuple<std::int64_t, std::int64_t, std::uint8_t>>& edges) {
    DualGraph g;
    g.n = n;
    g.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [u, v, a] : edges) {
        ++g.offsets[static_cast<std::size_t>(u) + 1];
        ++g.offsets[static_cast<std::size_t>(v) + 1];
    }
    for (std::int64_t i = 0; i < n; ++i) g.offsets[i + 1] += g.offsets[i];
    g.nbrs.resize(static_cast<std::size_t>(g.offsets[n]));
    g.axis.resize(g.nbrs.size());
    std::vector<std::int64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (auto& [u, v, a] : edges) {
        g.nbrs[static_cast<std::size_t>(cursor[u])] = v;
        g.axis[static_cast<std::size_t>(cursor[u]++)] = a;
        g.nbrs[static_cast<std::size_t>(cursor[v])] = u;
        g.axis[static_cast<std::size_t>(cursor[v]++)] = a;
    }
    // sort each row by neighbor id, keeping axis tags aligned
    for (std::int64_t v = 0; v < n; ++v) {
        const std::int64_t lo = g.offsets[v], hi = g.offsets[v + 1];
        std::vector<std::pair<std::int64_t, std::uint8_t>> row;
        row.reserve(static_cast<std::size_t>(hi - lo));
        for (std::int64_t i = lo; i < hi; ++i) row.emplace_back(g.nbrs[i], g.axis[i]);
        std::sort(row.begin(), row.end());
        for (std::int64_t i = lo; i < hi; ++i) {
            g.nbrs[i] = row[static_cast<std::size_t>(i - lo)].first;
            g.axis[i] = row[static_cast<std::size_t>(i - lo)].second;
        }
    }
    return g;
}

// Merge-join two lists of disjoint intervals sorted by start; emits pairs
// with positive-length overlap.
template <class Emit>
inline void overlap_join(const std::vector<std::pair<Rational, Rational>>& a,
                         const std::vector<std::pair<Rational, Rational>>& b,
                         const std::vector<std::int64_t>& aid, const std::vector<std::int64_t>& bid,
                         Emit&& emit) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Rational lo = a[i].first > b[j].first ? a[i].first : b[j].first;
        const Rational hi = a[i].second < b[j].second ? a[i].second : b[j].second;
        if (lo < hi) emit(aid[i], bid[j]);
        if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
}

}  // namespace detail

// Exact sweep construction of the dual graph: tiles are grouped by shared
// contact lines (right edge of one meets left edge of another, and likewise
// top/bottom), then joined on overlapping cross-intervals. Throws if the
// resulting graph is disconnected.
inline DualGraph build_dual(const Tiling& t) {
    const std::int64_t n = t.size();
    if (n == 0) throw std::invalid_argument("build_dual: empty tiling");

    struct Line {
        std::vector<std::pair<Rational, Rational>> iv;
        std::vector<std::int64_t> id;
    };
    std::map<Rational, Line> right_at, left_at, top_at, bottom_at;
    for (const Tile& a : t.tiles) {
        right_at[a.right()].iv.emplace_back(a.y, a.top());
        right_at[a.right()].id.push_back(a.id);
        left_at[a.x].iv.emplace_back(a.y, a.top());
        left_at[a.x].id.push_back(a.id);
        top_at[a.top()].iv.emplace_back(a.x, a.right());
        top_at[a.top()].id.push_back(a.id);
        bottom_at[a.y].iv.emplace_back(a.x, a.right());
        bottom_at[a.y].id.push_back(a.id);
    }
    // canonical tile order leaves left_at and bottom_at groups sorted by
    // interval start; right_at and top_at mix tiles of different sizes
    auto sort_line = [](Line& ln) {
        std::vector<std::size_t> idx(ln.iv.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return ln.iv[x].first < ln.iv[y].first; });
        Line out;
        out.iv.reserve(ln.iv.size());
        out.id.reserve(ln.id.size());
        for (auto i : idx) {
            out.iv.push_back(ln.iv[i]);
            out.id.push_back(ln.id[i]);
        }
        ln = std::move(out);
    };
    for (auto& [x, ln] : right_at) sort_line(ln);
    for (auto& [y, ln] : top_at) sort_line(ln);

    std::vector<std::tuple<std::int64_t, std::int64_t, std::uint8_t>> edges;
    for (auto& [x, rline] : right_at) {
        auto it = left_at.find(x);
        if (it == left_at.end()) continue;
        detail::overlap_join(rline.iv, it->second.iv, rline.id, it->second.id,
                             [&](std::int64_t u, std::int64_t v) { edges.emplace_back(u, v, std::uint8_t{2}); });
    }
    for (auto& [y, tline] : top_at) {
        auto it = bottom_at.find(y);
        if (it == bottom_at.end()) continue;
        detail::overlap_join(tline.iv, it->second.iv, tline.id, it->second.id,
                             [&](std::int64_t u, std::int64_t v) { edges.emplace_back(u, v, std::uint8_t{1}); });
    }

    DualGraph g = detail::csr_from_edges(n, edges);

    // connectivity is a standing assumption for every tiling considered here
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> stack{0};
    seen[0] = 1;
    std::int64_t found = 1;
    while (!stack.empty()) {
        const std::int64_t v = stack.back();
        stack.pop_back();
        g.for_neighbors(v, [&](std::int64_t u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++found;
                stack.push_back(u);
            }
        });
    }
    if (found != n) throw std::invalid_argument("build_dual: dual graph is disconnected");
    return g;
}

// Column partition of a columnar tiling (all tiles within a vertical strip
// share that strip's width). Columns are ordered left to right, each sorted
// bottom to top. Throws for non-columnar tilings.
inline std::vector<std::vector<std::int64_t>> columns(const Tiling& t) {
    std::map<Rational, std::pair<Rational, std::vector<std::int64_t>>> strips;  // x -> (width, ids)
    for (const Tile& a : t.tiles) {
        auto [it, fresh] = strips.emplace(a.x, std::make_pair(a.w, std::vector<std::int64_t>{}));
        if (!fresh && it->second.first != a.w)
            throw std::invalid_argument("columns: tiling is not columnar");
        it->second.second.push_back(a.id);
    }
    Rational x = t.region.x;
    std::vector<std::vector<std::int64_t>> cols;
    cols.reserve(strips.size());
    for (auto& [x0, strip] : strips) {
        if (x0 != x) throw std::invalid_argument("columns: tiling is not columnar");
        x = x0 + strip.first;
        // canonical ids are lexicographic by (x, y): already bottom-to-top
        cols.push_back(std::move(strip.second));
    }
    if (x != t.region.right()) throw std::invalid_argument("columns: strips do not span region");
    return cols;
}

inline void attach_columns(DualGraph& g, std::vector<std::vector<std::int64_t>> cols) {
    g.columns = std::move(cols);
    g.column_of.assign(static_cast<std::size_t>(g.n), -1);
    for (std::size_t c = 0; c < g.columns.size(); ++c)
        for (auto v : g.columns[c]) g.column_of[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(c);
}

// α_T: max over dual-graph neighbors of side-length ratios; 1 for a single tile.
inline Rational alpha(const Tiling& t, const DualGraph& g) {
    if (t.size() == 1) return 1;
    Rational a = 1;
    for (std::int64_t v = 0; v < g.n; ++v) {
        const Tile& tv = t.tiles[static_cast<std::size_t>(v)];
        g.for_neighbors(v, [&](std::int64_t u) {
            const Tile& tu = t.tiles[static_cast<std::size_t>(u)];
            const Rational r1 = tv.w / tu.w, r2 = tv.h / tu.h;
            if (r1 > a) a = r1;
            if (r2 > a) a = r2;
        });
    }
    return a;
}

inline Rational alpha(const Tiling& t) { return alpha(t, build_dual(t)); }

// Dual graph plus a wrap edge joining the top and bottom tile of each column,
// turning every column into a cycle.
struct CylindricalGraph {
    DualGraph g;  // adjacency including the wrap edges (axis tag 1)
    std::vector<std::pair<std::int64_t, std::int64_t>> wrap_edges;

    std::int64_t num_vertices() const { return g.n; }
    std::int64_t degree(std::int64_t v) const { return g.degree(v); }
    template <class F>
    void for_neighbors(std::int64_t v, F&& f) const {
        g.for_neighbors(v, f);
    }
};

inline CylindricalGraph cylindrify(const DualGraph& base) {
    if (base.columns.empty()) throw std::invalid_argument("cylindrify: column partition required");
    std::vector<std::tuple<std::int64_t, std::int64_t, std::uint8_t>> edges;
    for (std::int64_t v = 0; v < base.n; ++v)
        for (std::int64_t i = base.offsets[v]; i < base.offsets[v + 1]; ++i)
            if (base.nbrs[i] > v) edges.emplace_back(v, base.nbrs[i], base.axis[i]);
    CylindricalGraph c;
    for (const auto& col : base.columns) {
        if (col.size() <= 2)
            throw std::invalid_argument("cylindrify: column of size <= 2 would need a multigraph");
        edges.emplace_back(col.front(), col.back(), std::uint8_t{1});
        c.wrap_edges.emplace_back(col.front(), col.back());
    }
    c.g = detail::csr_from_edges(base.n, edges);
    attach_columns(c.g, base.columns);
    return c;
}

}  // namespace tilegraph
