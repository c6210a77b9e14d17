#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilegraph/bfs.hpp"
#include "tilegraph/column_grid.hpp"
#include "tilegraph/dual_graph.hpp"

namespace tilegraph {

enum class ColumnStatus { Empty, Arc, Full, Violation };

struct ConvexityReport {
    std::int64_t center = -1;
    std::int32_t radius = 0;
    std::vector<ColumnStatus> per_column;
    std::int64_t witness_column = -1;
    std::vector<std::int64_t> witness_rows;  // re-checkable: a disconnected column trace
    bool ok = true;
};

namespace detail {

// rows within a cycle of length n: connected iff at most one circular jump
inline bool cyclic_arc(const std::vector<std::int64_t>& rows, std::int64_t n) {
    if (rows.empty() || rows.size() == static_cast<std::size_t>(n)) return true;
    std::int64_t jumps = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::int64_t cur = rows[i];
        const std::int64_t nxt = rows[(i + 1) % rows.size()];
        if ((nxt - cur - 1) % n != 0) ++jumps;
    }
    return jumps <= 1;
}

inline std::vector<std::int64_t> row_index(const DualGraph& g) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(g.n), -1);
    for (const auto& col : g.columns)
        for (std::size_t i = 0; i < col.size(); ++i) row[static_cast<std::size_t>(col[i])] = static_cast<std::int64_t>(i);
    return row;
}

}  // namespace detail

// Vertical convexity of B(v, R) on the cylindrical graph: every nonempty
// column intersection must be a single contiguous cyclic arc.
inline ConvexityReport vertical_convexity_check(const CylindricalGraph& cyl, std::int64_t v, std::int32_t R) {
    const DualGraph& g = cyl.g;
    ConvexityReport rep;
    rep.center = v;
    rep.radius = R;
    const auto dist = bfs_distances(g, v, R);
    const auto row = detail::row_index(g);
    std::vector<std::vector<std::int64_t>> rows_in(g.columns.size());
    for (std::size_t u = 0; u < dist.size(); ++u)
        if (dist[u] >= 0) rows_in[static_cast<std::size_t>(g.column_of[u])].push_back(row[u]);
    for (std::size_t c = 0; c < g.columns.size(); ++c) {
        auto& rows = rows_in[c];
        std::sort(rows.begin(), rows.end());
        const auto n = static_cast<std::int64_t>(g.columns[c].size());
        if (rows.empty()) rep.per_column.push_back(ColumnStatus::Empty);
        else if (rows.size() == static_cast<std::size_t>(n))
            rep.per_column.push_back(ColumnStatus::Full);
        else if (detail::cyclic_arc(rows, n))
            rep.per_column.push_back(ColumnStatus::Arc);
        else {
            rep.per_column.push_back(ColumnStatus::Violation);
            if (rep.ok) {
                rep.ok = false;
                rep.witness_column = static_cast<std::int64_t>(c);
                rep.witness_rows = rows;
            }
        }
    }
    return rep;
}

// Planar variant (no wrap edges): arcs must be linearly contiguous. The
// cylindrical lemma does not cover this case; results are reported only.
inline ConvexityReport vertical_convexity_check_planar(const DualGraph& g, std::int64_t v, std::int32_t R) {
    ConvexityReport rep;
    rep.center = v;
    rep.radius = R;
    const auto dist = bfs_distances(g, v, R);
    const auto row = detail::row_index(g);
    std::vector<std::vector<std::int64_t>> rows_in(g.columns.size());
    for (std::size_t u = 0; u < dist.size(); ++u)
        if (dist[u] >= 0) rows_in[static_cast<std::size_t>(g.column_of[u])].push_back(row[u]);
    for (std::size_t c = 0; c < g.columns.size(); ++c) {
        auto& rows = rows_in[c];
        std::sort(rows.begin(), rows.end());
        if (rows.empty()) {
            rep.per_column.push_back(ColumnStatus::Empty);
            continue;
        }
        bool contiguous = true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i] != rows[i - 1] + 1) contiguous = false;
        if (contiguous)
            rep.per_column.push_back(rows.size() == g.columns[c].size() ? ColumnStatus::Full : ColumnStatus::Arc);
        else {
            rep.per_column.push_back(ColumnStatus::Violation);
            if (rep.ok) {
                rep.ok = false;
                rep.witness_column = static_cast<std::int64_t>(c);
                rep.witness_rows = rows;
            }
        }
    }
    return rep;
}

struct ComplementReport {
    bool connected = true;
    std::int64_t witness_a = -1, witness_b = -1;  // representatives of two components
    bool outside_guarantee = false;               // R beyond the proven range b^n/3
    bool complement_empty = false;
    std::vector<std::int64_t> certificate;  // left-to-right row of tiles avoiding the ball
    bool certificate_ok = false;
};

// Connectivity of V ∖ B(v, R) on the cylindrical graph, with the horizontal
// line certificate when the column grid is supplied: a height ĥ whose row of
// tiles avoids the ball and spans the left edge to the right edge.
inline ComplementReport ball_complement_connected(const CylindricalGraph& cyl, std::int64_t v, std::int32_t R,
                                                  const ColumnGrid* grid = nullptr) {
    const DualGraph& g = cyl.g;
    ComplementReport rep;
    rep.outside_guarantee = 3 * static_cast<std::int64_t>(R) > static_cast<std::int64_t>(g.columns.size());
    const auto dist = bfs_distances(g, v, R);

    std::int64_t first_out = -1, outside = 0;
    for (std::size_t u = 0; u < dist.size(); ++u)
        if (dist[u] < 0) {
            ++outside;
            if (first_out < 0) first_out = static_cast<std::int64_t>(u);
        }
    if (outside == 0) {
        rep.complement_empty = true;
        return rep;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<std::int64_t> stk{first_out};
    seen[static_cast<std::size_t>(first_out)] = 1;
    std::int64_t reached = 1;
    while (!stk.empty()) {
        const std::int64_t u = stk.back();
        stk.pop_back();
        g.for_neighbors(u, [&](std::int64_t w) {
            if (dist[static_cast<std::size_t>(w)] < 0 && !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stk.push_back(w);
            }
        });
    }
    if (reached != outside) {
        rep.connected = false;
        rep.witness_a = first_out;
        for (std::size_t u = 0; u < dist.size(); ++u)
            if (dist[u] < 0 && !seen[u]) {
                rep.witness_b = static_cast<std::int64_t>(u);
                break;
            }
    }

    if (grid != nullptr && rep.connected) {
        // merge the y-extents of ball tiles and pick a height in a gap
        std::vector<std::pair<Rational, Rational>> iv;
        for (std::size_t u = 0; u < dist.size(); ++u)
            if (dist[u] >= 0) {
                const auto [c, y] = grid->locate(static_cast<std::int64_t>(u));
                const Rational h = grid->tile_height(c);
                iv.emplace_back(h * y, h * (y + 1));
            }
        std::sort(iv.begin(), iv.end());
        Rational best_lo = 0, best_hi = 0, cur = 0;
        bool have_gap = false;
        for (auto& [a, b] : iv) {
            if (a > cur && a - cur > best_hi - best_lo) {
                best_lo = cur;
                best_hi = a;
                have_gap = true;
            }
            if (b > cur) cur = b;
        }
        if (grid->height > cur && grid->height - cur > best_hi - best_lo) {
            best_lo = cur;
            best_hi = grid->height;
            have_gap = true;
        }
        if (have_gap) {
            const Rational hhat = (best_lo + best_hi) / 2;
            bool ok = true;
            std::int64_t prev = -1;
            for (std::int64_t c = 0; c < grid->num_columns() && ok; ++c) {
                const Rational pos = hhat * grid->counts[static_cast<std::size_t>(c)] / grid->height;
                const std::int64_t ystar = static_cast<std::int64_t>(num(pos) / den(pos));  // floor, pos >= 0
                const std::int64_t id = grid->id_of(c, ystar);
                if (dist[static_cast<std::size_t>(id)] >= 0) ok = false;  // must avoid the ball
                if (prev >= 0 && !g.has_edge(prev, id)) ok = false;
                rep.certificate.push_back(id);
                prev = id;
            }
            rep.certificate_ok = ok;
            if (!ok) rep.certificate.clear();
        }
    }
    return rep;
}

// The complement of a vertically convex set is vertically convex (columns are
// cycles); checked directly on a given set.
inline bool complement_vertically_convex(const CylindricalGraph& cyl, const std::vector<std::int64_t>& set) {
    const DualGraph& g = cyl.g;
    std::vector<char> in(static_cast<std::size_t>(g.n), 0);
    for (auto v : set) in[static_cast<std::size_t>(v)] = 1;
    const auto row = detail::row_index(g);
    for (std::size_t c = 0; c < g.columns.size(); ++c) {
        std::vector<std::int64_t> rows;
        for (auto v : g.columns[c])
            if (!in[static_cast<std::size_t>(v)]) rows.push_back(row[static_cast<std::size_t>(v)]);
        std::sort(rows.begin(), rows.end());
        if (!detail::cyclic_arc(rows, static_cast<std::int64_t>(g.columns[c].size()))) return false;
    }
    return true;
}

}  // namespace tilegraph
