#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tilegraph {

// Graph adapters expose num_vertices() and for_neighbors(v, f); BFS works on
// any of DualGraph, CylindricalGraph, GridGraph.

template <class G>
std::vector<std::int32_t> bfs_distances(const G& g, std::span<const std::int64_t> sources,
                                        std::int32_t cap = -1) {
    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.num_vertices()), -1);
    std::vector<std::int64_t> cur(sources.begin(), sources.end()), nxt;
    for (auto v : cur) dist[static_cast<std::size_t>(v)] = 0;
    std::int32_t level = 0;
    while (!cur.empty() && (cap < 0 || level < cap)) {
        ++level;
        nxt.clear();
        for (auto v : cur)
            g.for_neighbors(v, [&](std::int64_t u) {
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = level;
                    nxt.push_back(u);
                }
            });
        cur.swap(nxt);
    }
    return dist;
}

template <class G>
std::vector<std::int32_t> bfs_distances(const G& g, std::int64_t source, std::int32_t cap = -1) {
    const std::int64_t s[1] = {source};
    return bfs_distances(g, std::span<const std::int64_t>(s, 1), cap);
}

// Closed ball B(v, r), as a sorted id list.
template <class G>
std::vector<std::int64_t> bfs_ball(const G& g, std::int64_t v, std::int32_t r) {
    std::vector<std::int64_t> out;
    const auto dist = bfs_distances(g, v, r);
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] >= 0) out.push_back(static_cast<std::int64_t>(i));
    return out;
}

// Ball sizes |B(v, r)| for every r in [0, rmax], via one BFS.
template <class G>
std::vector<std::int64_t> ball_growth_curve(const G& g, std::int64_t v, std::int32_t rmax) {
    const auto dist = bfs_distances(g, v, rmax);
    std::vector<std::int64_t> count(static_cast<std::size_t>(rmax) + 1, 0);
    for (auto d : dist)
        if (d >= 0) ++count[static_cast<std::size_t>(d)];
    for (std::size_t r = 1; r < count.size(); ++r) count[r] += count[r - 1];
    return count;
}

struct DiameterResult {
    std::int64_t lower = 0, upper = 0;
    bool exact = false;
    std::int64_t bfs_runs = 0;
};

// iFUB: exact diameter when it converges within the BFS budget, otherwise
// certified lower/upper bounds (upper from twice the best eccentricity).
template <class G>
DiameterResult diameter(const G& g, std::int64_t bfs_budget = 512) {
    DiameterResult res;
    const std::int64_t n = g.num_vertices();
    if (n <= 1) {
        res.exact = true;
        return res;
    }
    auto farthest = [&](const std::vector<std::int32_t>& dist) {
        std::int64_t best = 0;
        for (std::size_t i = 0; i < dist.size(); ++i)
            if (dist[i] > dist[static_cast<std::size_t>(best)]) best = static_cast<std::int64_t>(i);
        return best;
    };
    auto d0 = bfs_distances(g, std::int64_t{0});
    const std::int64_t a = farthest(d0);
    auto da = bfs_distances(g, a);
    const std::int64_t b = farthest(da);
    res.lower = da[static_cast<std::size_t>(b)];
    res.bfs_runs = 2;

    // root at the midpoint of the a--b path, using parents along a's BFS
    std::int64_t mid = b;
    {
        std::int32_t steps = da[static_cast<std::size_t>(b)] / 2;
        std::int64_t v = b;
        while (steps > 0) {
            std::int64_t next = v;
            g.for_neighbors(v, [&](std::int64_t u) {
                if (da[static_cast<std::size_t>(u)] == da[static_cast<std::size_t>(v)] - 1 && next == v) next = u;
            });
            v = next;
            --steps;
        }
        mid = v;
    }
    auto dm = bfs_distances(g, mid);
    ++res.bfs_runs;
    std::int32_t ecc_mid = 0;
    for (auto d : dm) ecc_mid = std::max(ecc_mid, d);
    res.lower = std::max<std::int64_t>(res.lower, ecc_mid);
    res.upper = 2 * static_cast<std::int64_t>(ecc_mid);

    // process fringe vertices by decreasing level
    std::vector<std::vector<std::int64_t>> by_level(static_cast<std::size_t>(ecc_mid) + 1);
    for (std::size_t i = 0; i < dm.size(); ++i) by_level[static_cast<std::size_t>(dm[i])].push_back(static_cast<std::int64_t>(i));
    for (std::int32_t lev = ecc_mid; lev >= 1; --lev) {
        if (res.lower >= 2 * (lev)) {
            res.upper = res.lower;
            res.exact = true;
            return res;
        }
        for (auto v : by_level[static_cast<std::size_t>(lev)]) {
            if (res.bfs_runs >= bfs_budget) return res;  // bounds only
            auto dv = bfs_distances(g, v);
            ++res.bfs_runs;
            std::int32_t ecc = 0;
            for (auto d : dv) ecc = std::max(ecc, d);
            res.lower = std::max<std::int64_t>(res.lower, ecc);
        }
    }
    res.upper = res.lower;
    res.exact = true;
    return res;
}

}  // namespace tilegraph
