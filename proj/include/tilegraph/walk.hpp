#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tilegraph/column_grid.hpp"
#include "tilegraph/dual_graph.hpp"
#include "tilegraph/growth.hpp"
#include "tilegraph/linearized.hpp"
#include "tilegraph/rng.hpp"

namespace tilegraph {

enum class StartLaw { Fixed, Uniform, Stationary };

struct WalkExperiment {
    std::vector<std::int64_t> time_grid;  // strictly increasing, >= 1
    std::int64_t replicas = 1;
    std::uint64_t seed = 1;
    StartLaw start = StartLaw::Stationary;  // degree-biased, the reversible-limit convention
    std::int64_t fixed_start = 0;
};

struct WalkStats {
    std::vector<std::int64_t> time_grid;
    std::vector<double> mean, se;
    std::vector<double> proj_mean;  // column displacement, for grid walks
    bool projection_ok = true;      // pointwise d(X_0,X_T) >= |col(X_T)-col(X_0)|
    double exponent = std::numeric_limits<double>::quiet_NaN();
    double exponent_stderr = 0;
    std::int64_t replicas = 0;
};

namespace detail {

inline void validate_experiment(const WalkExperiment& e) {
    if (e.time_grid.empty() || e.time_grid.front() < 1) throw std::invalid_argument("walk: bad time grid");
    for (std::size_t i = 1; i < e.time_grid.size(); ++i)
        if (e.time_grid[i] <= e.time_grid[i - 1]) throw std::invalid_argument("walk: time grid not increasing");
    if (e.replicas < 1) throw std::invalid_argument("walk: need replicas >= 1");
}

inline void finish_stats(WalkStats& s, const std::vector<double>& sum, const std::vector<double>& sumsq,
                         const std::vector<double>& proj_sum) {
    const double n = double(s.replicas);
    for (std::size_t i = 0; i < sum.size(); ++i) {
        const double m = sum[i] / n;
        s.mean.push_back(m);
        const double var = std::max(0.0, sumsq[i] / n - m * m);
        s.se.push_back(std::sqrt(var / n));
        if (!proj_sum.empty()) s.proj_mean.push_back(proj_sum[i] / n);
    }
    if (s.time_grid.size() >= 4) {  // exponent fit needs at least 4 grid points
        std::vector<double> lx, ly;
        for (std::size_t i = 0; i < s.time_grid.size(); ++i)
            if (s.mean[i] > 0) {
                lx.push_back(std::log(double(s.time_grid[i])));
                ly.push_back(std::log(s.mean[i]));
            }
        if (lx.size() >= 4) {
            const LineFit f = fit_line(lx, ly);
            s.exponent = f.slope;
            s.exponent_stderr = f.slope_stderr;
        }
    }
}

}  // namespace detail

// --- simple random walk on an unweighted graph (CSR adapters) -------------

template <class G>
WalkStats simulate_walk(const G& g, const WalkExperiment& exp) {
    detail::validate_experiment(exp);
    const std::int64_t n = g.num_vertices();
    const std::int64_t tmax = exp.time_grid.back();
    const std::int64_t degree_bound = max_degree(g);

    WalkStats stats;
    stats.time_grid = exp.time_grid;
    stats.replicas = exp.replicas;
    std::vector<double> sum(exp.time_grid.size(), 0.0), sumsq(exp.time_grid.size(), 0.0);

    std::vector<std::int32_t> dist;
    for (std::int64_t rep = 0; rep < exp.replicas; ++rep) {
        CounterRng rng = CounterRng::from_stream(exp.seed, static_cast<std::uint64_t>(rep));
        std::int64_t v = exp.fixed_start;
        if (exp.start == StartLaw::Uniform) v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
        else if (exp.start == StartLaw::Stationary) v = stationary_sample(g, rng, degree_bound);
        const std::int64_t start = v;

        std::vector<std::int64_t> record(exp.time_grid.size());
        std::size_t next = 0;
        for (std::int64_t t = 1; t <= tmax; ++t) {
            std::int64_t deg = 0;
            g.for_neighbors(v, [&](std::int64_t) { ++deg; });
            auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(deg)));
            std::int64_t chosen = v;
            g.for_neighbors(v, [&](std::int64_t u) {
                if (k == 0) chosen = u;
                --k;
            });
            v = chosen;
            while (next < exp.time_grid.size() && exp.time_grid[next] == t) record[next++] = v;
        }

        dist = bfs_distances(g, start);  // exact displacement; graphs here are modest
        for (std::size_t i = 0; i < record.size(); ++i) {
            const double d = double(dist[static_cast<std::size_t>(record[i])]);
            sum[i] += d;
            sumsq[i] += d * d;
        }
    }
    detail::finish_stats(stats, sum, sumsq, {});
    return stats;
}

// --- lazy weighted walk, Pr[u→v] = c_uv/c_u with self-loops ----------------

inline std::vector<std::pair<std::int64_t, double>> walk_law(const WeightedGraph& g, std::int64_t u) {
    std::vector<std::pair<std::int64_t, double>> law;
    law.emplace_back(u, g.self_loop[static_cast<std::size_t>(u)] / g.vertex_weight[static_cast<std::size_t>(u)]);
    for (std::int64_t i = g.offsets[u]; i < g.offsets[u + 1]; ++i)
        law.emplace_back(g.nbrs[i], g.cond[i] / g.vertex_weight[static_cast<std::size_t>(u)]);
    return law;
}

inline WalkStats simulate_walk_weighted(const WeightedGraph& g, const WalkExperiment& exp) {
    detail::validate_experiment(exp);
    const std::int64_t tmax = exp.time_grid.back();
    double wmax = 0;
    for (double w : g.vertex_weight) wmax = std::max(wmax, w);

    WalkStats stats;
    stats.time_grid = exp.time_grid;
    stats.replicas = exp.replicas;
    std::vector<double> sum(exp.time_grid.size(), 0.0), sumsq(exp.time_grid.size(), 0.0);

    for (std::int64_t rep = 0; rep < exp.replicas; ++rep) {
        CounterRng rng = CounterRng::from_stream(exp.seed, static_cast<std::uint64_t>(rep));
        std::int64_t v = exp.fixed_start;
        if (exp.start == StartLaw::Uniform)
            v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.n)));
        else if (exp.start == StartLaw::Stationary)
            for (;;) {
                const auto c = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.n)));
                if (rng.unit() * wmax < g.vertex_weight[static_cast<std::size_t>(c)]) {
                    v = c;
                    break;
                }
            }
        const std::int64_t start = v;

        std::vector<std::int64_t> record(exp.time_grid.size());
        std::size_t next = 0;
        for (std::int64_t t = 1; t <= tmax; ++t) {
            double x = rng.unit() * g.vertex_weight[static_cast<std::size_t>(v)];
            if (x >= g.self_loop[static_cast<std::size_t>(v)]) {
                x -= g.self_loop[static_cast<std::size_t>(v)];
                std::int64_t chosen = v;
                for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i) {
                    if (x < g.cond[i]) {
                        chosen = g.nbrs[i];
                        break;
                    }
                    x -= g.cond[i];
                }
                v = chosen;
            }
            while (next < exp.time_grid.size() && exp.time_grid[next] == t) record[next++] = v;
        }

        std::vector<std::int32_t> dist;
        if (!g.path_shape) dist = bfs_distances(g, start);
        for (std::size_t i = 0; i < record.size(); ++i) {
            const double d = g.path_shape ? double(std::llabs(record[i] - start))
                                          : double(dist[static_cast<std::size_t>(record[i])]);
            sum[i] += d;
            sumsq[i] += d * d;
        }
    }
    detail::finish_stats(stats, sum, sumsq, {});
    return stats;
}

// --- walk on a (possibly cylindrical) column grid, implicit adjacency ------

namespace detail {

struct GridWalker {
    const ColumnGrid* grid;
    bool cylindrical;

    struct Pos {
        std::int64_t c, y;
    };

    std::int64_t count(std::int64_t c) const { return grid->counts[static_cast<std::size_t>(c)]; }

    // neighbor slots ordered: down, up, left column ascending, right column ascending
    std::int64_t degree(Pos p) const {
        const std::int64_t nc = count(p.c);
        std::int64_t deg = 0;
        deg += (p.y > 0 || (cylindrical && nc >= 3)) ? 1 : 0;
        deg += (p.y < nc - 1 || (cylindrical && nc >= 3)) ? 1 : 0;
        for (std::int64_t d : {p.c - 1, p.c + 1}) {
            if (d < 0 || d >= grid->num_columns()) continue;
            const std::int64_t nd = count(d);
            const std::int64_t lo = (p.y * nd) / nc, hi = ((p.y + 1) * nd - 1) / nc;
            deg += hi - lo + 1;
        }
        return deg;
    }

    Pos neighbor(Pos p, std::int64_t k) const {
        const std::int64_t nc = count(p.c);
        if (p.y > 0 || (cylindrical && nc >= 3)) {
            if (k == 0) return {p.c, p.y > 0 ? p.y - 1 : nc - 1};
            --k;
        }
        if (p.y < nc - 1 || (cylindrical && nc >= 3)) {
            if (k == 0) return {p.c, p.y < nc - 1 ? p.y + 1 : 0};
            --k;
        }
        for (std::int64_t d : {p.c - 1, p.c + 1}) {
            if (d < 0 || d >= grid->num_columns()) continue;
            const std::int64_t nd = count(d);
            const std::int64_t lo = (p.y * nd) / nc, hi = ((p.y + 1) * nd - 1) / nc;
            if (k <= hi - lo) return {d, lo + k};
            k -= hi - lo + 1;
        }
        throw std::logic_error("grid walker: neighbor index out of range");
    }

    template <class F>
    void for_neighbors(Pos p, F&& f) const {
        const std::int64_t deg = degree(p);
        for (std::int64_t k = 0; k < deg; ++k) f(neighbor(p, k));
    }
};

}  // namespace detail

// Simple walk on the grid graph with exact displacement per recorded time,
// computed by one truncated multi-target BFS per replica. Also records the
// column-projected displacement, which is a pointwise lower bound on the
// graph displacement.
inline WalkStats simulate_walk_grid(const ColumnGrid& grid, bool cylindrical, const WalkExperiment& exp) {
    detail::validate_experiment(exp);
    detail::GridWalker W{&grid, cylindrical};
    const std::int64_t n = grid.num_vertices();
    const std::int64_t tmax = exp.time_grid.back();

    // degree bound for stationary rejection sampling
    std::int64_t degree_bound = 2;
    for (std::int64_t c = 0; c < grid.num_columns(); ++c) {
        std::int64_t b = 2;
        for (std::int64_t d : {c - 1, c + 1}) {
            if (d < 0 || d >= grid.num_columns()) continue;
            b += grid.counts[static_cast<std::size_t>(d)] / grid.counts[static_cast<std::size_t>(c)] + 2;
        }
        degree_bound = std::max(degree_bound, b);
    }

    WalkStats stats;
    stats.time_grid = exp.time_grid;
    stats.replicas = exp.replicas;
    std::vector<double> sum(exp.time_grid.size(), 0.0), sumsq(exp.time_grid.size(), 0.0),
        proj_sum(exp.time_grid.size(), 0.0);

    std::vector<std::uint32_t> stamp(static_cast<std::size_t>(n), 0);
    std::uint32_t epoch = 0;
    std::vector<detail::GridWalker::Pos> cur, nxt;

    for (std::int64_t rep = 0; rep < exp.replicas; ++rep) {
        CounterRng rng = CounterRng::from_stream(exp.seed, static_cast<std::uint64_t>(rep));
        detail::GridWalker::Pos p{0, 0};
        if (exp.start == StartLaw::Fixed) {
            const auto [c, y] = grid.locate(exp.fixed_start);
            p = {c, y};
        } else if (exp.start == StartLaw::Uniform) {
            const auto [c, y] = grid.locate(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n))));
            p = {c, y};
        } else {
            for (;;) {
                const auto [c, y] = grid.locate(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n))));
                if (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(degree_bound))) < W.degree({c, y})) {
                    p = {c, y};
                    break;
                }
            }
        }
        const detail::GridWalker::Pos start = p;

        std::vector<detail::GridWalker::Pos> record(exp.time_grid.size());
        std::size_t nextrec = 0;
        for (std::int64_t t = 1; t <= tmax; ++t) {
            p = W.neighbor(p, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(W.degree(p)))));
            while (nextrec < exp.time_grid.size() && exp.time_grid[nextrec] == t) record[nextrec++] = p;
        }

        // multi-target truncated BFS from the start vertex
        std::unordered_map<std::int64_t, std::int32_t> target_dist;
        for (const auto& r : record) target_dist.emplace(grid.id_of(r.c, r.y), -1);
        std::size_t remaining = target_dist.size();
        ++epoch;
        cur.assign(1, start);
        stamp[static_cast<std::size_t>(grid.id_of(start.c, start.y))] = epoch;
        if (auto it = target_dist.find(grid.id_of(start.c, start.y)); it != target_dist.end()) {
            it->second = 0;
            --remaining;
        }
        std::int32_t level = 0;
        while (remaining > 0 && !cur.empty()) {
            ++level;
            nxt.clear();
            for (const auto& q : cur)
                W.for_neighbors(q, [&](detail::GridWalker::Pos u) {
                    const std::int64_t uid = grid.id_of(u.c, u.y);
                    if (stamp[static_cast<std::size_t>(uid)] == epoch) return;
                    stamp[static_cast<std::size_t>(uid)] = epoch;
                    nxt.push_back(u);
                    if (auto it = target_dist.find(uid); it != target_dist.end() && it->second < 0) {
                        it->second = level;
                        --remaining;
                    }
                });
            cur.swap(nxt);
        }

        for (std::size_t i = 0; i < record.size(); ++i) {
            const double d = double(target_dist[grid.id_of(record[i].c, record[i].y)]);
            const double proj = double(std::llabs(record[i].c - start.c));
            if (d < proj) stats.projection_ok = false;
            sum[i] += d;
            sumsq[i] += d * d;
            proj_sum[i] += proj;
        }
    }
    detail::finish_stats(stats, sum, sumsq, proj_sum);
    return stats;
}

// --- projection consistency ------------------------------------------------

struct ProjectionReport {
    bool structural_ok = true;
    std::int64_t witness_column = -1;
    std::string detail;
    double z_score = 0;  // two-sample comparison of displacement means at one T
    bool mc_ok = true;
};

// Within each column of the cylindrical graph, every vertex must have the
// same degree, the same number of left neighbors and the same number of right
// neighbors; this makes the projected walk law equal to the linearized walk.
inline ProjectionReport projection_consistency_check(const CylindricalGraph& cyl, std::int64_t mc_time = 0,
                                                     std::int64_t mc_replicas = 0, std::uint64_t seed = 1) {
    ProjectionReport rep;
    const DualGraph& g = cyl.g;
    for (std::size_t c = 0; c < g.columns.size() && rep.structural_ok; ++c) {
        std::int64_t deg0 = -1, left0 = -1, right0 = -1;
        for (auto v : g.columns[c]) {
            std::int64_t left = 0, right = 0;
            g.for_neighbors(v, [&](std::int64_t u) {
                const auto cu = g.column_of[static_cast<std::size_t>(u)];
                if (cu == static_cast<std::int32_t>(c) - 1) ++left;
                if (cu == static_cast<std::int32_t>(c) + 1) ++right;
            });
            const std::int64_t deg = g.degree(v);
            if (deg0 < 0) {
                deg0 = deg;
                left0 = left;
                right0 = right;
            } else if (deg != deg0 || left != left0 || right != right0) {
                rep.structural_ok = false;
                rep.witness_column = static_cast<std::int64_t>(c);
                rep.detail = "vertex " + std::to_string(v) + " breaks column uniformity";
                break;
            }
        }
    }
    if (rep.structural_ok && mc_time > 0 && mc_replicas > 0) {
        WalkExperiment e;
        e.time_grid = {mc_time};
        e.replicas = mc_replicas;
        e.seed = seed;
        e.start = StartLaw::Stationary;

        // projected displacement of the cylinder walk
        WalkStats proj;
        {
            std::vector<double> sum(1, 0.0), sumsq(1, 0.0);
            const std::int64_t degree_bound = max_degree(g);
            for (std::int64_t repn = 0; repn < e.replicas; ++repn) {
                CounterRng rng = CounterRng::from_stream(seed, static_cast<std::uint64_t>(repn));
                std::int64_t v = stationary_sample(g, rng, degree_bound);
                const std::int64_t start_col = g.column_of[static_cast<std::size_t>(v)];
                for (std::int64_t t = 0; t < mc_time; ++t) {
                    std::int64_t deg = g.degree(v);
                    auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(deg)));
                    v = g.nbrs[g.offsets[v] + k];
                }
                const double d = double(std::abs(g.column_of[static_cast<std::size_t>(v)] - start_col));
                sum[0] += d;
                sumsq[0] += d * d;
            }
            proj.replicas = e.replicas;
            proj.time_grid = {mc_time};
            detail::finish_stats(proj, sum, sumsq, {});
        }
        const WeightedGraph L = linearize(g);
        WalkExperiment e2 = e;
        e2.seed = seed + 1;
        const WalkStats lw = simulate_walk_weighted(L, e2);
        const double se = std::sqrt(proj.se[0] * proj.se[0] + lw.se[0] * lw.se[0]);
        rep.z_score = se > 0 ? (proj.mean[0] - lw.mean[0]) / se : 0.0;
        rep.mc_ok = std::abs(rep.z_score) <= 4.0;
    }
    return rep;
}

// --- rooted balls and the level-coupling check ------------------------------

struct RootedBallSample {
    std::int64_t center = -1;
    std::int32_t radius = 0;
    std::vector<std::int64_t> ball;                        // sorted ids
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;  // induced, u < v
    bool boundary_touched = false;
};

namespace detail {

inline bool grid_boundary_tile(const ColumnGrid& grid, std::int64_t c, std::int64_t y) {
    return c == 0 || c == grid.num_columns() - 1 || y == 0 || y == grid.counts[static_cast<std::size_t>(c)] - 1;
}

}  // namespace detail

inline RootedBallSample rooted_ball(const ColumnGrid& grid, std::int64_t root, std::int32_t r) {
    GridGraph g{&grid, false};
    RootedBallSample s;
    s.center = root;
    s.radius = r;
    std::unordered_map<std::int64_t, std::int32_t> dist;
    dist.emplace(root, 0);
    std::vector<std::int64_t> cur{root}, nxt;
    for (std::int32_t lev = 1; lev <= r && !cur.empty(); ++lev) {
        nxt.clear();
        for (auto v : cur)
            g.for_neighbors(v, [&](std::int64_t u) {
                if (dist.emplace(u, lev).second) nxt.push_back(u);
            });
        cur.swap(nxt);
    }
    for (auto& [v, d] : dist) s.ball.push_back(v);
    std::sort(s.ball.begin(), s.ball.end());
    for (auto v : s.ball) {
        const auto [c, y] = grid.locate(v);
        if (detail::grid_boundary_tile(grid, c, y)) s.boundary_touched = true;
        g.for_neighbors(v, [&](std::int64_t u) {
            if (u > v && dist.count(u)) s.edges.emplace_back(v, u);
        });
    }
    std::sort(s.edges.begin(), s.edges.end());
    return s;
}

inline RootedBallSample sample_rooted_ball(std::uint64_t b, std::uint64_t k, int n, std::int32_t r,
                                           std::uint64_t seed, bool stationary = false) {
    const ColumnGrid grid = grid_power(gamma_bk(b, k), n);
    CounterRng rng = CounterRng::from_stream(seed, 31);
    std::int64_t root;
    if (stationary) {
        GridGraph g{&grid, false};
        root = stationary_sample(g, rng, 4 + 2 * static_cast<std::int64_t>(k));
    } else {
        root = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid.num_vertices())));
    }
    return rooted_ball(grid, root, r);
}

struct CouplingReport {
    std::int64_t trials = 0;
    std::int64_t checked = 0;           // balls that avoided the boundary at level n-1
    std::int64_t boundary_touched = 0;  // skipped by the coupling event
    std::int64_t violations = 0;
    std::string detail;
};

// Couples uniform roots of G(T^n) with G(T^{n-1}) through the copy structure
// T^n = T ∘ T^{n-1}: whenever the radius-r ball at level n-1 avoids ∂T^{n-1},
// the embedded balls must be identical as labeled graphs.
inline CouplingReport coupling_check(std::uint64_t b, std::uint64_t k, int n, std::int32_t r,
                                     std::int64_t trials, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("coupling_check: need n >= 1");
    const ColumnSpec spec = gamma_bk(b, k);
    const ColumnGrid gn = grid_power(spec, n);
    const ColumnGrid gp = grid_power(spec, n - 1);
    GridGraph vn{&gn, false};
    const std::int64_t bprev = gp.num_columns();  // b^{n-1}

    CouplingReport rep;
    rep.trials = trials;
    CounterRng rng = CounterRng::from_stream(seed, 47);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        const auto rootn = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(gn.num_vertices())));
        const auto [c, y] = gn.locate(rootn);
        const std::int64_t i = c / bprev, j = c % bprev;
        const std::int64_t mj = gp.counts[static_cast<std::size_t>(j)];
        const std::int64_t a = y / mj, y3 = y % mj;  // copy slot and in-copy row

        const RootedBallSample s3 = rooted_ball(gp, gp.id_of(j, y3), r);
        if (s3.boundary_touched) {
            ++rep.boundary_touched;
            continue;
        }
        ++rep.checked;
        auto emb = [&](std::int64_t id) {
            const auto [j2, y2] = gp.locate(id);
            return gn.id_of(i * bprev + j2, a * gp.counts[static_cast<std::size_t>(j2)] + y2);
        };

        // ball at level n around the embedded root
        std::unordered_map<std::int64_t, std::int32_t> dist;
        const std::int64_t root_emb = emb(gp.id_of(j, y3));
        dist.emplace(root_emb, 0);
        std::vector<std::int64_t> cur{root_emb}, nxt;
        for (std::int32_t lev = 1; lev <= r && !cur.empty(); ++lev) {
            nxt.clear();
            for (auto v : cur)
                vn.for_neighbors(v, [&](std::int64_t u) {
                    if (dist.emplace(u, lev).second) nxt.push_back(u);
                });
            cur.swap(nxt);
        }

        bool ok = dist.size() == s3.ball.size();
        if (ok)
            for (auto v : s3.ball)
                if (!dist.count(emb(v))) {
                    ok = false;
                    break;
                }
        if (ok) {
            // adjacency must transport along the embedding
            std::vector<std::pair<std::int64_t, std::int64_t>> mapped;
            mapped.reserve(s3.edges.size());
            for (auto& [u, v] : s3.edges) {
                auto eu = emb(u), ev = emb(v);
                if (eu > ev) std::swap(eu, ev);
                mapped.emplace_back(eu, ev);
            }
            std::sort(mapped.begin(), mapped.end());
            std::vector<std::pair<std::int64_t, std::int64_t>> edges_n;
            for (auto& [v, d] : dist)
                vn.for_neighbors(v, [&](std::int64_t u) {
                    if (u > v && dist.count(u)) edges_n.emplace_back(v, u);
                });
            std::sort(edges_n.begin(), edges_n.end());
            ok = mapped == edges_n;
        }
        if (!ok) {
            ++rep.violations;
            if (rep.detail.empty())
                rep.detail = "coupling mismatch at trial " + std::to_string(trial) + " root " + std::to_string(rootn);
        }
    }
    return rep;
}

// Fraction of uniform roots whose radius-r ball touches ∂T^n.
inline double boundary_touch_rate(const ColumnSpec& spec, int n, std::int32_t r, std::int64_t trials,
                                  std::uint64_t seed) {
    const ColumnGrid grid = grid_power(spec, n);
    CounterRng rng = CounterRng::from_stream(seed, 53);
    std::int64_t touched = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto root = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(grid.num_vertices())));
        if (rooted_ball(grid, root, r).boundary_touched) ++touched;
    }
    return double(touched) / double(trials);
}

}  // namespace tilegraph
