#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilegraph/bfs.hpp"
#include "tilegraph/column_grid.hpp"
#include "tilegraph/dual_graph.hpp"
#include "tilegraph/linearized.hpp"
#include "tilegraph/tiling.hpp"

namespace tilegraph {

// Sparse combinatorial Laplacian (self-loops excluded by construction).
struct Laplacian {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets, nbrs;
    std::vector<double> w;
    std::vector<double> diag;

    void finish_diag() {
        diag.assign(static_cast<std::size_t>(n), 0.0);
        for (std::int64_t v = 0; v < n; ++v)
            for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) diag[static_cast<std::size_t>(v)] += w[i];
    }
    void apply(const std::vector<double>& x, std::vector<double>& out) const {
        for (std::int64_t v = 0; v < n; ++v) {
            double acc = diag[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
            for (std::int64_t i = offsets[v]; i < offsets[v + 1]; ++i) acc -= w[i] * x[static_cast<std::size_t>(nbrs[i])];
            out[static_cast<std::size_t>(v)] = acc;
        }
    }
};

namespace detail {

template <class EmitEdges>
inline Laplacian laplacian_from_emitter(std::int64_t n, EmitEdges&& emit) {
    Laplacian L;
    L.n = n;
    L.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    emit([&](std::int64_t u, std::int64_t v, double) {
        ++L.offsets[static_cast<std::size_t>(u) + 1];
        ++L.offsets[static_cast<std::size_t>(v) + 1];
    });
    for (std::int64_t i = 0; i < n; ++i) L.offsets[i + 1] += L.offsets[i];
    L.nbrs.resize(static_cast<std::size_t>(L.offsets[n]));
    L.w.resize(L.nbrs.size());
    std::vector<std::int64_t> cur(L.offsets.begin(), L.offsets.end() - 1);
    emit([&](std::int64_t u, std::int64_t v, double ww) {
        L.nbrs[static_cast<std::size_t>(cur[u])] = v;
        L.w[static_cast<std::size_t>(cur[u]++)] = ww;
        L.nbrs[static_cast<std::size_t>(cur[v])] = u;
        L.w[static_cast<std::size_t>(cur[v]++)] = ww;
    });
    L.finish_diag();
    return L;
}

}  // namespace detail

inline Laplacian to_laplacian(const DualGraph& g) {
    return detail::laplacian_from_emitter(g.n, [&](auto f) {
        for (std::int64_t v = 0; v < g.n; ++v)
            for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
                if (g.nbrs[i] > v) f(v, g.nbrs[i], 1.0);
    });
}
inline Laplacian to_laplacian(const CylindricalGraph& g) { return to_laplacian(g.g); }
inline Laplacian to_laplacian(const WeightedGraph& g) {
    return detail::laplacian_from_emitter(g.n, [&](auto f) {
        for (std::int64_t v = 0; v < g.n; ++v)
            for (std::int64_t i = g.offsets[v]; i < g.offsets[v + 1]; ++i)
                if (g.nbrs[i] > v) f(v, g.nbrs[i], g.cond[i]);
    });
}

// Sparse demand: ℓ1-normalized measures live here as (vertex, mass) pairs.
using Demand = std::vector<std::pair<std::int64_t, double>>;

inline Demand uniform_demand(const std::vector<std::int64_t>& support) {
    if (support.empty()) throw std::invalid_argument("uniform_demand: empty support");
    Demand d;
    d.reserve(support.size());
    const double m = 1.0 / double(support.size());
    for (auto v : support) d.emplace_back(v, m);
    return d;
}

enum class SolveMethod { CG, Dense };

struct ReffOptions {
    SolveMethod method = SolveMethod::CG;
    double tol = 1e-10;             // relative residual target for CG
    std::int64_t max_iter = 0;      // 0 -> 20·|V|
    bool certificates = false;      // attach flow-energy upper / cut lower bounds
    std::int64_t dense_limit = 2000;
};

struct ResistanceResult {
    double value = 0;
    double residual = 0;
    std::string method;
    std::int64_t iterations = 0;
    std::optional<double> flow_energy_ub;  // energy of a feasible unit flow
    std::optional<double> cut_lb;          // Nash–Williams sum over level cuts
};

namespace detail {

// Jacobi-preconditioned CG on the mean-zero subspace. Fixed operation order;
// deterministic for a given build.
inline std::pair<double, std::int64_t> cg_solve(const Laplacian& L, std::vector<double> b,
                                                std::vector<double>& x, double tol, std::int64_t max_iter) {
    const std::int64_t n = L.n;
    const std::size_t un = static_cast<std::size_t>(n);
    double mean = 0;
    for (double v : b) mean += v;
    mean /= double(n);
    for (double& v : b) v -= mean;
    double bnorm = 0;
    for (double v : b) bnorm += v * v;
    bnorm = std::sqrt(bnorm);
    x.assign(un, 0.0);
    if (bnorm == 0) return {0.0, 0};
    if (max_iter <= 0) max_iter = 20 * n;

    std::vector<double> r = b, z(un), p(un), Ap(un);
    auto precondition = [&](const std::vector<double>& rr, std::vector<double>& zz) {
        double zmean = 0;
        for (std::size_t i = 0; i < un; ++i) {
            zz[i] = rr[i] / L.diag[i];
            zmean += zz[i];
        }
        zmean /= double(n);
        for (double& v : zz) v -= zmean;
    };
    precondition(r, z);
    p = z;
    double rz = 0;
    for (std::size_t i = 0; i < un; ++i) rz += r[i] * z[i];
    double rnorm = bnorm;
    std::int64_t it = 0;
    while (it < max_iter && rnorm / bnorm > tol) {
        L.apply(p, Ap);
        double pAp = 0;
        for (std::size_t i = 0; i < un; ++i) pAp += p[i] * Ap[i];
        if (pAp <= 0) break;
        const double a = rz / pAp;
        for (std::size_t i = 0; i < un; ++i) {
            x[i] += a * p[i];
            r[i] -= a * Ap[i];
        }
        precondition(r, z);
        double rz2 = 0;
        for (std::size_t i = 0; i < un; ++i) rz2 += r[i] * z[i];
        const double beta = rz2 / rz;
        rz = rz2;
        for (std::size_t i = 0; i < un; ++i) p[i] = z[i] + beta * p[i];
        rnorm = 0;
        for (double v : r) rnorm += v * v;
        rnorm = std::sqrt(rnorm);
        ++it;
    }
    return {rnorm / bnorm, it};
}

// Dense route: ⟨d, L†d⟩ for mean-zero d equals ⟨d, (L + (1/n)·J)^{-1} d⟩; the
// rank correction makes the system positive definite.
inline std::pair<double, std::int64_t> dense_solve(const Laplacian& L, const std::vector<double>& b,
                                                   std::vector<double>& x) {
    const auto n = static_cast<Eigen::Index>(L.n);
    Eigen::MatrixXd A = Eigen::MatrixXd::Constant(n, n, 1.0 / double(n));
    for (std::int64_t v = 0; v < L.n; ++v) {
        A(v, v) += L.diag[static_cast<std::size_t>(v)];
        for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) A(v, L.nbrs[i]) -= L.w[i];
    }
    Eigen::VectorXd rhs(n);
    double mean = 0;
    for (double v : b) mean += v;
    mean /= double(L.n);
    for (Eigen::Index i = 0; i < n; ++i) rhs(i) = b[static_cast<std::size_t>(i)] - mean;
    Eigen::VectorXd sol = A.ldlt().solve(rhs);
    x.resize(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = sol(i);
    return {0.0, 0};
}

// Routes the residual demand on a BFS spanning tree so the reported flow is
// exactly feasible; returns the energy of the corrected flow.
inline double flow_energy_certificate(const Laplacian& L, const std::vector<double>& x,
                                      const std::vector<double>& b) {
    const std::size_t un = static_cast<std::size_t>(L.n);
    std::vector<double> resid(un);
    {
        std::vector<double> Lx(un);
        L.apply(x, Lx);
        for (std::size_t i = 0; i < un; ++i) resid[i] = b[i] - Lx[i];
    }
    std::vector<std::int64_t> parent(un, -2), order;
    order.reserve(un);
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::int64_t v = order[head];
        for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) {
            const std::int64_t u = L.nbrs[i];
            if (parent[static_cast<std::size_t>(u)] == -2) {
                parent[static_cast<std::size_t>(u)] = v;
                order.push_back(u);
            }
        }
    }
    // subtree demand sums give the unique tree flow: flow[v] is sent v -> parent(v)
    std::vector<double> up(un, 0.0);
    for (std::size_t i = order.size(); i-- > 1;) {
        const std::int64_t v = order[i];
        up[static_cast<std::size_t>(v)] += resid[static_cast<std::size_t>(v)];
        up[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])] += up[static_cast<std::size_t>(v)];
    }
    double energy = 0;
    for (std::int64_t v = 0; v < L.n; ++v) {
        for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) {
            const std::int64_t u = L.nbrs[i];
            if (u < v) continue;
            // theta is the flow v -> u; the tree sends up[c] from child c to parent
            double theta = L.w[i] * (x[static_cast<std::size_t>(v)] - x[static_cast<std::size_t>(u)]);
            if (parent[static_cast<std::size_t>(u)] == v) theta -= up[static_cast<std::size_t>(u)];
            else if (parent[static_cast<std::size_t>(v)] == u)
                theta += up[static_cast<std::size_t>(v)];
            energy += theta * theta / L.w[i];
        }
    }
    return energy;
}

// Nash–Williams bound over BFS-level cuts between supp(s) and supp(t).
inline double cut_certificate(const Laplacian& L, const Demand& s, const Demand& t) {
    const std::size_t un = static_cast<std::size_t>(L.n);
    std::vector<std::int32_t> dist(un, -1);
    std::vector<std::int64_t> q;
    for (auto& [v, m] : s)
        if (dist[static_cast<std::size_t>(v)] < 0) {
            dist[static_cast<std::size_t>(v)] = 0;
            q.push_back(v);
        }
    for (std::size_t head = 0; head < q.size(); ++head) {
        const std::int64_t v = q[head];
        for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) {
            const std::int64_t u = L.nbrs[i];
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push_back(u);
            }
        }
    }
    std::int32_t dmin = -1;
    for (auto& [v, m] : t) {
        const std::int32_t d = dist[static_cast<std::size_t>(v)];
        if (d >= 0 && (dmin < 0 || d < dmin)) dmin = d;
    }
    if (dmin <= 0) return 0.0;
    std::vector<double> cut(static_cast<std::size_t>(dmin), 0.0);
    for (std::int64_t v = 0; v < L.n; ++v)
        for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) {
            const std::int64_t u = L.nbrs[i];
            if (u < v) continue;
            const std::int32_t dv = dist[static_cast<std::size_t>(v)], du = dist[static_cast<std::size_t>(u)];
            if (dv < 0 || du < 0 || dv == du) continue;
            const std::int32_t lo = std::min(dv, du);
            if (lo < dmin) cut[static_cast<std::size_t>(lo)] += L.w[i];
        }
    double bound = 0;
    for (double c : cut) bound += c > 0 ? 1.0 / c : 0.0;
    return bound;
}

}  // namespace detail

// R_eff(s, t) = ⟨s−t, L† (s−t)⟩ for ℓ1 measures s, t of equal mass.
inline ResistanceResult reff_measures(const Laplacian& L, const Demand& s, const Demand& t,
                                      const ReffOptions& opts = {}) {
    double ms = 0, mt = 0;
    for (auto& [v, m] : s) ms += m;
    for (auto& [v, m] : t) mt += m;
    if (std::abs(ms - mt) > 1e-12 * std::max(1.0, std::abs(ms)))
        throw std::invalid_argument("reff_measures: demands are not balanced");

    std::vector<double> b(static_cast<std::size_t>(L.n), 0.0);
    for (auto& [v, m] : s) b[static_cast<std::size_t>(v)] += m;
    for (auto& [v, m] : t) b[static_cast<std::size_t>(v)] -= m;

    ResistanceResult res;
    std::vector<double> x;
    if (opts.method == SolveMethod::Dense) {
        if (L.n > opts.dense_limit) throw std::invalid_argument("reff_measures: dense method beyond cutoff");
        auto [r, it] = detail::dense_solve(L, b, x);
        std::vector<double> Lx(static_cast<std::size_t>(L.n));
        L.apply(x, Lx);
        double num = 0, den = 0;
        for (std::size_t i = 0; i < Lx.size(); ++i) {
            const double d = Lx[i] - b[i];
            num += d * d;
            den += b[i] * b[i];
        }
        res.residual = den > 0 ? std::sqrt(num / den) : 0.0;
        res.iterations = it;
        res.method = "dense-pseudoinverse";
    } else {
        auto [r, it] = detail::cg_solve(L, b, x, opts.tol, opts.max_iter);
        res.residual = r;
        res.iterations = it;
        res.method = "iterative-cg";
    }
    double value = 0;
    for (std::size_t i = 0; i < x.size(); ++i) value += b[i] * x[i];
    res.value = std::max(0.0, value);
    if (opts.certificates) {
        res.flow_energy_ub = detail::flow_energy_certificate(L, x, b);
        res.cut_lb = detail::cut_certificate(L, s, t);
    }
    return res;
}

// Contract the disjoint sets a -> 0 and b -> 1; all other vertices keep their
// relative order starting at 2. Edges internal to a set vanish, parallel
// edges accumulate.
inline Laplacian contract_sets(const Laplacian& L, const std::vector<std::int64_t>& a,
                               const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> map(static_cast<std::size_t>(L.n), -1);
    for (auto v : a) map[static_cast<std::size_t>(v)] = 0;
    for (auto v : b) {
        if (map[static_cast<std::size_t>(v)] == 0) throw std::invalid_argument("contract_sets: sets overlap");
        map[static_cast<std::size_t>(v)] = 1;
    }
    std::int64_t next = 2;
    for (auto& m : map)
        if (m < 0) m = next++;
    Laplacian C = detail::laplacian_from_emitter(next, [&](auto f) {
        for (std::int64_t v = 0; v < L.n; ++v)
            for (std::int64_t i = L.offsets[v]; i < L.offsets[v + 1]; ++i) {
                const std::int64_t u = L.nbrs[i];
                if (u < v) continue;
                const std::int64_t mu = map[static_cast<std::size_t>(u)], mv = map[static_cast<std::size_t>(v)];
                if (mu == mv) continue;
                f(mv, mu, L.w[i]);
            }
    });
    return C;
}

// R_eff(A ↔ B): the infimum over supported measures, computed as the
// two-point resistance after contracting each set to a single vertex.
inline ResistanceResult reff_sets(const Laplacian& L, const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b, const ReffOptions& opts = {}) {
    if (a.empty() || b.empty()) throw std::invalid_argument("reff_sets: empty set");
    Laplacian C = contract_sets(L, a, b);
    return reff_measures(C, {{0, 1.0}}, {{1, 1.0}}, opts);
}

// ρ(T): resistance between the uniform measures on the left and right
// boundary tiles. This fixes the measures; it is not the set infimum.
inline ResistanceResult rho(const Tiling& t, const DualGraph& g, const ReffOptions& opts = {}) {
    if (t.size() == 1) return {0.0, 0.0, "convention", 0, std::nullopt, std::nullopt};
    const BoundarySets bs = boundary_sets(t);
    if (bs.degenerate) throw std::invalid_argument("rho: degenerate tiling (left and right sets meet)");
    return reff_measures(to_laplacian(g), uniform_demand(bs.left), uniform_demand(bs.right), opts);
}

inline ResistanceResult rho_grid(const ColumnGrid& grid, const DualGraph& g, const ReffOptions& opts = {}) {
    if (grid.num_vertices() == 1) return {0.0, 0.0, "convention", 0, std::nullopt, std::nullopt};
    if (grid.num_columns() < 2) throw std::invalid_argument("rho_grid: degenerate (single column)");
    std::vector<std::int64_t> left(static_cast<std::size_t>(grid.counts.front()));
    std::vector<std::int64_t> right(static_cast<std::size_t>(grid.counts.back()));
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), grid.prefix[grid.prefix.size() - 2]);
    return reff_measures(to_laplacian(g), uniform_demand(left), uniform_demand(right), opts);
}

// Σ 1/|K_i| over the column partition, exactly.
inline Rational nash_williams_column_bound(const Tiling& t) {
    Rational s = 0;
    for (const auto& col : columns(t)) s += rat(1, static_cast<long long>(col.size()));
    return s;
}

struct ConcatBoundReport {
    double lhs = 0;         // ρ(S|T)
    double rho_s = 0, rho_t = 0;
    double crossing = 0;    // 1 / max(|𝓡(S)|, |𝓛(T)|)
    double rhs = 0;
    double slack = 0;       // rhs − lhs
};

// Checks ρ(S|T) ≤ ρ(S) + ρ(T) + 1/max(|𝓡(S)|,|𝓛(T)|). Requires the uniform
// height hypothesis on 𝓡(S) and 𝓛(T); refuses otherwise.
inline ConcatBoundReport concat_bound_check(const Tiling& s, const Tiling& t, const ReffOptions& opts = {}) {
    auto uniform_heights = [](const Tiling& x, const std::vector<std::int64_t>& ids) {
        for (auto id : ids)
            if (x.tiles[static_cast<std::size_t>(id)].h != x.tiles[static_cast<std::size_t>(ids[0])].h) return false;
        return true;
    };
    const BoundarySets bs = boundary_sets(s), bt = boundary_sets(t);
    if (!uniform_heights(s, bs.right) || !uniform_heights(t, bt.left))
        throw std::invalid_argument("concat_bound_check: boundary heights are not uniform");
    ConcatBoundReport rep;
    rep.rho_s = rho(s, build_dual(s), opts).value;
    rep.rho_t = rho(t, build_dual(t), opts).value;
    rep.crossing = 1.0 / double(std::max(bs.right.size(), bt.left.size()));
    const Tiling st = concat(s, t);
    rep.lhs = rho(st, build_dual(st), opts).value;
    rep.rhs = rep.rho_s + rep.rho_t + rep.crossing;
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

// R_eff(B(x,R) ↔ V ∖ B(x,2R)). Both sets are contracted to single vertices;
// only the open annulus enters the linear system, so the solve stays local
// even on very large graphs. Unit conductances.
template <class G>
ResistanceResult annulus_resistance(const G& g, std::int64_t x, std::int32_t R, const ReffOptions& opts = {}) {
    if (R < 1) throw std::invalid_argument("annulus_resistance: need R >= 1");
    const auto dist = bfs_distances(g, x, 2 * R);
    std::vector<std::int64_t> ring;  // R < d <= 2R, in id order
    bool exhausted = true;
    for (std::size_t u = 0; u < dist.size(); ++u) {
        if (dist[u] < 0) exhausted = false;
        else if (dist[u] > R)
            ring.push_back(static_cast<std::int64_t>(u));
    }
    if (exhausted) throw std::invalid_argument("annulus_resistance: B(x,2R) covers the whole graph");

    std::vector<std::int64_t> local(dist.size(), -1);
    for (std::size_t i = 0; i < ring.size(); ++i) local[static_cast<std::size_t>(ring[i])] = static_cast<std::int64_t>(i) + 2;
    Laplacian L = detail::laplacian_from_emitter(static_cast<std::int64_t>(ring.size()) + 2, [&](auto f) {
        for (auto u : ring) {
            const std::int64_t lu = local[static_cast<std::size_t>(u)];
            g.for_neighbors(u, [&](std::int64_t v) {
                const std::int32_t dv = dist[static_cast<std::size_t>(v)];
                if (dv >= 0 && dv <= R) f(std::int64_t{0}, lu, 1.0);                 // into the contracted ball
                else if (dv < 0) f(std::int64_t{1}, lu, 1.0);                        // into the contracted outside
                else if (v > u) f(lu, local[static_cast<std::size_t>(v)], 1.0);      // ring-internal, once
            });
        }
    });
    return reff_measures(L, {{0, 1.0}}, {{1, 1.0}}, opts);
}

// R_eff({v} ↔ V ∖ B(v,r)): the transience diagnostic. Nondecreasing in r.
template <class G>
ResistanceResult reff_point_to_ball_complement(const G& g, std::int64_t v, std::int32_t r,
                                               const ReffOptions& opts = {}) {
    const auto dist = bfs_distances(g, v, r);
    std::vector<std::int64_t> local(dist.size(), -1);
    std::int64_t nb = 0;
    bool exhausted = true;
    for (std::size_t u = 0; u < dist.size(); ++u) {
        if (dist[u] >= 0) local[u] = nb++;
        else exhausted = false;
    }
    if (exhausted) throw std::invalid_argument("reff_point_to_ball_complement: ball covers the whole graph");
    const std::int64_t sink = nb;
    Laplacian L = detail::laplacian_from_emitter(nb + 1, [&](auto f) {
        for (std::size_t u = 0; u < dist.size(); ++u) {
            if (dist[u] < 0) continue;
            const std::int64_t lu = local[u];
            g.for_neighbors(static_cast<std::int64_t>(u), [&](std::int64_t w) {
                if (dist[static_cast<std::size_t>(w)] < 0) f(lu, sink, 1.0);
                else if (w > static_cast<std::int64_t>(u))
                    f(lu, local[static_cast<std::size_t>(w)], 1.0);
            });
        }
    });
    return reff_measures(L, {{local[static_cast<std::size_t>(v)], 1.0}}, {{sink, 1.0}}, opts);
}

struct TransienceSeries {
    std::vector<int> levels;
    std::vector<double> rho_values;  // ρ(G(T⁰|…|Tⁿ))
    std::vector<double> increments;  // consecutive differences
    double running_sup = 0;
    double gamma = 0;  // Γ of the family, the expected decay rate
    bool geometric_decay = true;  // increment ratios <= Γ + margin
};

// ρ of the concatenated approximants for n = 1..n_max, with the increment
// ratio test against Γ + margin.
inline TransienceSeries transience_series(const ColumnSpec& spec, int n_max, const ReffOptions& opts = {},
                                          double margin = 0.1) {
    if (n_max < 1) throw std::invalid_argument("transience_series: need n_max >= 1");
    TransienceSeries ts;
    Rational G = 0;
    for (auto g : spec.gamma) G += rat(1, static_cast<long long>(g));
    ts.gamma = to_double(G);
    for (int n = 1; n <= n_max; ++n) {
        const ColumnGrid grid = grid_ray(spec, n);
        const DualGraph dg = grid_dual(grid);
        ts.levels.push_back(n);
        ts.rho_values.push_back(rho_grid(grid, dg, opts).value);
        ts.running_sup = std::max(ts.running_sup, ts.rho_values.back());
        if (n >= 2) ts.increments.push_back(ts.rho_values.back() - ts.rho_values[ts.rho_values.size() - 2]);
    }
    for (std::size_t i = 1; i < ts.increments.size(); ++i) {
        const double prev = ts.increments[i - 1];
        if (prev > 1e-12 && ts.increments[i] / prev > ts.gamma + margin) ts.geometric_decay = false;
    }
    return ts;
}

}  // namespace tilegraph
