#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tilegraph/bfs.hpp"
#include "tilegraph/column_grid.hpp"
#include "tilegraph/dual_graph.hpp"
#include "tilegraph/rng.hpp"
#include "tilegraph/tiling_ops.hpp"

namespace tilegraph {

struct LineFit {
    double slope = 0, intercept = 0, slope_stderr = 0, rms_residual = 0;
};

inline LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) throw std::invalid_argument("fit_line: need >= 2 points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ys[i] - (f.intercept + f.slope * xs[i]);
        ss += e * e;
    }
    f.rms_residual = std::sqrt(ss / double(n));
    if (n > 2) f.slope_stderr = std::sqrt(ss / double(n - 2) / sxx);
    return f;
}

struct GrowthProfile {
    std::vector<std::int64_t> radii;
    std::vector<std::int64_t> min_ball, max_ball;
    std::vector<double> median_ball, mean_ball;
    double exponent = 0;
    double fit_residual = 0;
    double c_realized = 0, C_realized = 0;  // c·r^d <= |B| <= C·r^d over the grid, d = exponent
    std::int64_t num_sources = 0;
};

// Degree-biased draw by rejection against a degree upper bound.
template <class G>
std::int64_t stationary_sample(const G& g, CounterRng& rng, std::int64_t degree_bound) {
    for (;;) {
        const auto v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.num_vertices())));
        std::int64_t deg = 0;
        g.for_neighbors(v, [&](std::int64_t) { ++deg; });
        if (static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(degree_bound))) < deg) return v;
    }
}

template <class G>
std::int64_t max_degree(const G& g) {
    std::int64_t m = 0;
    for (std::int64_t v = 0; v < g.num_vertices(); ++v) {
        std::int64_t deg = 0;
        g.for_neighbors(v, [&](std::int64_t) { ++deg; });
        m = std::max(m, deg);
    }
    return m;
}

// Ball statistics over a radius grid: every vertex when the graph is small,
// otherwise 64 uniform + 64 degree-biased sources (seed-deterministic).
// The exponent is the log-log least squares slope through the medians.
template <class G>
GrowthProfile growth_profile(const G& g, const std::vector<std::int64_t>& radii, std::uint64_t seed,
                             std::int64_t all_threshold = 4096, std::int64_t sample_each = 64) {
    if (radii.size() < 2) throw std::invalid_argument("growth_profile: degenerate radius grid");
    for (std::size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1] || radii[0] < 1)
            throw std::invalid_argument("growth_profile: radii must be positive increasing");

    std::vector<std::int64_t> sources;
    const std::int64_t n = g.num_vertices();
    if (n <= all_threshold) {
        sources.resize(static_cast<std::size_t>(n));
        for (std::int64_t v = 0; v < n; ++v) sources[static_cast<std::size_t>(v)] = v;
    } else {
        CounterRng uni = CounterRng::from_stream(seed, 101);
        CounterRng sta = CounterRng::from_stream(seed, 202);
        const std::int64_t bound = max_degree(g);
        for (std::int64_t i = 0; i < sample_each; ++i)
            sources.push_back(static_cast<std::int64_t>(uni.below(static_cast<std::uint64_t>(n))));
        for (std::int64_t i = 0; i < sample_each; ++i) sources.push_back(stationary_sample(g, sta, bound));
    }

    const auto rmax = static_cast<std::int32_t>(radii.back());
    std::vector<std::vector<std::int64_t>> sizes(radii.size());
    for (auto v : sources) {
        const auto curve = ball_growth_curve(g, v, rmax);
        for (std::size_t i = 0; i < radii.size(); ++i)
            sizes[i].push_back(curve[static_cast<std::size_t>(radii[i])]);
    }

    GrowthProfile p;
    p.radii = radii;
    p.num_sources = static_cast<std::int64_t>(sources.size());
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        auto& col = sizes[i];
        std::sort(col.begin(), col.end());
        p.min_ball.push_back(col.front());
        p.max_ball.push_back(col.back());
        const std::size_t m = col.size();
        const double med = m % 2 ? double(col[m / 2]) : 0.5 * (double(col[m / 2 - 1]) + double(col[m / 2]));
        double mean = 0;
        for (auto s : col) mean += double(s);
        p.median_ball.push_back(med);
        p.mean_ball.push_back(mean / double(m));
        lx.push_back(std::log(double(radii[i])));
        ly.push_back(std::log(med));
    }
    const LineFit f = fit_line(lx, ly);
    p.exponent = f.slope;
    p.fit_residual = f.rms_residual;
    p.c_realized = std::numeric_limits<double>::infinity();
    p.C_realized = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double rd = std::pow(double(radii[i]), p.exponent);
        p.c_realized = std::min(p.c_realized, double(p.min_ball[i]) / rd);
        p.C_realized = std::max(p.C_realized, double(p.max_ball[i]) / rd);
    }
    return p;
}

struct GrowthUpperBoundReport {
    std::int64_t radius = 0;       // ⌊1/(α_S⁴ L_T)⌋
    std::int64_t bound = 0;        // ⌊192 α_S²⌋ |T|
    std::int64_t worst_ball = 0;
    std::int64_t samples = 0;
    bool pass = false;
};

// |B_{G(S∘T)}(X, 1/(α_S⁴ L_T))| ≤ 192 α_S² |T| for sampled X, with the
// literal constant 192; radius and bound are evaluated in exact arithmetic.
inline GrowthUpperBoundReport growth_upper_bound_check(const Tiling& s, const Tiling& t,
                                                       std::int64_t samples, std::uint64_t seed) {
    const Tiling st = product(s, t);
    const DualGraph g = build_dual(st);
    const Rational a = alpha(s, build_dual(s));
    const Rational radius_exact = 1 / (pow_rational(a, 4) * max_side(t));
    const Rational bound_exact = 192 * pow_rational(a, 2) * t.size();

    GrowthUpperBoundReport rep;
    rep.radius = static_cast<std::int64_t>(num(radius_exact) / den(radius_exact));  // floor (positive)
    rep.bound = static_cast<std::int64_t>(num(bound_exact) / den(bound_exact));
    rep.samples = samples;
    rep.pass = true;
    CounterRng rng = CounterRng::from_stream(seed, 7);
    for (std::int64_t i = 0; i < samples; ++i) {
        const auto x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.n)));
        const auto curve = ball_growth_curve(g, x, static_cast<std::int32_t>(rep.radius));
        const std::int64_t sz = curve[static_cast<std::size_t>(rep.radius)];
        rep.worst_ball = std::max(rep.worst_ball, sz);
        if (sz > rep.bound) rep.pass = false;
    }
    return rep;
}

struct InfiniteGrowthReport {
    double degree_target = 0;
    double c_realized = 0, C_realized = 0;
    std::int64_t sources_used = 0, sources_skipped = 0;
    bool frontier_safe = true;
};

// Two-sided growth check on the concatenated approximant T⁰|…|Tⁿ, restricted
// to sources and radii whose balls cannot reach the right frontier, where the
// finite graph agrees with its one-ended limit.
inline InfiniteGrowthReport infinite_graph_growth_check(const ColumnSpec& spec, int n,
                                                        const std::vector<std::int64_t>& radii,
                                                        std::int64_t max_sources, std::uint64_t seed) {
    const ColumnGrid grid = grid_ray(spec, n);
    const DualGraph g = grid_dual(grid);
    const double d = std::log(double(spec.total())) / std::log(double(spec.b()));

    // distance to the right frontier
    const std::int64_t m = grid.num_columns();
    std::vector<std::int64_t> frontier(static_cast<std::size_t>(grid.counts.back()));
    std::iota(frontier.begin(), frontier.end(), grid.prefix[static_cast<std::size_t>(m - 1)]);
    const auto dfront = bfs_distances(g, std::span<const std::int64_t>(frontier));

    const std::int64_t rmax = radii.back();
    InfiniteGrowthReport rep;
    rep.degree_target = d;
    rep.c_realized = std::numeric_limits<double>::infinity();
    CounterRng rng = CounterRng::from_stream(seed, 11);
    std::int64_t tried = 0;
    while (rep.sources_used < max_sources && tried < 50 * max_sources) {
        ++tried;
        const auto v = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(g.n)));
        if (dfront[static_cast<std::size_t>(v)] < rmax) {
            ++rep.sources_skipped;
            continue;
        }
        const auto curve = ball_growth_curve(g, v, static_cast<std::int32_t>(rmax));
        for (auto r : radii) {
            const double rd = std::pow(double(r), d);
            rep.c_realized = std::min(rep.c_realized, double(curve[static_cast<std::size_t>(r)]) / rd);
            rep.C_realized = std::max(rep.C_realized, double(curve[static_cast<std::size_t>(r)]) / rd);
        }
        ++rep.sources_used;
    }
    if (rep.sources_used == 0) throw std::invalid_argument("infinite_graph_growth_check: radius too large for frontier avoidance");
    return rep;
}

}  // namespace tilegraph
