#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tilegraph/tiling_ops.hpp"

namespace tilegraph {

// Column spec ⟨γ₁,…,γ_b⟩: the unit square split into b columns of width 1/b,
// column i holding γ_i tiles of height 1/γ_i.
struct ColumnSpec {
    std::vector<std::uint64_t> gamma;

    std::uint64_t b() const { return gamma.size(); }
    std::uint64_t total() const { return std::accumulate(gamma.begin(), gamma.end(), std::uint64_t{0}); }
};

// The family lemmas additionally assume min(γ) = b and γ₁ = γ_b; violations
// are reported here rather than blocking construction.
inline std::vector<std::string> family_violations(const ColumnSpec& spec) {
    std::vector<std::string> v;
    if (spec.gamma.empty()) {
        v.push_back("gamma is empty");
        return v;
    }
    std::uint64_t mn = spec.gamma.front();
    for (auto g : spec.gamma) mn = std::min(mn, g);
    if (mn != spec.b()) v.push_back("min(gamma) != length(gamma)");
    if (spec.gamma.front() != spec.gamma.back()) v.push_back("gamma.front() != gamma.back()");
    return v;
}

inline Tiling make_column_tiling(const ColumnSpec& spec) {
    if (spec.gamma.empty()) throw std::invalid_argument("make_column_tiling: empty gamma");
    for (auto g : spec.gamma)
        if (g == 0) throw std::invalid_argument("make_column_tiling: non-positive entry");
    const std::int64_t b = static_cast<std::int64_t>(spec.b());
    Tiling t;
    t.region = Tile{0, 0, 1, 1, -1};
    t.tiles.reserve(spec.total());
    const Rational width = rat(1, b);
    for (std::int64_t i = 0; i < b; ++i) {
        const std::int64_t g = static_cast<std::int64_t>(spec.gamma[static_cast<std::size_t>(i)]);
        const Rational height = rat(1, g);
        for (std::int64_t j = 0; j < g; ++j)
            t.tiles.push_back(Tile{width * i, height * j, width, height, -1});
    }
    canonicalize(t);
    return t;
}

// γ^{(b,k)}: length b, sum bk, first/middle/last entries equal to b; the
// remaining slots hold ⌈(k−3)/(b−3)⌉·b then ⌊(k−3)/(b−3)⌋·b.
inline ColumnSpec gamma_bk(std::uint64_t b, std::uint64_t k) {
    if (b < 4 || k < b) throw std::invalid_argument("gamma_bk: need k >= b >= 4");
    const std::uint64_t q = (k - 3) / (b - 3);
    const std::uint64_t m = (k - 3) % (b - 3);
    ColumnSpec spec;
    spec.gamma.reserve(b);
    spec.gamma.push_back(b);
    for (std::uint64_t i = 0; i < m; ++i) spec.gamma.push_back((q + 1) * b);
    spec.gamma.push_back(b);
    for (std::uint64_t i = 0; i < (b - 3) - m; ++i) spec.gamma.push_back(q * b);
    spec.gamma.push_back(b);
    return spec;
}

// Derived constants of the (b,k) family: growth degree d_g = log_b(bk),
// resistance decay rate Γ = Σ 1/γ_i (exact), walk dimension d_w = d_g + log_b Γ.
struct FamilyParams {
    std::uint64_t b = 0, k = 0;
    ColumnSpec gamma;
    Rational Gamma;
    double d_g = 0, d_w = 0;
};

inline FamilyParams family_params(std::uint64_t b, std::uint64_t k) {
    FamilyParams p;
    p.b = b;
    p.k = k;
    p.gamma = gamma_bk(b, k);
    if (p.gamma.gamma.size() != b || p.gamma.total() != b * k)
        throw std::logic_error("family_params: gamma invariant violated");
    p.Gamma = 0;
    for (auto g : p.gamma.gamma) p.Gamma += rat(1, static_cast<long long>(g));
    p.d_g = std::log(double(b) * double(k)) / std::log(double(b));
    p.d_w = p.d_g + std::log(to_double(p.Gamma)) / std::log(double(b));
    return p;
}

struct MixedPower {
    Tiling tiling;
    std::vector<std::int64_t> h;  // h_1..h_n, greedy-maximal
};

// Mixed product T_{γ^{(n)}} ∘ ⋯ ∘ T_{γ^{(1)}} with γ^{(j)} = γ^{(4,4+h_j)} and
// each h_j chosen greedily maximal subject to Σ_{i≤j} log₄(1+h_i/4) ≤ (d−2)·j.
// The constraint is decided exactly: with d = p/q it reads
// Π(4+h_i)^q ≤ 4^{(p−q)·j}, an integer comparison.
inline MixedPower mixed_power_for_degree(const Rational& d, int n, std::int64_t max_tiles = 8'000'000) {
    if (d <= 2) throw std::invalid_argument("mixed_power_for_degree: need d > 2");
    if (n < 1) throw std::invalid_argument("mixed_power_for_degree: need n >= 1");
    if (num(d) > 1'000'000 || den(d) > 1'000'000)
        throw std::invalid_argument("mixed_power_for_degree: degree precision out of range");
    const unsigned p = num(d).convert_to<unsigned>(), q = den(d).convert_to<unsigned>();

    MixedPower out;
    BigInt acc = 1;  // Π (4+h_i)^q so far
    BigInt bound = 1;
    const BigInt step = boost::multiprecision::pow(BigInt(4), p - q);
    auto feasible = [&](const BigInt& a, std::int64_t h) {
        return a * boost::multiprecision::pow(BigInt(4 + h), q) <= bound;
    };
    for (int j = 1; j <= n; ++j) {
        bound *= step;
        std::int64_t lo = 0, hi = 1;  // h = 0 is always feasible since d > 2
        while (hi < (std::int64_t{1} << 40) && feasible(acc, hi)) hi *= 2;
        while (lo + 1 < hi) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            (feasible(acc, mid) ? lo : hi) = mid;
        }
        out.h.push_back(lo);
        acc *= boost::multiprecision::pow(BigInt(4 + lo), q);
    }

    std::int64_t tiles = 1;
    for (auto h : out.h) {
        tiles *= 4 * (4 + h);
        if (tiles > max_tiles)
            throw std::runtime_error("mixed_power_for_degree: tile count exceeds limit");
    }
    out.tiling = make_column_tiling(gamma_bk(4, static_cast<std::uint64_t>(4 + out.h[0])));
    for (int j = 2; j <= n; ++j)
        out.tiling = product(make_column_tiling(gamma_bk(4, static_cast<std::uint64_t>(4 + out.h[static_cast<std::size_t>(j - 1)]))),
                             out.tiling);
    return out;
}

}  // namespace tilegraph
