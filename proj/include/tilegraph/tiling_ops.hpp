#pragma once

#include <stdexcept>

#include "tilegraph/tiling.hpp"

namespace tilegraph {

// Tiling product S∘T: every tile of S is replaced by a scaled copy of T.
// |S∘T| = |S|·|T|, and sides multiply exactly.
inline Tiling product(const Tiling& s, const Tiling& t) {
    if (!s.unit_square() || !t.unit_square())
        throw std::invalid_argument("product: operands must tile the unit square");
    Tiling r;
    r.region = Tile{0, 0, 1, 1, -1};
    r.tiles.reserve(s.tiles.size() * t.tiles.size());
    for (const Tile& a : s.tiles)
        for (const Tile& b : t.tiles)
            r.tiles.push_back(Tile{a.x + b.x * a.w, a.y + b.y * a.h, a.w * b.w, a.h * b.h, -1});
    canonicalize(r);
    return r;
}

// n-fold product; n = 0 gives the single-tile tiling.
inline Tiling power(const Tiling& t, int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    if (!t.unit_square()) throw std::invalid_argument("power: operand must tile the unit square");
    Tiling r = unit_tiling();
    for (int i = 0; i < n; ++i) r = product(r, t);
    return r;
}

// Concatenation S|T: T's rectangle is translated flush to the right of S's.
// Region heights must agree exactly.
inline Tiling concat(const Tiling& s, const Tiling& t) {
    if (s.region.h != t.region.h) throw std::invalid_argument("concat: height mismatch");
    Tiling r;
    r.region = Tile{s.region.x, s.region.y, s.region.w + t.region.w, s.region.h, -1};
    r.tiles = s.tiles;
    const Rational dx = s.region.right() - t.region.x;
    const Rational dy = s.region.y - t.region.y;
    for (Tile b : t.tiles) {
        b.x += dx;
        b.y += dy;
        r.tiles.push_back(b);
    }
    canonicalize(r);
    return r;
}

// m vertically translated copies of t.
inline Tiling stack(const Tiling& t, int m) {
    if (m < 1) throw std::invalid_argument("stack: need m >= 1");
    Tiling r;
    r.region = Tile{t.region.x, t.region.y, t.region.w, t.region.h * m, -1};
    r.tiles.reserve(t.tiles.size() * static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Rational dy = t.region.h * j;
        for (Tile a : t.tiles) {
            a.y += dy;
            r.tiles.push_back(a);
        }
    }
    canonicalize(r);
    return r;
}

}  // namespace tilegraph
