#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tilegraph/rational.hpp"

namespace tilegraph {

// Axis-parallel closed rectangle, encoded by its bottom-left corner and side
// lengths. Tiles are value objects; ids are dense indices assigned in the
// canonical order (lexicographic by (x, y)).
struct Tile {
    Rational x, y;  // bottom-left corner
    Rational w, h;  // width, height
    std::int64_t id = -1;

    Rational right() const { return x + w; }
    Rational top() const { return y + h; }
};

enum class RegionKind { UnitSquare, Rect };

// Finite collection of interior-disjoint tiles covering `region`.
// Immutable after construction; concurrent readers are safe.
struct Tiling {
    std::vector<Tile> tiles;
    Tile region;
    RegionKind kind = RegionKind::Rect;

    std::int64_t size() const { return static_cast<std::int64_t>(tiles.size()); }
    bool unit_square() const { return kind == RegionKind::UnitSquare; }
};

inline RegionKind classify_region(const Tile& region) {
    return (region.x == 0 && region.y == 0 && region.w == 1 && region.h == 1)
               ? RegionKind::UnitSquare
               : RegionKind::Rect;
}

// Sorts tiles lexicographically by (x, y) and assigns dense ids.
inline void canonicalize(Tiling& t) {
    std::sort(t.tiles.begin(), t.tiles.end(), [](const Tile& a, const Tile& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    for (std::size_t i = 0; i < t.tiles.size(); ++i) t.tiles[i].id = static_cast<std::int64_t>(i);
    t.kind = classify_region(t.region);
}

// The single-tile tiling I of the unit square.
inline Tiling unit_tiling() {
    Tiling t;
    t.region = Tile{0, 0, 1, 1, -1};
    t.tiles = {Tile{0, 0, 1, 1, 0}};
    t.kind = RegionKind::UnitSquare;
    return t;
}

// Exact structural validation: positive sides, containment, the area
// identity, and a vertical-slab sweep certifying that the tiles partition the
// region (interior-disjoint and gap-free). O(N log N) for the tilings built
// here; skippable for very large instances.
inline void validate(const Tiling& t) {
    if (t.tiles.empty()) throw std::invalid_argument("tiling: empty");
    const Tile& R = t.region;
    if (R.w <= 0 || R.h <= 0) throw std::invalid_argument("tiling: degenerate region");

    Rational area = 0;
    for (const Tile& a : t.tiles) {
        if (a.w <= 0 || a.h <= 0) throw std::invalid_argument("tiling: non-positive tile side");
        if (a.x < R.x || a.y < R.y || a.right() > R.right() || a.top() > R.top())
            throw std::invalid_argument("tiling: tile outside region");
        area += a.w * a.h;
    }
    if (area != R.w * R.h) throw std::invalid_argument("tiling: area identity fails");

    // x-cuts; every tile spans whole slabs, so per-slab y-intervals must
    // partition [R.y, R.top()] exactly.
    std::vector<Rational> cuts;
    cuts.reserve(2 * t.tiles.size() + 2);
    cuts.push_back(R.x);
    cuts.push_back(R.right());
    for (const Tile& a : t.tiles) {
        cuts.push_back(a.x);
        cuts.push_back(a.right());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const std::size_t slabs = cuts.size() - 1;

    auto cut_index = [&](const Rational& v) {
        return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
    };
    std::vector<std::vector<const Tile*>> starts(slabs), ends(slabs + 1);
    for (const Tile& a : t.tiles) {
        starts[cut_index(a.x)].push_back(&a);
        ends[cut_index(a.right())].push_back(&a);
    }

    std::map<Rational, const Tile*> active;  // keyed by tile bottom y
    for (std::size_t s = 0; s < slabs; ++s) {
        bool dirty = !ends[s].empty() || !starts[s].empty();
        for (const Tile* a : ends[s]) active.erase(a->y);
        for (const Tile* a : starts[s]) {
            auto [it, fresh] = active.emplace(a->y, a);
            if (!fresh) throw std::invalid_argument("tiling: overlapping tiles in a slab");
        }
        if (!dirty) continue;
        if (active.empty()) throw std::invalid_argument("tiling: uncovered slab");
        Rational yy = R.y;
        for (const auto& [y0, a] : active) {
            if (y0 != yy) throw std::invalid_argument("tiling: gap or overlap in slab");
            yy = a->top();
        }
        if (yy != R.top()) throw std::invalid_argument("tiling: slab does not reach region top");
    }
}

// L_T: the largest side length over all tiles.
inline Rational max_side(const Tiling& t) {
    Rational m = 0;
    for (const Tile& a : t.tiles) {
        if (a.w > m) m = a.w;
        if (a.h > m) m = a.h;
    }
    return m;
}

struct BoundarySets {
    std::vector<std::int64_t> left;      // tiles meeting the region's left edge
    std::vector<std::int64_t> right;     // tiles meeting the region's right edge
    std::vector<std::int64_t> boundary;  // tiles meeting any side
    bool degenerate = false;             // left and right sets intersect
};

inline BoundarySets boundary_sets(const Tiling& t) {
    BoundarySets bs;
    const Tile& R = t.region;
    for (const Tile& a : t.tiles) {
        const bool l = a.x == R.x;
        const bool r = a.right() == R.right();
        const bool b = a.y == R.y;
        const bool u = a.top() == R.top();
        if (l) bs.left.push_back(a.id);
        if (r) bs.right.push_back(a.id);
        if (l || r || b || u) bs.boundary.push_back(a.id);
        if (l && r) bs.degenerate = true;
    }
    return bs;
}

}  // namespace tilegraph
