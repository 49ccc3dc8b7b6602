#pragma once

// Geometric signed-crossing oracle for intersection numbers on a square-tiled
// surface.  A closed edge path is thickened into a PL curve through square
// interiors: runs parallel to each traversed edge (offset to the left of
// travel) and polygonal arcs around each vertex, with per-curve radii and
// offsets so that two curves are always in general position.  Crossings are
// then counted with exact rational segment arithmetic, square by square.
//
// Independent of the cup-product route in homology.hpp.

#include <utility>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/exact.hpp"
#include "windtree/homology.hpp"
#include "windtree/origami.hpp"
#include "windtree/word.hpp"

namespace windtree::oracle {

struct Vec2 {
    Rat x, y;
};

struct Seg {
    Vec2 a, b;
};

struct PLCurve {
    std::vector<std::vector<Seg>> per_square;
};

// Directed traversal of a cell 1-cell: (edge id, +1/-1).
using CellPath = std::vector<std::pair<int, int>>;

namespace detail {

struct Ray {
    int edge;
    bool at_head;
    bool operator==(const Ray& o) const { return edge == o.edge && at_head == o.at_head; }
};

// Sector sitting clockwise of a ray around its vertex.
inline std::pair<int, int> sector_before_ray(const Origami& o, const Ray& r) {
    int n = o.n;
    if (r.edge < n) {  // ev(p)
        int p = r.edge;
        return r.at_head ? std::make_pair(p, (int)kTR) : std::make_pair(o.right[p], (int)kBL);
    }
    int p = r.edge - n;  // eh(p)
    return r.at_head ? std::make_pair(o.top[p], (int)kBR) : std::make_pair(p, (int)kTL);
}

// Ray crossed when leaving a sector counterclockwise.
inline Ray ray_after_sector(const Origami& o, int q, int c) {
    switch (c) {
        case kBL: return {o.ev(o.right_inv[q]), false};
        case kBR: return {o.eh(o.top_inv[q]), true};
        case kTR: return {o.ev(q), true};
        default:  return {o.eh(q), false};
    }
}

inline Vec2 sector_cw_point(int c, const Rat& eps) {
    switch (c) {
        case kBL: return {eps, Rat(0)};
        case kBR: return {Rat(1), eps};
        case kTR: return {1 - eps, Rat(1)};
        default:  return {Rat(0), 1 - eps};
    }
}

inline Vec2 sector_ccw_point(int c, const Rat& eps) {
    switch (c) {
        case kBL: return {Rat(0), eps};
        case kBR: return {1 - eps, Rat(0)};
        case kTR: return {Rat(1), 1 - eps};
        default:  return {eps, Rat(1)};
    }
}

inline Rat cross(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

}  // namespace detail

inline PLCurve build_pl_curve(const Origami& o, const CellPath& path, const Rat& eps,
                              const Rat& delta) {
    using namespace detail;
    if (path.empty()) throw InvalidParameter("empty path");
    PLCurve curve;
    curve.per_square.resize(o.n);
    auto add = [&](int sq, const Vec2& a, const Vec2& b) {
        curve.per_square[sq].push_back({a, b});
    };

    const int n = o.n;
    const Rat half = make_rat(1, 2);
    // Runs.
    for (auto [e, d] : path) {
        int sq;
        Vec2 p0, jog, p1;
        if (e < n) {  // ev(p): right side of p, left side of right[p]
            int p = e;
            if (d > 0) {
                sq = p;
                p0 = {Rat(1), eps};
                jog = {1 - delta, half};
                p1 = {Rat(1), 1 - eps};
            } else {
                sq = o.right[p];
                p0 = {Rat(0), 1 - eps};
                jog = {delta, half};
                p1 = {Rat(0), eps};
            }
        } else {  // eh(p): top side of p, bottom side of top[p]
            int p = e - n;
            if (d > 0) {
                sq = o.top[p];
                p0 = {eps, Rat(0)};
                jog = {half, delta};
                p1 = {1 - eps, Rat(0)};
            } else {
                sq = p;
                p0 = {1 - eps, Rat(1)};
                jog = {half, 1 - delta};
                p1 = {eps, Rat(1)};
            }
        }
        add(sq, p0, jog);
        add(sq, jog, p1);
    }
    // Arcs around the vertex between consecutive traversals (cyclically).
    for (size_t i = 0; i < path.size(); ++i) {
        auto [e_in, d_in] = path[i];
        auto [e_out, d_out] = path[(i + 1) % path.size()];
        Ray arrive{e_in, d_in > 0};
        Ray depart{e_out, d_out < 0};
        auto [q, c] = sector_before_ray(o, arrive);
        int guard = 0;
        for (;;) {
            auto [nq, nc] = o.next_sector_ccw(q, c);
            q = nq;
            c = nc;
            add(q, sector_cw_point(c, eps), sector_ccw_point(c, eps));
            if (ray_after_sector(o, q, c) == depart) break;
            if (++guard > 4 * o.n + 8) throw Error("crossing oracle: arc did not close");
        }
    }
    return curve;
}

// Net signed crossing count of two curves.  Throws on any degenerate contact;
// the per-curve constants must then be adjusted.
inline long signed_crossings(const PLCurve& a, const PLCurve& b) {
    using detail::cross;
    if (a.per_square.size() != b.per_square.size())
        throw DimensionMismatch("curves on different surfaces");
    long total = 0;
    for (size_t sq = 0; sq < a.per_square.size(); ++sq) {
        for (const Seg& s : a.per_square[sq])
            for (const Seg& t : b.per_square[sq]) {
                Vec2 su{s.b.x - s.a.x, s.b.y - s.a.y};
                Vec2 tu{t.b.x - t.a.x, t.b.y - t.a.y};
                Rat d1 = cross(su, {t.a.x - s.a.x, t.a.y - s.a.y});
                Rat d2 = cross(su, {t.b.x - s.a.x, t.b.y - s.a.y});
                Rat e1 = cross(tu, {s.a.x - t.a.x, s.a.y - t.a.y});
                Rat e2 = cross(tu, {s.b.x - t.a.x, s.b.y - t.a.y});
                bool strict = ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                              ((e1 > 0 && e2 < 0) || (e1 < 0 && e2 > 0));
                if (strict) {
                    total += sgn(cross(su, tu)) > 0 ? 1 : -1;
                    continue;
                }
                bool weak_d = (d1 >= 0 && d2 <= 0) || (d1 <= 0 && d2 >= 0);
                bool weak_e = (e1 >= 0 && e2 <= 0) || (e1 <= 0 && e2 >= 0);
                if (weak_d && weak_e && (d1 == 0 || d2 == 0 || e1 == 0 || e2 == 0)) {
                    if (d1 == 0 && d2 == 0) {
                        // Collinear: tolerate only disjoint spans (projected
                        // onto the common direction).
                        auto dot = [](const Vec2& u, const Vec2& v) {
                            return u.x * v.x + u.y * v.y;
                        };
                        Rat ps0 = 0, ps1 = dot(su, su);
                        Rat pt0 = dot(su, {t.a.x - s.a.x, t.a.y - s.a.y});
                        Rat pt1 = dot(su, {t.b.x - s.a.x, t.b.y - s.a.y});
                        if (std::max(pt0, pt1) < std::min(ps0, ps1) ||
                            std::min(pt0, pt1) > std::max(ps0, ps1))
                            continue;
                    }
                    throw Error("crossing oracle: degenerate contact");
                }
            }
    }
    return total;
}

// Closed cell path realizing a word in the dual-graph generators, read from
// the root square.
inline CellPath cell_path_of_word(const HomologyLattice& h, const GroupWord& w, int start = 0) {
    CellPath path;
    int q = start;
    for (const Letter& l : w.letters) {
        int64_t k = l.exp < 0 ? -l.exp : l.exp;
        for (int64_t i = 0; i < k; ++i) {
            if (l.exp > 0) {
                path.push_back({h.cell_edge_of_dual(l.gen == 0 ? h.x_edge(q) : h.y_edge(q)), 1});
                q = h.step(q, l.gen, true);
            } else {
                q = h.step(q, l.gen, false);
                path.push_back({h.cell_edge_of_dual(l.gen == 0 ? h.x_edge(q) : h.y_edge(q)), -1});
            }
        }
    }
    if (q != start) throw InvalidParameter("word does not close up");
    return path;
}

// Intersection number of two basis classes by geometric crossing count.
inline long basis_intersection(const HomologyLattice& h, int k, int l) {
    PLCurve a = build_pl_curve(h.surf, cell_path_of_word(h, h.basis_word(k)),
                               make_rat(1, 8), make_rat(1, 32));
    PLCurve b = build_pl_curve(h.surf, cell_path_of_word(h, h.basis_word(l)),
                               make_rat(1, 16), make_rat(1, 64));
    return signed_crossings(a, b);
}

}  // namespace windtree::oracle
