#pragma once

#include <map>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/exact.hpp"
#include "windtree/origami.hpp"

namespace windtree {

// Rectangular obstacle of size a x b centered in the unit cell.
struct ObstacleGeometry {
    Rat a, b;
    Rat x0, x1, y0, y1;  // obstacle sides within [0,1)^2

    ObstacleGeometry(const Rat& a_, const Rat& b_) : a(a_), b(b_) {
        if (a <= 0 || a >= 1 || b <= 0 || b >= 1)
            throw InvalidParameter("obstacle parameters must lie in (0,1)");
        x0 = (1 - a) / 2;
        x1 = (1 + a) / 2;
        y0 = (1 - b) / 2;
        y1 = (1 + b) / 2;
    }
};

// One unit square of the unfolded wind-tree surface: grid position within the
// cell plus the mirror parity pair (s,t) of the sheet.
struct WindTreeCell {
    int i, j, s, t;
};

// The compact translation surface under the wind-tree billiard with rational
// obstacle parameters, unfolded with four mirror sheets and tiled by the
// common integer grid.
struct WindTreeSurface {
    Origami surface;
    Rat a, b;
    long grid = 0;                   // squares per cell side
    long bx0 = 0, bx1 = 0, by0 = 0, by1 = 0;  // blocked index range
    std::vector<WindTreeCell> cells;          // per square
    std::vector<int> cell_index;              // (i,j,s,t) -> square id, -1 if blocked

    bool blocked(long i, long j) const { return i >= bx0 && i < bx1 && j >= by0 && j < by1; }

    int id_of(long i, long j, int s, int t) const {
        return cell_index[((t * 2 + s) * grid + j) * grid + i];
    }

    // Crossing-count cochain weights: f1 counts signed crossings of the
    // vertical cell boundary (value on top edges), f2 of the horizontal cell
    // boundary (value on right edges), each weighted by the mirror parity of
    // the sheet.
    int f1_weight_top_edge(int q) const {
        const WindTreeCell& c = cells[q];
        if (c.i != grid - 1) return 0;
        return c.s == 0 ? 1 : -1;
    }
    int f2_weight_right_edge(int q) const {
        const WindTreeCell& c = cells[q];
        if (c.j != grid - 1) return 0;
        return c.t == 0 ? 1 : -1;
    }

    // Core cycles of a horizontal and a vertical strip on sheet (0,0), as
    // integer chains over the 2n cell-complex edges.
    std::vector<Int> horizontal_core_chain() const {
        std::vector<Int> chain(2 * surface.n, Int(0));
        for (long i = 0; i < grid; ++i) chain[surface.eh(id_of(i, 0, 0, 0))] += 1;
        return chain;
    }
    std::vector<Int> vertical_core_chain() const {
        std::vector<Int> chain(2 * surface.n, Int(0));
        for (long j = 0; j < grid; ++j) chain[surface.ev(id_of(grid - 1, j, 0, 0))] += 1;
        return chain;
    }
};

inline WindTreeSurface build_windtree_surface(const Rat& a, const Rat& b) {
    ObstacleGeometry geom(a, b);
    WindTreeSurface w;
    w.a = a;
    w.b = b;

    Int l = lcm(lcm(geom.x0.get_den(), geom.x1.get_den()),
                lcm(geom.y0.get_den(), geom.y1.get_den()));
    if (!l.fits_slong_p() || l.get_si() > 4096)
        throw InvalidParameter("obstacle denominators too large for the integer grid");
    long lambda = l.get_si();
    w.grid = lambda;
    w.bx0 = to_i64(Int(geom.x0 * lambda));
    w.bx1 = to_i64(Int(geom.x1 * lambda));
    w.by0 = to_i64(Int(geom.y0 * lambda));
    w.by1 = to_i64(Int(geom.y1 * lambda));

    // Enumerate free squares, sheets in order (s,t) = (0,0),(1,0),(0,1),(1,1).
    w.cell_index.assign(4 * lambda * lambda, -1);
    for (int t = 0; t < 2; ++t)
        for (int s = 0; s < 2; ++s)
            for (long j = 0; j < lambda; ++j)
                for (long i = 0; i < lambda; ++i) {
                    if (w.blocked(i, j)) continue;
                    w.cell_index[((t * 2 + s) * lambda + j) * lambda + i] = (int)w.cells.size();
                    w.cells.push_back({(int)i, (int)j, s, t});
                }

    Origami& o = w.surface;
    o.n = (int)w.cells.size();
    o.right.resize(o.n);
    o.top.resize(o.n);
    o.scale = make_rat(1, lambda);
    for (int q = 0; q < o.n; ++q) {
        const WindTreeCell& c = w.cells[q];
        long ip = (c.i + 1) % lambda;
        o.right[q] = !w.blocked(ip, c.j) ? w.id_of(ip, c.j, c.s, c.t)
                                         : w.id_of(lambda - 1 - c.i, c.j, 1 - c.s, c.t);
        long jp = (c.j + 1) % lambda;
        o.top[q] = !w.blocked(c.i, jp) ? w.id_of(c.i, jp, c.s, c.t)
                                       : w.id_of(c.i, lambda - 1 - c.j, c.s, 1 - c.t);
    }
    o.finalize();
    return w;
}

}  // namespace windtree
