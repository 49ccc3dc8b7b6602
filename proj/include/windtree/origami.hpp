#pragma once

#include <string>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/exact.hpp"

namespace windtree {

// Square corners, in counterclockwise order.
enum Corner { kBL = 0, kBR = 1, kTR = 2, kTL = 3 };

// Square-tiled translation surface: unit squares glued by two permutations.
// right[q] is the square whose left edge matches q's right edge, top[q] the
// square whose bottom edge matches q's top edge.  `scale` is the side length
// of one square in table units.
//
// Cell complex conventions used throughout:
//   - 1-cells: ev(q) = right edge of q (directed up), eh(q) = top edge of q
//     (directed right).  Edge ids: ev(q) = q, eh(q) = n + q.
//   - a vertex is a rotation cycle of (square, corner) sectors.
struct Origami {
    int n = 0;
    std::vector<int> right;
    std::vector<int> top;
    Rat scale = Rat(1);

    std::vector<int> right_inv, top_inv;

    // vertex structure, filled by finalize()
    std::vector<int> sector_vertex;       // 4*q + corner -> vertex id
    std::vector<int> vertex_sectors;      // sector count per vertex
    int genus = 0;

    int edge_count() const { return 2 * n; }
    int ev(int q) const { return q; }
    int eh(int q) const { return n + q; }

    int sector_id(int q, int corner) const { return 4 * q + corner; }

    // Counterclockwise rotation around the vertex at a sector.
    std::pair<int, int> next_sector_ccw(int q, int corner) const {
        switch (corner) {
            case kBL: return {right_inv[q], kBR};
            case kBR: return {top_inv[q], kTR};
            case kTR: return {right[q], kTL};
            default:  return {top[q], kBL};
        }
    }

    void finalize() {
        if (n <= 0) throw ValidationError("surface: needs at least one square");
        if ((int)right.size() != n || (int)top.size() != n)
            throw ValidationError("surface: permutation length mismatch");
        if (scale <= 0) throw ValidationError("surface: nonpositive scale");
        right_inv.assign(n, -1);
        top_inv.assign(n, -1);
        for (int q = 0; q < n; ++q) {
            if (right[q] < 0 || right[q] >= n || top[q] < 0 || top[q] >= n)
                throw ValidationError("surface: gluing index out of range");
            if (right_inv[right[q]] != -1 || top_inv[top[q]] != -1)
                throw ValidationError("surface: gluing is not a permutation");
            right_inv[right[q]] = q;
            top_inv[top[q]] = q;
        }
        // Connectivity of the edge-gluing graph.
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            for (int nb : {right[q], top[q], right_inv[q], top_inv[q]})
                if (!seen[nb]) { seen[nb] = 1; ++reached; stack.push_back(nb); }
        }
        if (reached != n) throw ValidationError("surface: not connected");

        // Vertices as rotation cycles.
        sector_vertex.assign(4 * n, -1);
        vertex_sectors.clear();
        for (int q = 0; q < n; ++q)
            for (int c = 0; c < 4; ++c) {
                if (sector_vertex[sector_id(q, c)] != -1) continue;
                int v = (int)vertex_sectors.size();
                int count = 0;
                int cq = q, cc = c;
                do {
                    sector_vertex[sector_id(cq, cc)] = v;
                    ++count;
                    auto [nq, nc] = next_sector_ccw(cq, cc);
                    cq = nq;
                    cc = nc;
                } while (cq != q || cc != c);
                if (count % 4 != 0)
                    throw ValidationError("surface: vertex angle not a multiple of 2*pi");
                vertex_sectors.push_back(count);
            }

        // Euler characteristic: V - E + F with E = 2n, F = n.
        int euler = (int)vertex_sectors.size() - 2 * n + n;
        if (euler > 2 || (2 - euler) % 2 != 0)
            throw ValidationError("surface: bad Euler characteristic");
        genus = (2 - euler) / 2;

        // Gauss-Bonnet: total angle excess equals 2*pi*(2g-2), in quarter turns.
        long excess = 0;
        for (int k : vertex_sectors) excess += k - 4;
        if (excess != 4L * (2 * genus - 2))
            throw ValidationError("surface: Gauss-Bonnet mismatch");
    }

    int vertex_count() const { return (int)vertex_sectors.size(); }

    // Cone points: vertices with angle != 2*pi, angle in multiples of 2*pi.
    std::vector<std::pair<int, int>> singularities() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < vertex_count(); ++v)
            if (vertex_sectors[v] != 4) out.push_back({v, vertex_sectors[v] / 4});
        return out;
    }

    // Vertex at an endpoint of a 1-cell.  ev(q) runs from BR(q) to TR(q),
    // eh(q) from TL(q) to TR(q).
    int edge_tail_vertex(int edge) const {
        return edge < n ? sector_vertex[sector_id(edge, kBR)]
                        : sector_vertex[sector_id(edge - n, kTL)];
    }
    int edge_head_vertex(int edge) const {
        return edge < n ? sector_vertex[sector_id(edge, kTR)]
                        : sector_vertex[sector_id(edge - n, kTR)];
    }
};

inline Origami make_torus() {
    Origami o;
    o.n = 1;
    o.right = {0};
    o.top = {0};
    o.finalize();
    return o;
}

}  // namespace windtree
