#pragma once

#include <utility>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/imat.hpp"
#include "windtree/origami.hpp"
#include "windtree/word.hpp"

namespace windtree {

// Cohomology class as its values on the homology basis.
using CohomologyClass = std::vector<Int>;

// Integer homology of a square-tiled surface.
//
// Chains live in two isomorphic coordinate systems:
//   - dual-graph chains: vertices are squares, x-edge q -> right[q] and
//     y-edge q -> top[q] (ids q and n+q).  Closed dual chains are encoded by
//     their coefficients on the non-tree edges of a BFS spanning tree.
//   - cell-complex chains over the 1-cells ev/eh of the Origami.
// The edge bijection x-edge(q) <-> eh(top_inv q), y-edge(q) <-> ev(right_inv q)
// identifies the two, matching endpoints square-by-square.
//
// The homology basis comes from the Smith normal form of the lattice of
// vertex loops inside the dual cycle space; the intersection form from the
// cup product of the integral cocycles dual to that basis.
struct HomologyLattice {
    Origami surf;

    int n = 0;  // squares
    int m = 0;  // non-tree dual edges = n + 1
    int rank = 0;  // 2g

    std::vector<int> tree_parent;   // -1 at root
    std::vector<int> tree_step;     // letter from parent: 0:x+ 1:y+ 2:x- 3:y-
    std::vector<int> nontree_index; // dual edge id -> coord index or -1
    std::vector<int> nontree_edges; // coord index -> dual edge id

    IMat basis_cycles;   // m x 2g, columns = basis in non-tree coords
    IMat proj;           // 2g x m, class coordinates of a closed chain
    IMat basis_chains;   // 2n x 2g, columns = basis as cell-complex chains
    IMat dual_cocycles;  // 2n x 2g, columns = integral cocycles, alpha_k(h_j) = delta
    IMat j_mat;          // 2g x 2g intersection form on the basis
    IMat j_inv_t;        // (J^T)^-1, for Poincare duals
    std::vector<std::pair<Rat, Rat>> periods;  // holonomy of each basis cycle

    int x_edge(int q) const { return q; }
    int y_edge(int q) const { return n + q; }

    // Cell-complex edge carrying a dual edge.
    int cell_edge_of_dual(int dual_edge) const {
        return dual_edge < n ? surf.eh(surf.top_inv[dual_edge])
                             : surf.ev(surf.right_inv[dual_edge - n]);
    }

    explicit HomologyLattice(const Origami& o) : surf(o) {
        n = surf.n;
        build_tree();
        build_basis();
        build_cocycles_and_form();
        build_periods();
    }

    // --- words and walks on the dual graph -------------------------------

    // Single generator step; gen 0 = x (right gluing), gen 1 = y (top).
    int step(int q, int gen, bool forward) const {
        if (gen == 0) return forward ? surf.right[q] : surf.right_inv[q];
        return forward ? surf.top[q] : surf.top_inv[q];
    }

    int trace(const GroupWord& w, int start) const {
        int q = start;
        for (const Letter& l : w.letters) {
            int64_t k = l.exp < 0 ? -l.exp : l.exp;
            for (int64_t i = 0; i < k; ++i) q = step(q, l.gen, l.exp > 0);
        }
        return q;
    }

    // Non-tree coordinates of the closed path read from `start`.
    std::vector<Int> chi_of_word(const GroupWord& w, int start) const {
        std::vector<Int> chi(m, Int(0));
        int q = start;
        for (const Letter& l : w.letters) {
            int64_t k = l.exp < 0 ? -l.exp : l.exp;
            for (int64_t i = 0; i < k; ++i) {
                if (l.exp > 0) {
                    int e = l.gen == 0 ? x_edge(q) : y_edge(q);
                    if (nontree_index[e] >= 0) chi[nontree_index[e]] += 1;
                    q = step(q, l.gen, true);
                } else {
                    q = step(q, l.gen, false);
                    int e = l.gen == 0 ? x_edge(q) : y_edge(q);
                    if (nontree_index[e] >= 0) chi[nontree_index[e]] -= 1;
                }
            }
        }
        if (q != start) throw InvalidParameter("chi_of_word: path is not closed");
        return chi;
    }

    GroupWord tree_word(int q) const {  // root -> q
        std::vector<Letter> rev;
        while (tree_parent[q] >= 0) {
            int s = tree_step[q];
            rev.push_back({s & 1, s < 2 ? 1 : -1});
            q = tree_parent[q];
        }
        GroupWord w;
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.push(it->gen, it->exp);
        return w;
    }

    // Basis cycle as a closed word at the root square.
    GroupWord basis_word(int k) const {
        GroupWord w;
        for (int c = 0; c < m; ++c) {
            Int coeff = basis_cycles.at(c, k);
            if (coeff == 0) continue;
            int e = nontree_edges[c];
            int tail = e < n ? e : e - n;
            int head = e < n ? surf.right[tail] : surf.top[tail];
            GroupWord cyc = tree_word(tail);
            cyc.push(e < n ? 0 : 1, 1);
            cyc = cyc * tree_word(head).inverse();
            GroupWord piece = coeff > 0 ? cyc : cyc.inverse();
            long reps = (long)abs(to_i64(coeff));
            for (long i = 0; i < reps; ++i) w = w * piece;
        }
        return w;
    }

    // --- class-level operations ------------------------------------------

    std::vector<Int> project(const std::vector<Int>& chi) const {
        std::vector<Int> out(rank);
        for (int k = 0; k < rank; ++k) {
            Int s = 0;
            for (int c = 0; c < m; ++c) s += proj.at(k, c) * chi[c];
            out[k] = s;
        }
        return out;
    }

    // Class coordinates of a closed cell-complex chain, via the dual cocycles.
    std::vector<Int> class_of_cell_chain(const std::vector<Int>& chain) const {
        if ((int)chain.size() != 2 * n) throw DimensionMismatch("cell chain length");
        assert_cell_chain_closed(chain);
        std::vector<Int> out(rank);
        for (int k = 0; k < rank; ++k) {
            Int s = 0;
            for (int e = 0; e < 2 * n; ++e) s += dual_cocycles.at(e, k) * chain[e];
            out[k] = s;
        }
        return out;
    }

    void assert_cell_chain_closed(const std::vector<Int>& chain) const {
        std::vector<Int> bd(surf.vertex_count(), Int(0));
        for (int e = 0; e < 2 * n; ++e) {
            if (chain[e] == 0) continue;
            bd[surf.edge_head_vertex(e)] += chain[e];
            bd[surf.edge_tail_vertex(e)] -= chain[e];
        }
        for (const Int& v : bd)
            if (v != 0) throw InvalidParameter("cell chain has nonzero boundary");
    }

    // Cochain given by weights on cell edges, expressed on the basis.
    CohomologyClass class_of_cochain(const std::vector<Int>& weights) const {
        if ((int)weights.size() != 2 * n) throw DimensionMismatch("cochain length");
        CohomologyClass out(rank);
        for (int k = 0; k < rank; ++k) {
            Int s = 0;
            for (int e = 0; e < 2 * n; ++e) s += weights[e] * basis_chains.at(e, k);
            out[k] = s;
        }
        return out;
    }

    // Intersection pairing of two cycles given in basis coordinates.
    Int intersect_cycles(const std::vector<Int>& z1, const std::vector<Int>& z2) const {
        if ((int)z1.size() != rank || (int)z2.size() != rank)
            throw DimensionMismatch("cycle coordinate length");
        Int s = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) s += z1[i] * j_mat.at(i, j) * z2[j];
        return s;
    }

    // Chain d with intersect(d, x) = c(x) for every basis cycle x.
    std::vector<Int> poincare_dual(const CohomologyClass& c) const {
        if ((int)c.size() != rank) throw DimensionMismatch("class coordinate length");
        return mat_apply(j_inv_t, c);
    }

    // Pairing of two cohomology classes through their duals.
    Int intersect_classes(const CohomologyClass& c1, const CohomologyClass& c2) const {
        return intersect_cycles(poincare_dual(c1), poincare_dual(c2));
    }

    // Holonomy (in table units) of the cycle with the given basis coordinates.
    std::pair<Rat, Rat> holonomy_of_cycle(const std::vector<Int>& z) const {
        Rat hx(0), hy(0);
        for (int k = 0; k < rank; ++k) {
            hx += Rat(z[k]) * periods[k].first;
            hy += Rat(z[k]) * periods[k].second;
        }
        return {hx, hy};
    }

    // Holonomy of the Poincare dual of a cohomology class.
    std::pair<Rat, Rat> holonomy_of_class(const CohomologyClass& c) const {
        return holonomy_of_cycle(poincare_dual(c));
    }

    // Period classes: values of the x- and y-period (in square units) on the
    // basis; the tautological plane is their pair of duals.
    CohomologyClass period_class_x() const {
        CohomologyClass c(rank);
        for (int k = 0; k < rank; ++k) {
            Int s = 0;
            for (int q = 0; q < n; ++q) s += basis_chains.at(surf.eh(q), k);
            c[k] = s;
        }
        return c;
    }
    CohomologyClass period_class_y() const {
        CohomologyClass c(rank);
        for (int k = 0; k < rank; ++k) {
            Int s = 0;
            for (int q = 0; q < n; ++q) s += basis_chains.at(surf.ev(q), k);
            c[k] = s;
        }
        return c;
    }

  private:
    void build_tree() {
        tree_parent.assign(n, -2);
        tree_step.assign(n, -1);
        tree_parent[0] = -1;
        std::vector<int> queue = {0};
        std::vector<char> tree_edge(2 * n, 0);
        for (size_t head = 0; head < queue.size(); ++head) {
            int q = queue[head];
            const int nbs[4] = {surf.right[q], surf.top[q], surf.right_inv[q], surf.top_inv[q]};
            for (int s = 0; s < 4; ++s) {
                int p = nbs[s];
                if (tree_parent[p] != -2) continue;
                tree_parent[p] = q;
                tree_step[p] = s;
                // Record which undirected dual edge the step uses.
                int owner = (s == 0 || s == 1) ? q : p;
                tree_edge[(s & 1) == 0 ? x_edge(owner) : y_edge(owner)] = 1;
                queue.push_back(p);
            }
        }
        nontree_index.assign(2 * n, -1);
        nontree_edges.clear();
        for (int e = 0; e < 2 * n; ++e)
            if (!tree_edge[e]) {
                nontree_index[e] = (int)nontree_edges.size();
                nontree_edges.push_back(e);
            }
        m = (int)nontree_edges.size();
        if (m != n + 1) throw Error("homology: unexpected non-tree edge count");
    }

    // Dual loop around each cell-complex vertex, counterclockwise.
    std::vector<Int> vertex_loop_chi(int q0, int c0) const {
        std::vector<Int> chi(m, Int(0));
        int q = q0, c = c0;
        do {
            int e;
            Int sign;
            switch (c) {
                case kBL: e = x_edge(surf.right_inv[q]); sign = -1; break;
                case kBR: e = y_edge(surf.top_inv[q]); sign = -1; break;
                case kTR: e = x_edge(q); sign = 1; break;
                default:  e = y_edge(q); sign = 1; break;
            }
            if (nontree_index[e] >= 0) chi[nontree_index[e]] += sign;
            auto [nq, nc] = surf.next_sector_ccw(q, c);
            q = nq;
            c = nc;
        } while (q != q0 || c != c0);
        return chi;
    }

    void build_basis() {
        int nv = surf.vertex_count();
        std::vector<int> rep_q(nv, -1), rep_c(nv, -1);
        for (int q = 0; q < n; ++q)
            for (int c = 0; c < 4; ++c) {
                int v = surf.sector_vertex[surf.sector_id(q, c)];
                if (rep_q[v] < 0) { rep_q[v] = q; rep_c[v] = c; }
            }
        IMat loops(m, nv);
        for (int v = 0; v < nv; ++v) {
            std::vector<Int> chi = vertex_loop_chi(rep_q[v], rep_c[v]);
            for (int c = 0; c < m; ++c) loops.at(c, v) = chi[c];
        }
        Snf s = smith_normal_form(loops);
        for (const Int& d : s.divisors)
            if (d != 1) throw Error("homology: torsion in vertex-loop quotient");
        if (s.rank != nv - 1) throw Error("homology: unexpected vertex-loop rank");
        rank = m - s.rank;
        if (rank != 2 * surf.genus) throw Error("homology: rank does not match genus");

        basis_cycles = IMat(m, rank);
        for (int k = 0; k < rank; ++k)
            for (int i = 0; i < m; ++i) basis_cycles.at(i, k) = s.uinv.at(i, s.rank + k);
        proj = IMat(rank, m);
        for (int k = 0; k < rank; ++k)
            for (int c = 0; c < m; ++c) proj.at(k, c) = s.u.at(s.rank + k, c);

        // Expand basis cycles to full cell-complex chains.
        basis_chains = IMat(2 * n, rank);
        for (int k = 0; k < rank; ++k) {
            std::vector<Int> dual = expand_to_dual_chain(basis_cycles.col(k));
            for (int e = 0; e < 2 * n; ++e)
                basis_chains.at(cell_edge_of_dual(e), k) = dual[e];
        }
        for (int k = 0; k < rank; ++k) assert_cell_chain_closed(basis_chains.col(k));
    }

    // Full dual-edge chain of the closed chain with the given non-tree coords.
    std::vector<Int> expand_to_dual_chain(const std::vector<Int>& chi) const {
        std::vector<Int> chain(2 * n, Int(0));
        for (int c = 0; c < m; ++c) {
            if (chi[c] == 0) continue;
            int e = nontree_edges[c];
            chain[e] += chi[c];
            int tail = e < n ? e : e - n;
            int head = e < n ? surf.right[tail] : surf.top[tail];
            add_tree_path(chain, tail, chi[c]);   // root -> tail
            add_tree_path(chain, head, -chi[c]);  // minus root -> head
        }
        return chain;
    }

    void add_tree_path(std::vector<Int>& chain, int q, const Int& coeff) const {
        while (tree_parent[q] >= 0) {
            int s = tree_step[q];
            int p = tree_parent[q];
            int owner = (s == 0 || s == 1) ? p : q;
            int e = (s & 1) == 0 ? x_edge(owner) : y_edge(owner);
            chain[e] += (s < 2) ? coeff : -coeff;
            q = p;
        }
    }

    void build_cocycles_and_form() {
        // Solve for integral cocycles alpha_k with alpha_k(h_j) = delta_kj.
        // Rows: one cocycle condition per square, then one pairing per basis
        // cycle.  Unknowns: values on the 2n cell edges.
        IMat sys(n + rank, 2 * n);
        for (int q = 0; q < n; ++q) {
            sys.at(q, surf.eh(surf.top_inv[q])) += 1;   // bottom
            sys.at(q, surf.ev(q)) += 1;                 // right
            sys.at(q, surf.eh(q)) -= 1;                 // top
            sys.at(q, surf.ev(surf.right_inv[q])) -= 1; // left
        }
        for (int j = 0; j < rank; ++j)
            for (int e = 0; e < 2 * n; ++e) sys.at(n + j, e) = basis_chains.at(e, j);

        dual_cocycles = IMat(2 * n, rank);
        for (int k = 0; k < rank; ++k) {
            std::vector<Int> rhs(n + rank, Int(0));
            rhs[n + k] = 1;
            auto x = solve_columns(sys, rhs);
            if (!x) throw Error("homology: no integral dual cocycle (unexpected torsion)");
            for (int e = 0; e < 2 * n; ++e) dual_cocycles.at(e, k) = (*x)[e];
        }

        // Cup-product pairing of the dual cocycles against the fundamental
        // class.  Each square is split along the BL-TR diagonal into the
        // ordered triangles [BL,BR,TR] and -[BL,TL,TR]; Alexander-Whitney on
        // those gives alpha(bottom)beta(right) - alpha(left)beta(top).
        IMat q_mat(rank, rank);
        for (int k = 0; k < rank; ++k)
            for (int l = 0; l < rank; ++l) {
                Int s = 0;
                for (int q = 0; q < n; ++q) {
                    const Int& ab = dual_cocycles.at(surf.eh(surf.top_inv[q]), k);
                    const Int& al = dual_cocycles.at(surf.ev(surf.right_inv[q]), k);
                    const Int& br = dual_cocycles.at(surf.ev(q), l);
                    const Int& bt = dual_cocycles.at(surf.eh(q), l);
                    s += ab * br - al * bt;
                }
                q_mat.at(k, l) = s;
            }
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (q_mat.at(i, j) != -q_mat.at(j, i))
                    throw Error("homology: cup pairing not antisymmetric");
        Int dq = det_bareiss(q_mat);
        if (dq != 1 && dq != -1) throw Error("homology: intersection form not unimodular");
        j_mat = inverse_unimodular(q_mat).transposed();
        j_inv_t = inverse_unimodular(j_mat.transposed());
    }

    void build_periods() {
        periods.resize(rank);
        for (int k = 0; k < rank; ++k) {
            Int hx = 0, hy = 0;
            for (int q = 0; q < n; ++q) {
                hx += basis_chains.at(surf.eh(q), k);
                hy += basis_chains.at(surf.ev(q), k);
            }
            periods[k] = {Rat(hx) * surf.scale, Rat(hy) * surf.scale};
        }
    }
};

}  // namespace windtree
