#pragma once

#include <optional>
#include <vector>

#include "windtree/errors.hpp"
#include "windtree/homology.hpp"
#include "windtree/mat2.hpp"
#include "windtree/word.hpp"

namespace windtree {

// Endomorphism of the free group on {x=0, y=1}, by the images of x and y.
struct F2Endo {
    GroupWord wx = GroupWord::generator(0);
    GroupWord wy = GroupWord::generator(1);

    GroupWord apply(const GroupWord& w) const {
        GroupWord out;
        for (const Letter& l : w.letters) {
            const GroupWord& img = l.gen == 0 ? wx : wy;
            GroupWord piece = l.exp > 0 ? img : img.inverse();
            int64_t k = l.exp < 0 ? -l.exp : l.exp;
            for (int64_t i = 0; i < k; ++i) out = out * piece;
        }
        return out;
    }
};

inline F2Endo compose(const F2Endo& a, const F2Endo& b) {
    return {a.apply(b.wx), a.apply(b.wy)};
}

namespace detail {
// Lift of an elementary shear power to the free group:
//   [[1,e],[0,1]] -> x |-> x, y |-> x^e y
//   [[1,0],[e,1]] -> x |-> x y^e, y |-> y
inline F2Endo elementary_lift(int gen, int64_t e) {
    F2Endo f;
    if (gen == 0) {
        f.wy = GroupWord::generator(0, e) * GroupWord::generator(1);
    } else {
        f.wx = GroupWord::generator(0) * GroupWord::generator(1, e);
    }
    return f;
}
}  // namespace detail

// Integer matrix in the planar group, with exact entries.
struct SL2Z {
    Int a, b, c, d;

    bool operator==(const SL2Z& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    SL2Z mul(const SL2Z& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    static SL2Z ident() { return {1, 0, 0, 1}; }
    static SL2Z shear_l(int64_t e) { return {1, e, 0, 1}; }
    static SL2Z shear_t(int64_t e) { return {1, 0, e, 1}; }
    Mat2 to_mat2() const { return Mat2(Rat(a), Rat(b), Rat(c), Rat(d)); }
};

// Word in the two standard shears evaluating exactly to m (det 1 required).
// The 90-degree rotation used for column swaps is L T^-1 L.
inline GroupWord decompose_sl2z(const SL2Z& m) {
    if (m.a * m.d - m.b * m.c != 1) throw InvalidParameter("decompose: determinant must be 1");
    GroupWord ops;  // applied on the left, recorded in application order
    SL2Z cur = m;
    auto apply_l = [&](const Int& q) {  // cur <- L^q * cur
        if (q == 0) return;
        int64_t e = to_i64(q);
        cur = SL2Z::shear_l(e).mul(cur);
        ops.push(0, e);
    };
    auto apply_t = [&](const Int& q) {
        if (q == 0) return;
        int64_t e = to_i64(q);
        cur = SL2Z::shear_t(e).mul(cur);
        ops.push(1, e);
    };
    auto apply_rot = [&]() {  // cur <- (L T^-1 L) * cur
        apply_l(1);
        apply_t(-1);
        apply_l(1);
    };
    int guard = 0;
    while (cur.c != 0) {
        if (cur.a == 0) {
            apply_rot();
            continue;
        }
        Int q = cur.c / cur.a;
        if (q != 0) {
            apply_t(-q);
        } else {
            apply_rot();  // |c| < |a|: rotate to swap roles
        }
        if (++guard > 512) throw Error("decompose: did not terminate");
    }
    // Now upper triangular with a*d = 1.
    if (cur.a == 1) {
        apply_l(-cur.b);
    } else {
        apply_l(cur.b);   // cur = -L^{b}; L^{-b} * cur... bring to -I first
        apply_rot();
        apply_rot();      // (L T^-1 L)^2 = -I clears the sign
    }
    if (!(cur.a == 1 && cur.b == 0 && cur.c == 0 && cur.d == 1)) {
        // -I case leaves cur == -I before the two rotations; re-check.
        throw Error("decompose: reduction failed");
    }
    // cur = ops_k ... ops_1 * m = I, so m = ops_1^-1 ... ops_k^-1 read forward.
    GroupWord word;
    for (const Letter& l : ops.letters) word.push(l.gen, -l.exp);
    // Exactness check.
    std::vector<SL2Z> gens = {SL2Z::shear_l(1), SL2Z::shear_t(1)};
    std::vector<SL2Z> invs = {SL2Z::shear_l(-1), SL2Z::shear_t(-1)};
    SL2Z check = SL2Z::ident();
    for (const Letter& l : word.letters) {
        int64_t k = l.exp < 0 ? -l.exp : l.exp;
        for (int64_t i = 0; i < k; ++i) check = check.mul(l.exp > 0 ? gens[l.gen] : invs[l.gen]);
    }
    if (!(check == m)) throw Error("decompose: verification failed");
    return word;
}

// Free-group lift of a determinant-1 integer matrix: an automorphism whose
// abelianization is the matrix.
inline F2Endo f2_lift(const SL2Z& m) {
    GroupWord word = decompose_sl2z(m);
    F2Endo endo;
    for (const Letter& l : word.letters)
        endo = compose(endo, detail::elementary_lift(l.gen, l.exp));
    return endo;
}

// Affine self-map of the origami: planar derivative, square relabeling, and
// the induced map on the homology basis.
struct AffineAutomorphism {
    SL2Z derivative;
    F2Endo endo;
    std::vector<int> cell_map;  // pi: conjugates the re-marked gluings back
    int base_square = 0;        // pi^{-1}(root)
    IMat homology_matrix;
};

namespace detail {
inline std::vector<int> perm_of_word(const HomologyLattice& h, const GroupWord& w) {
    std::vector<int> p(h.n);
    for (int q = 0; q < h.n; ++q) p[q] = h.trace(w, q);
    return p;
}
}  // namespace detail

// Searches for a relabeling pi with pi(r'(q)) = right(pi(q)) and
// pi(u'(q)) = top(pi(q)); returns the one with the smallest image of square 0.
inline std::optional<std::vector<int>> find_relabeling(const Origami& o,
                                                       const std::vector<int>& rp,
                                                       const std::vector<int>& up) {
    int n = o.n;
    std::vector<int> rp_inv(n), up_inv(n);
    for (int q = 0; q < n; ++q) { rp_inv[rp[q]] = q; up_inv[up[q]] = q; }
    for (int cand = 0; cand < n; ++cand) {
        std::vector<int> pi(n, -1);
        pi[0] = cand;
        std::vector<int> stack = {0};
        bool ok = true;
        auto set = [&](int q, int v) {
            if (pi[q] == -1) { pi[q] = v; stack.push_back(q); return true; }
            return pi[q] == v;
        };
        while (ok && !stack.empty()) {
            int q = stack.back();
            stack.pop_back();
            ok = set(rp[q], o.right[pi[q]]) && set(up[q], o.top[pi[q]]) &&
                 set(rp_inv[q], o.right_inv[pi[q]]) && set(up_inv[q], o.top_inv[pi[q]]);
        }
        if (!ok) continue;
        for (int q = 0; q < n && ok; ++q)
            ok = pi[q] >= 0 && pi[rp[q]] == o.right[pi[q]] && pi[up[q]] == o.top[pi[q]];
        if (ok) return pi;
    }
    return std::nullopt;
}

// Homology action of a verified affine automorphism: push each basis word
// through the free-group lift and read off its class.
inline IMat homology_action_matrix(const HomologyLattice& h, const F2Endo& endo,
                                   int base_square) {
    IMat m(h.rank, h.rank);
    for (int k = 0; k < h.rank; ++k) {
        GroupWord image = endo.apply(h.basis_word(k));
        std::vector<Int> coords = h.project(h.chi_of_word(image, base_square));
        for (int i = 0; i < h.rank; ++i) m.at(i, k) = coords[i];
    }
    // Integrality of the inverse and symplecticity.
    Int dm = det_bareiss(m);
    if (dm != 1 && dm != -1) throw Error("homology action is not invertible over Z");
    IMat jm = m.transposed() * h.j_mat * m;
    if (jm != h.j_mat) throw Error("homology action does not preserve the intersection form");
    return m;
}

// Tests whether the matrix stabilizes the origami; on success returns the
// verified automorphism with its homology action.
inline std::optional<AffineAutomorphism> try_stabilizer(const HomologyLattice& h,
                                                        const SL2Z& m) {
    F2Endo endo = f2_lift(m);
    std::vector<int> rp = detail::perm_of_word(h, endo.wx);
    std::vector<int> up = detail::perm_of_word(h, endo.wy);
    auto pi = find_relabeling(h.surf, rp, up);
    if (!pi) return std::nullopt;
    AffineAutomorphism aut;
    aut.derivative = m;
    aut.endo = endo;
    aut.cell_map = *pi;
    aut.base_square = 0;
    while ((*pi)[aut.base_square] != 0) ++aut.base_square;
    aut.homology_matrix = homology_action_matrix(h, endo, aut.base_square);
    return aut;
}

// Generating set: the smallest stabilizing parabolic powers in both shear
// directions, plus every non-elliptic stabilizer in the entry ball.
inline std::vector<AffineAutomorphism> find_veech_generators(const HomologyLattice& h,
                                                             int search_bound) {
    std::vector<AffineAutomorphism> gens;
    if (search_bound < 1) throw NotFound("empty search bound");
    bool have_l = false, have_t = false;
    for (int k = 1; k <= search_bound && !have_l; ++k)
        if (auto aut = try_stabilizer(h, SL2Z::shear_l(k))) {
            gens.push_back(*aut);
            have_l = true;
        }
    for (int k = 1; k <= search_bound && !have_t; ++k)
        if (auto aut = try_stabilizer(h, SL2Z::shear_t(k))) {
            gens.push_back(*aut);
            have_t = true;
        }
    if (!have_l || !have_t)
        throw NotFound("no stabilizing parabolic within search bound " +
                       std::to_string(search_bound));
    // Ball search over small entries; elliptic and central elements are
    // discarded, as are the parabolics already found.
    long bound = search_bound;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            for (long c = -bound; c <= bound; ++c)
                for (long d = -bound; d <= bound; ++d) {
                    if (a * d - b * c != 1) continue;
                    SL2Z m{a, b, c, d};
                    Mat2 p = m.to_mat2();
                    if (p.is_central() || classify(p).kind == ElementKind::elliptic) continue;
                    bool dup = false;
                    for (const auto& g : gens) dup = dup || g.derivative == m;
                    if (dup) continue;
                    if (auto aut = try_stabilizer(h, m)) gens.push_back(*aut);
                }
    return gens;
}

}  // namespace windtree
