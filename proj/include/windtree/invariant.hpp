#pragma once

#include <vector>

#include "windtree/errors.hpp"
#include "windtree/homology.hpp"
#include "windtree/imat.hpp"
#include "windtree/representation.hpp"
#include "windtree/veech.hpp"

namespace windtree {

// Saturated integer sublattice of the cohomology lattice, closed under the
// generator actions.  Basis in canonical column HNF.
struct InvariantSubspace {
    IMat basis;
    bool saturated = true;
    bool degenerate = false;  // zero seed

    int dim() const { return basis.cols; }
};

// Action of an affine automorphism on cohomology coefficient vectors: the
// contragredient of its homology matrix.
inline IMat cohomology_action(const IMat& homology_matrix) {
    return inverse_unimodular(homology_matrix).transposed();
}

inline std::vector<IMat> cohomology_actions(const std::vector<AffineAutomorphism>& gens) {
    std::vector<IMat> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(cohomology_action(g.homology_matrix));
    return out;
}

// Smallest saturated sublattice containing the seeds and closed under all
// actions.  Saturation makes each closure step rank-increasing, so the
// iteration stops after at most rank steps; the worst case is the full
// lattice.
inline InvariantSubspace smallest_invariant_subspace(const std::vector<CohomologyClass>& seeds,
                                                     const std::vector<IMat>& actions) {
    if (seeds.empty()) throw InvalidParameter("no seed classes");
    int dim = (int)seeds[0].size();
    InvariantSubspace out;
    IMat seed_mat = IMat::from_columns(dim, {seeds.begin(), seeds.end()});
    if (rank_of(seed_mat) == 0) {
        out.basis = IMat(dim, 0);
        out.degenerate = true;
        return out;
    }
    IMat basis = saturate_columns(seed_mat);
    for (;;) {
        std::vector<std::vector<Int>> cols;
        for (int j = 0; j < basis.cols; ++j) cols.push_back(basis.col(j));
        bool closed = true;
        for (const IMat& a : actions)
            for (int j = 0; j < basis.cols; ++j) {
                std::vector<Int> img = mat_apply(a, basis.col(j));
                if (!solve_columns(basis, img)) closed = false;
                cols.push_back(std::move(img));
            }
        if (closed) break;
        basis = saturate_columns(IMat::from_columns(dim, cols));
    }
    out.basis = basis;
    return out;
}

// Generator images in the subspace basis.  Saturation guarantees integer
// entries when the subspace is genuinely invariant.
inline Representation restrict_representation(const std::vector<AffineAutomorphism>& gens,
                                              const InvariantSubspace& f) {
    Representation rep;
    rep.subspace_basis = f.basis;
    int r = f.basis.cols;
    for (const auto& g : gens) {
        IMat action = cohomology_action(g.homology_matrix);
        IMat img(r, r);
        for (int j = 0; j < r; ++j) {
            auto x = solve_columns(f.basis, mat_apply(action, f.basis.col(j)));
            if (!x) throw NotInvariant("generator image leaves the subspace");
            for (int i = 0; i < r; ++i) img.at(i, j) = (*x)[i];
        }
        rep.images.push_back(img);
        rep.planars.push_back(g.derivative.to_mat2());
    }
    rep.finalize();
    return rep;
}

// Every basis class must have exactly zero holonomy.
inline bool check_zero_drift(const HomologyLattice& h, const InvariantSubspace& f) {
    for (int j = 0; j < f.basis.cols; ++j) {
        auto hol = h.holonomy_of_class(f.basis.col(j));
        if (hol.first != 0 || hol.second != 0) return false;
    }
    return true;
}

// Neither period class may lie in the rational span of the subspace; if one
// does, the restriction is faithful and a kernel search is futile.
inline bool check_tautological_exclusion(const HomologyLattice& h, const InvariantSubspace& f) {
    if (f.basis.cols == 0) return true;
    return !in_rational_span(f.basis, h.period_class_x()) &&
           !in_rational_span(f.basis, h.period_class_y());
}

}  // namespace windtree
