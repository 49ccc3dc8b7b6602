#pragma once

#include <vector>

#include "windtree/errors.hpp"
#include "windtree/imat.hpp"
#include "windtree/mat2.hpp"
#include "windtree/word.hpp"

namespace windtree {

// Restriction of the cohomology action to an invariant sublattice: integer
// generator images together with the planar derivatives of the same
// generators.  Words evaluate as products, so the evaluation is a
// homomorphism by construction.
struct Representation {
    IMat subspace_basis;          // columns span the invariant lattice
    std::vector<IMat> images;     // one per generator, dim x dim
    std::vector<IMat> image_invs;
    std::vector<Mat2> planars;
    std::vector<Mat2> planar_invs;

    int dim() const { return subspace_basis.cols; }
    int generator_count() const { return (int)images.size(); }

    IMat evaluate(const GroupWord& w) const {
        return evaluate_word(w, images, image_invs, IMat::identity(dim()));
    }
    Mat2 evaluate_planar(const GroupWord& w) const {
        return evaluate_word(w, planars, planar_invs, Mat2::identity());
    }

    void finalize() {
        image_invs.clear();
        planar_invs.clear();
        for (const IMat& m : images) {
            Int d = det_bareiss(m);
            if (d != 1 && d != -1) throw Error("representation image not invertible over Z");
            image_invs.push_back(inverse_unimodular(m));
        }
        for (const Mat2& p : planars) planar_invs.push_back(p.inverse());
    }
};

}  // namespace windtree
