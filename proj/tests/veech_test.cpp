#include <gtest/gtest.h>

#include <random>

#include "windtree/veech.hpp"
#include "windtree/windtree_surface.hpp"

using namespace windtree;

namespace {

SL2Z eval_sl2z(const GroupWord& w) {
    SL2Z r = SL2Z::ident();
    for (const Letter& l : w.letters) {
        SL2Z g = l.gen == 0 ? SL2Z::shear_l(l.exp > 0 ? 1 : -1)
                            : SL2Z::shear_t(l.exp > 0 ? 1 : -1);
        int64_t k = l.exp < 0 ? -l.exp : l.exp;
        for (int64_t i = 0; i < k; ++i) r = r.mul(g);
    }
    return r;
}

TEST(Decompose, RoundTripsRandomMatrices) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        // Random word in the shears gives a random group element.
        GroupWord w;
        int len = 1 + (int)(rng() % 6);
        for (int i = 0; i < len; ++i) w.push((int)(rng() % 2), (int64_t)(rng() % 7) - 3);
        SL2Z m = eval_sl2z(w);
        GroupWord d = decompose_sl2z(m);  // verifies internally
        EXPECT_TRUE(eval_sl2z(d) == m);
    }
    // Explicit cases including -I and rotation.
    for (auto m : {SL2Z{-1, 0, 0, -1}, SL2Z{0, 1, -1, 0}, SL2Z{2, 1, 1, 1}, SL2Z{-3, -4, -2, -3}, SL2Z{3, 2, 4, 3}})
        EXPECT_TRUE(eval_sl2z(decompose_sl2z(m)) == m);
}

TEST(F2Lift, AbelianizationMatchesMatrix) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        GroupWord w;
        int len = 1 + (int)(rng() % 5);
        for (int i = 0; i < len; ++i) w.push((int)(rng() % 2), (int64_t)(rng() % 5) - 2);
        SL2Z m = eval_sl2z(w);
        F2Endo endo = f2_lift(m);
        // Count letters in the images: column vectors of the matrix.
        auto ab = [](const GroupWord& u) {
            Int x = 0, y = 0;
            for (const Letter& l : u.letters) (l.gen == 0 ? x : y) += l.exp;
            return std::make_pair(x, y);
        };
        auto [ax, ay] = ab(endo.wx);
        auto [bx, by] = ab(endo.wy);
        EXPECT_EQ(ax, m.a);
        EXPECT_EQ(ay, m.c);
        EXPECT_EQ(bx, m.b);
        EXPECT_EQ(by, m.d);
    }
}

TEST(Veech, TorusShearActsAsItself) {
    HomologyLattice h(make_torus());
    auto aut = try_stabilizer(h, SL2Z::shear_l(1));
    ASSERT_TRUE(aut.has_value());
    // [[1,1],[0,1]] acts on the (horizontal, vertical) torus basis as itself.
    EXPECT_EQ(aut->homology_matrix.at(0, 0), 1);
    EXPECT_EQ(aut->homology_matrix.at(0, 1), 1);
    EXPECT_EQ(aut->homology_matrix.at(1, 0), 0);
    EXPECT_EQ(aut->homology_matrix.at(1, 1), 1);
}

TEST(Veech, TorusIdentityAutomorphism) {
    HomologyLattice h(make_torus());
    auto aut = try_stabilizer(h, SL2Z::ident());
    ASSERT_TRUE(aut.has_value());
    EXPECT_EQ(aut->homology_matrix, IMat::identity(2));
}

TEST(Veech, TorusGenerators) {
    HomologyLattice h(make_torus());
    auto gens = find_veech_generators(h, 1);
    ASSERT_GE(gens.size(), 2u);
    EXPECT_TRUE(gens[0].derivative == SL2Z::shear_l(1));
    EXPECT_TRUE(gens[1].derivative == SL2Z::shear_t(1));
}

TEST(Veech, SearchBoundZeroFails) {
    HomologyLattice h(make_torus());
    EXPECT_THROW(find_veech_generators(h, 0), NotFound);
}

class WindTreeVeech : public ::testing::Test {
  protected:
    static void SetUpTestSuite() {
        w_ = new WindTreeSurface(build_windtree_surface(make_rat(1, 2), make_rat(1, 2)));
        h_ = new HomologyLattice(w_->surface);
    }
    static void TearDownTestSuite() {
        delete h_;
        delete w_;
        h_ = nullptr;
        w_ = nullptr;
    }
    static WindTreeSurface* w_;
    static HomologyLattice* h_;
};
WindTreeSurface* WindTreeVeech::w_ = nullptr;
HomologyLattice* WindTreeVeech::h_ = nullptr;

TEST_F(WindTreeVeech, ParabolicStabilizers) {
    // Smallest stabilizing shear powers, verified by explicit relabeling.
    int nl = 0, nt = 0;
    for (int k = 1; k <= 8; ++k)
        if (try_stabilizer(*h_, SL2Z::shear_l(k))) { nl = k; break; }
    for (int k = 1; k <= 8; ++k)
        if (try_stabilizer(*h_, SL2Z::shear_t(k))) { nt = k; break; }
    ASSERT_GT(nl, 0);
    ASSERT_GT(nt, 0);
    EXPECT_EQ(nl, nt);  // the surface is symmetric in the two directions
    RecordProperty("n_l", nl);
    std::cout << "[windtree] smallest stabilizing shear powers: " << nl << ", " << nt << "\n";
}

TEST_F(WindTreeVeech, HomologyActionsAreSymplectic) {
    auto gens = find_veech_generators(*h_, 4);
    ASSERT_GE(gens.size(), 2u);
    std::cout << "[windtree] generators found: " << gens.size() << "\n";
    for (const auto& g : gens) {
        IMat m = g.homology_matrix;
        EXPECT_EQ(m.transposed() * h_->j_mat * m, h_->j_mat);
        Int d = det_bareiss(m);
        EXPECT_TRUE(d == 1 || d == -1);
    }
}

TEST_F(WindTreeVeech, FunctorialityOnWords) {
    // Evaluating the homology action through a word of automorphisms equals
    // the product of the per-generator matrices: exercised by re-deriving the
    // matrix of a product from scratch and comparing up to a translation
    // automorphism of the surface.
    auto gens = find_veech_generators(*h_, 2);
    ASSERT_GE(gens.size(), 2u);
    const AffineAutomorphism& ga = gens[0];
    const AffineAutomorphism& gb = gens[1];
    SL2Z prod = ga.derivative.mul(gb.derivative);
    auto direct = try_stabilizer(*h_, prod);
    ASSERT_TRUE(direct.has_value());
    IMat via_product = ga.homology_matrix * gb.homology_matrix;
    // The two differ at most by the action of a translation automorphism
    // (a relabeling commuting with both gluings).
    bool matched = false;
    // Collect all translation automorphisms explicitly.
    std::vector<IMat> translation_actions;
    {
        const Origami& o = h_->surf;
        for (int cand = 0; cand < o.n; ++cand) {
            std::vector<int> pi(o.n, -1);
            pi[0] = cand;
            std::vector<int> stack = {0};
            bool ok = true;
            while (ok && !stack.empty()) {
                int q = stack.back();
                stack.pop_back();
                auto set = [&](int from, int to) {
                    if (pi[from] == -1) { pi[from] = to; stack.push_back(from); return true; }
                    return pi[from] == to;
                };
                ok = set(o.right[q], o.right[pi[q]]) && set(o.top[q], o.top[pi[q]]) &&
                     set(o.right_inv[q], o.right_inv[pi[q]]) && set(o.top_inv[q], o.top_inv[pi[q]]);
            }
            if (!ok) continue;
            // Translation automorphism: identity derivative, relabeling pi.
            int base = 0;
            while (pi[base] != 0) ++base;
            F2Endo id_endo;
            IMat act(h_->rank, h_->rank);
            bool good = true;
            for (int k = 0; k < h_->rank && good; ++k) {
                GroupWord wk = h_->basis_word(k);
                try {
                    auto coords = h_->project(h_->chi_of_word(wk, base));
                    for (int i = 0; i < h_->rank; ++i) act.at(i, k) = coords[i];
                } catch (const Error&) {
                    good = false;
                }
            }
            if (good) translation_actions.push_back(act);
        }
    }
    for (const IMat& t : translation_actions)
        if (direct->homology_matrix == via_product * t || direct->homology_matrix == t * via_product)
            matched = true;
    EXPECT_TRUE(matched) << "product action differs from direct computation beyond translations";
}

}  // namespace
