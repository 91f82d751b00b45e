#include "gcodes/errors.hpp"
#include "gcodes/forms.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gcodes;

namespace {

std::vector<QmodZ> table(std::initializer_list<const char*> xs) {
    std::vector<QmodZ> out;
    for (const char* x : xs) out.push_back(QmodZ::parse(x));
    return out;
}

BilinearForm standard(int m) { return BilinearForm::diagonal(Module({m, 1}), QmodZ(1, m)); }

}  // namespace

TEST(BilinearForm, EvalExamples) {
    auto beta = standard(2);
    EXPECT_TRUE(beta.eval_n({1, 1}, {1, 1}).is_zero());
    ThetaImage s1(group_closure(3, {Perm::from_images({2, 3, 1})}), Module({2, 1}));
    EXPECT_EQ(bilinear_eval_g(beta, s1, {1, 1, 1}, {1, 1, 1}), QmodZ(1, 2));
    EXPECT_THROW(bilinear_eval_g(beta, s1, {1, 0, 0}, {1, 1, 1}), NotThetaFixed);
    for (const auto& v : all_words(beta.module(), 3, 100)) EXPECT_TRUE(beta.eval_n({0, 0, 0}, v).is_zero());
}

TEST(BilinearForm, RejectsEntriesNotKilledByModulus) {
    Module z2({2, 1});
    EXPECT_THROW(BilinearForm(z2, Gram{{QmodZ(1, 3)}}), InvalidForm);
    EXPECT_THROW(BilinearForm(z2, Gram{{QmodZ(1, 2), QmodZ(0, 1)}}), InvalidForm);
}

TEST(BilinearForm, GramEvaluationMatchesDefinition) {
    Module v({4, 2});
    Gram g{{QmodZ(1, 4), QmodZ(1, 2)}, {QmodZ(0, 1), QmodZ(3, 4)}};
    BilinearForm beta(v, g);
    for (ModIndex x = 0; x < v.size(); ++x)
        for (ModIndex y = 0; y < v.size(); ++y) {
            auto cx = v.coords(x), cy = v.coords(y);
            QmodZ expect;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) expect += g[i][j].scaled(static_cast<long long>(cx[i]) * cy[j]);
            EXPECT_EQ(beta.eval(x, y), expect);
        }
}

TEST(BilinearForm, Nondegeneracy) {
    EXPECT_FALSE(nondegenerate_check(standard(2)).has_value());
    EXPECT_FALSE(nondegenerate_check(standard(3)).has_value());
    auto bad = nondegenerate_check(BilinearForm::diagonal(Module({6, 1}), QmodZ(1, 2)));
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->witness, 2);
    EXPECT_EQ(bad->side, Side::Left);
}

TEST(BilinearForm, CollapsedFormMatchesOrbitLengthIdentity) {
    // beta_G(u' M_G, v) = beta^n(u', v) for u', v in theta(V^n)
    for (int m : {2, 3, 4}) {
        auto beta = standard(m);
        const Module& v = beta.module();
        for (int n = 1; n <= 3; ++n)
            for (const auto& g : all_subgroups(n)) {
                if (std::gcd(static_cast<long long>(g.order()), static_cast<long long>(m)) != 1) continue;
                ThetaImage th(g, v);
                auto diag = orbit_length_diagonal(g);
                for (const auto& up : th.elements())
                    for (const auto& w : th.elements()) {
                        auto u = apply_orbit_lengths(v, diag, up);
                        EXPECT_EQ(bilinear_eval_g(beta, th, w, up), bilinear_eval_g(beta, th, up, w));
                        EXPECT_EQ(beta.eval_n(up, w), bilinear_eval_g(beta, th, u, w));
                    }
            }
    }
}

TEST(QuadraticMap, CocycleExamples) {
    Module z2({2, 1}), z3({3, 1});
    EXPECT_FALSE(quadratic_check(QuadraticMap(z2, table({"0", "1/2"}))).has_value());
    EXPECT_FALSE(quadratic_check(QuadraticMap(z2, table({"0", "1/4"}))).has_value());
    EXPECT_TRUE(quadratic_check(QuadraticMap(z3, table({"0", "1/2", "0"}))).has_value());
}

TEST(QuadraticMap, GEvaluation) {
    Module z2({2, 1});
    QuadraticMap phi(z2, table({"0", "1/2"}));
    ThetaImage s1(group_closure(3, {Perm::from_images({2, 3, 1})}), z2);
    EXPECT_EQ(quadratic_eval_g(phi, s1, {1, 1, 1}), QmodZ(1, 2));
    EXPECT_TRUE(quadratic_eval_g(phi, s1, {0, 0, 0}).is_zero());
    ThetaImage triv(group_closure(2, {}), z2);
    EXPECT_TRUE(quadratic_eval_g(phi, triv, {1, 1}).is_zero());
}

TEST(QuadraticMap, ActionExamples) {
    Module z2({2, 1}), z3({3, 1});
    QuadraticMap phi(z2, table({"0", "1/2"}));
    EXPECT_EQ(qmap_action(phi, {1}), phi);
    EXPECT_TRUE(qmap_action(phi, {0}).is_zero());
    QuadraticMap psi(z3, table({"0", "1/3", "1/3"}));
    EXPECT_EQ(qmap_action(psi, {2}), psi);
}

TEST(QuadraticMap, ActionPreservesCocycleAndPolarizes) {
    for (int m : {2, 3, 4, 6}) {
        Module v({m, 1});
        for (int c = 0; c < 2 * m; ++c) {
            // x -> c x^2 / (2m) is well defined on Z/m unless m is odd and c is odd
            if (m % 2 == 1 && c % 2 == 1) {
                EXPECT_THROW(QuadraticMap::square(v, QmodZ(c, 2 * m)), InvalidForm);
                continue;
            }
            QuadraticMap phi = QuadraticMap::square(v, QmodZ(c, 2 * m));
            EXPECT_FALSE(quadratic_check(phi).has_value());
            EXPECT_FALSE(polarization_check(phi).has_value());
            for (auto r : v.ring().elements()) EXPECT_FALSE(quadratic_check(qmap_action(phi, r)).has_value());
        }
    }
    Module v2({2, 2});
    auto phi = QuadraticMap::square(v2, QmodZ(1, 4));
    EXPECT_FALSE(quadratic_check(phi).has_value());
}

TEST(QuadraticMap, SquareRejectsIllDefinedScalar) {
    EXPECT_THROW(QuadraticMap::square(Module({3, 1}), QmodZ(1, 2)), InvalidForm);
}

TEST(Twist, SymmetricAndAsymmetricForms) {
    for (int m : {2, 3, 4}) {
        auto beta = standard(m);
        for (auto r : beta.module().ring().elements())
            for (auto s : beta.module().ring().elements()) EXPECT_FALSE(twist_checks(beta, r, s).has_value());
    }
    Module v({2, 2});
    BilinearForm asym(v, Gram{{QmodZ(0, 1), QmodZ(1, 2)}, {QmodZ(0, 1), QmodZ(0, 1)}});
    EXPECT_FALSE(asym.transposed() == asym);
    for (auto r : v.ring().elements())
        for (auto s : v.ring().elements()) EXPECT_FALSE(twist_checks(asym, r, s).has_value());
}

TEST(Twist, MalformedActionIsReported) {
    auto beta = standard(3);
    FormAction broken = [](const BilinearForm& b, RingElem r, RingElem) { return b.acted(r, r); };
    auto bad = twist_checks(beta, {1}, {2}, broken);
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->clause, "action differs from beta(r x, s y)");
}

TEST(FormRingRep, AugmentsPhiAndValidates) {
    Module z2({2, 1});
    auto beta = standard(2);
    FormRingRep none(beta, {}, Involution::identity(z2.ring()));
    ASSERT_EQ(none.phis().size(), 1u);
    EXPECT_EQ(none.phis()[0], QuadraticMap(z2, table({"0", "1/2"})));
    EXPECT_TRUE(none.closed_under_action());

    FormRingRep type2(beta, {QuadraticMap(z2, table({"0", "1/4"}))}, Involution::identity(z2.ring()));
    EXPECT_EQ(type2.phis().size(), 2u);
    EXPECT_TRUE(type2.closed_under_action());

    Module z6({6, 1});
    EXPECT_THROW(FormRingRep(BilinearForm::diagonal(z6, QmodZ(1, 2)), {}, Involution::identity(z6.ring())),
                 DegenerateForm);
    EXPECT_THROW(FormRingRep(beta, {QuadraticMap(z2, table({"1/2", "0"}))}, Involution::identity(z2.ring())),
                 InvalidForm);
    Module z3({3, 1});
    EXPECT_THROW(FormRingRep(standard(3), {QuadraticMap(z3, table({"0", "1/2", "0"}))},
                             Involution::identity(z3.ring())),
                 InvalidForm);
}

TEST(FormRingRep, OrbitOfStandardForm) {
    // Over Z/m the orbit of xy/m is {c xy/m}; every member is a multiple of beta0.
    for (int m : {2, 3, 4}) {
        auto orbit = form_orbit(standard(m));
        EXPECT_EQ(static_cast<int>(orbit.size()), m);
    }
}
