#include "gcodes/enumerators.hpp"
#include "gcodes/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

using namespace gcodes;

namespace {

HwePoly poly(int t, std::vector<long> c) {
    HwePoly p = HwePoly::zero(t);
    for (std::size_t i = 0; i < c.size(); ++i) p.coeffs[i] = Rational(c[i]);
    return p;
}

Rational eval(const HwePoly& p, const Rational& x, const Rational& y) {
    Rational s = 0;
    for (int w = 0; w <= p.t; ++w) {
        Rational term = p.coeffs[static_cast<std::size_t>(w)];
        for (int i = 0; i < p.t - w; ++i) term *= x;
        for (int i = 0; i < w; ++i) term *= y;
        s += term;
    }
    return s;
}

const CycField& f8() { return CycField::get(8); }

std::vector<int> as_ints(const CycVector& v) {
    std::vector<int> out;
    for (const auto& c : v) out.push_back(c.is_zero() ? 0 : (c.is_one() ? 1 : -1));
    return out;
}

}  // namespace

TEST(Enumerators, GWeight) {
    Module z2({2, 1});
    ThetaImage s1(group_closure(3, {Perm::from_images({2, 3, 1})}), z2);
    EXPECT_EQ(g_weight(s1, {1, 1, 1}), 1);
    EXPECT_EQ(g_weight(s1, {0, 0, 0}), 0);
    EXPECT_THROW(g_weight(s1, {1, 0, 0}), NotThetaFixed);
    ThetaImage triv(group_closure(3, {}), Module({3, 1}));
    for (const auto& u : triv.elements()) {
        int hamming = 0;
        for (auto x : u) hamming += x != 0;
        EXPECT_EQ(g_weight(triv, u), hamming);
    }
}

TEST(Enumerators, HweExamples) {
    Module z2({2, 1}), z3({3, 1});
    ThetaImage s1(group_closure(3, {Perm::from_images({2, 3, 1})}), z2);
    EXPECT_EQ(hwe_g(s1, {{0, 0, 0}, {1, 1, 1}}), poly(1, {1, 1}));
    EXPECT_EQ(hwe_g(s1, {{0, 0, 0}, {1, 1, 1}}).to_string(), "x + y");
    ThetaImage s2(group_closure(2, {Perm::from_images({2, 1})}), z3);
    EXPECT_EQ(hwe_g(s2, {{0, 0}}), poly(1, {1, 0}));
    ThetaImage t2(group_closure(2, {}), z2);
    EXPECT_EQ(as_ints(fwe_g(t2, {{0, 0}, {1, 1}}, f8())), (std::vector<int>{1, 0, 0, 1}));
}

TEST(Enumerators, HweToString) {
    HwePoly p = HwePoly::zero(2);
    p.coeffs = {Rational(1, 2), Rational(-3), Rational(0)};
    EXPECT_EQ(p.to_string(), "1/2*x^2 - 3*x*y");
    EXPECT_EQ(HwePoly::zero(2).to_string(), "0");
}

TEST(Enumerators, HweTransformExamples) {
    // the S1 right-hand side: hwe(theta(C^perp)) = x with |theta(C^perp)| = 1
    EXPECT_EQ(macwilliams_hwe_transform(poly(1, {1, 0}), Rational(1), 2), poly(1, {1, 1}));
    EXPECT_EQ(macwilliams_hwe_transform(poly(1, {1, 1}), Rational(1), 2), poly(1, {2, 0}));
    HwePoly half = HwePoly::zero(1);
    half.coeffs = {Rational(1, 2), Rational(1, 2)};
    EXPECT_EQ(macwilliams_hwe_transform(poly(1, {1, 0}), Rational(2), 2), half);
    // zero code of length t: (x + (q-1) y)^t / q^t
    for (long long q : {2, 3, 4})
        for (int t = 1; t <= 4; ++t) {
            auto p = macwilliams_hwe_transform(poly(t, {1}), Rational(static_cast<long>(std::pow(q, t))), q);
            for (int w = 0; w <= t; ++w) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(t), static_cast<unsigned long>(w));
                Rational expect(binom);
                for (int i = 0; i < w; ++i) expect *= Rational(static_cast<long>(q - 1));
                for (int i = 0; i < t; ++i) expect /= Rational(static_cast<long>(q));
                EXPECT_EQ(p.coeffs[static_cast<std::size_t>(w)], expect);
            }
        }
}

TEST(Enumerators, HweTransformMatchesSubstitution) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const int t = 1 + trial % 5;
        const long long q = 2 + trial % 4;
        HwePoly p = HwePoly::zero(t);
        for (auto& c : p.coeffs) c = Rational(d(rng));
        const Rational size(1 + trial % 7);
        auto tp = macwilliams_hwe_transform(p, size, q);
        Rational x(d(rng), 3), y(d(rng), 2);
        x.canonicalize();
        y.canonicalize();
        EXPECT_EQ(eval(tp, x, y), eval(p, x + Rational(static_cast<long>(q - 1)) * y, x - y) / size);
    }
}

TEST(Enumerators, CweProjectsToHwe) {
    for (int m : {2, 3, 4}) {
        Module v({m, 1});
        for (int n = 1; n <= 3; ++n)
            for (const auto& g : all_subgroups(n)) {
                if (std::gcd(static_cast<long long>(g.order()), static_cast<long long>(m)) != 1) continue;
                ThetaImage amb(g, v);
                for (const auto& d : enumerate_submodules(amb)) {
                    auto h = hwe_g(amb, d);
                    EXPECT_EQ(project_cwe(cwe_g(amb, d), amb.t()), h);
                    EXPECT_EQ(h.at_one(), Rational(static_cast<long>(d.size())));
                }
            }
    }
}

TEST(Enumerators, MacWilliamsExamples) {
    Module z2({2, 1}), z3({3, 1});
    DualSpec m2{{BilinearForm::diagonal(z2, QmodZ(1, 2))}};
    DualSpec m3{{BilinearForm::diagonal(z3, QmodZ(1, 3))}};

    auto c1 = code_closure(z2, group_closure(3, {Perm::from_images({2, 3, 1})}), {{1, 1, 1}});
    auto r = verify_hwemac(c1, m2);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.dual_side, (WordSet{{0, 0, 0}}));
    EXPECT_EQ(r.lhs, poly(1, {1, 1}));
    EXPECT_TRUE(verify_gmac(c1, m2).ok);

    auto c2 = code_closure(z3, group_closure(2, {Perm::from_images({2, 1})}), {{1, 2}});
    r = verify_hwemac(c2, m3);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.lhs, poly(1, {1, 0}));
    EXPECT_EQ(r.dual_side, (WordSet{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_TRUE(verify_gmac(c2, m3).ok);

    auto c3 = code_closure(z2, group_closure(2, {}), {{1, 1}});
    r = verify_hwemac(c3, m2);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.lhs, poly(2, {1, 0, 1}));

    Module z6({6, 1});
    DualSpec bad{{BilinearForm::diagonal(z6, QmodZ(1, 2))}};
    EXPECT_THROW(verify_gmac(code_closure(z6, group_closure(1, {}), {{1}}), bad), DegenerateForm);
}

TEST(Enumerators, FweTransformExamples) {
    Module z2({2, 1});
    auto beta = BilinearForm::diagonal(z2, QmodZ(1, 2));
    ThetaImage s1(group_closure(3, {Perm::from_images({2, 3, 1})}), z2);
    EXPECT_EQ(as_ints(macwilliams_fwe_transform(s1, {{0, 0, 0}, {1, 1, 1}}, beta, f8())), (std::vector<int>{1, 0}));

    ThetaImage t2(group_closure(2, {}), z2);
    EXPECT_EQ(as_ints(macwilliams_fwe_transform(t2, {{0, 0}}, beta, f8())), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(as_ints(macwilliams_fwe_transform(t2, t2.elements(), beta, f8())), (std::vector<int>{1, 0, 0, 0}));
    EXPECT_EQ(as_ints(macwilliams_fwe_transform(t2, {{0, 0}, {1, 1}}, beta, f8())), (std::vector<int>{1, 0, 0, 1}));
    EXPECT_THROW(macwilliams_fwe_transform(t2, {{0, 0}}, BilinearForm::diagonal(Module({3, 1}), QmodZ(1, 3)), f8()),
                 ConductorMismatch);
}

TEST(Enumerators, FweTransformMatchesFloatingCharacterSum) {
    for (int m : {3, 4}) {
        Module v({m, 1});
        auto beta = BilinearForm::diagonal(v, QmodZ(1, m));
        const CycField& f = CycField::get(fwe_conductor(beta));
        ThetaImage amb(group_closure(2, {}), v);
        for (const auto& d : enumerate_submodules(amb)) {
            auto tr = macwilliams_fwe_transform(amb, d, beta, f);
            for (std::size_t i = 0; i < amb.size(); ++i) {
                std::complex<double> s = 0;
                for (const auto& u : d) {
                    const double a = beta.eval_n(amb.elements()[i], u).value().get_d();
                    s += std::polar(1.0, 2 * std::numbers::pi * a);
                }
                s /= static_cast<double>(d.size());
                EXPECT_LT(std::abs(tr[i].to_complex() - s), 1e-9);
            }
        }
    }
}

TEST(Enumerators, CorpusMacWilliams) {
    for (int m : {2, 3, 4}) {
        Module v({m, 1});
        DualSpec ms{{BilinearForm::diagonal(v, QmodZ(1, m))}};
        for (int n = 1; n <= 3; ++n)
            for (const auto& g : all_subgroups(n)) {
                if (std::gcd(static_cast<long long>(g.order()), static_cast<long long>(m)) != 1) continue;
                ThetaImage amb(g, v);
                for (const auto& x : all_words(v, n, 4096)) {
                    auto c = code_closure(v, g, {x});
                    EXPECT_TRUE(verify_gmac(c, ms).ok);
                    EXPECT_TRUE(verify_hwemac(c, ms).ok);
                    EXPECT_TRUE(verify_fwemac(c, ms).ok);
                    // applying the transform twice returns the original
                    auto tc = theta_code(c);
                    auto gd = g_dual(amb, tc, ms);
                    auto once = macwilliams_hwe_transform(hwe_g(amb, tc), Rational(static_cast<long>(tc.size())), m);
                    EXPECT_EQ(once, hwe_g(amb, gd));
                    auto twice = macwilliams_hwe_transform(once, Rational(static_cast<long>(gd.size())), m);
                    EXPECT_EQ(twice, hwe_g(amb, tc));
                    if (tc == gd) {
                        const CycField& f = CycField::get(fwe_conductor(ms.forms[0]));
                        EXPECT_EQ(macwilliams_fwe_transform(amb, tc, ms.forms[0], f), fwe_g(amb, tc, f));
                    }
                }
            }
    }
}
