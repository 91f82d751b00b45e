#include "gcodes/codes.hpp"
#include "gcodes/errors.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gcodes;

namespace {

struct Setup {
    Module v;
    PermGroup g;
    DualSpec m;
};

Setup s1() {
    Module v({2, 1});
    return {v, group_closure(3, {Perm::from_images({2, 3, 1})}), {{BilinearForm::diagonal(v, QmodZ(1, 2))}}};
}

Setup s2() {
    Module v({3, 1});
    return {v, group_closure(2, {Perm::from_images({2, 1})}), {{BilinearForm::diagonal(v, QmodZ(1, 3))}}};
}

Setup trivial(int m, int n) {
    Module v({m, 1});
    return {v, group_closure(n, {}), {{BilinearForm::diagonal(v, QmodZ(1, m))}}};
}

std::vector<QuadraticMap> half_square(const Module& v) { return {QuadraticMap::square(v, QmodZ(1, 2))}; }

// every subset of size <= 2 of V^n, as generator lists
std::vector<std::vector<Word>> small_generator_sets(const Module& v, int n) {
    auto words = all_words(v, n, 4096);
    std::vector<std::vector<Word>> out{{}};
    for (std::size_t i = 0; i < words.size(); ++i) {
        out.push_back({words[i]});
        for (std::size_t j = i + 1; j < words.size() && words.size() <= 16; ++j) out.push_back({words[i], words[j]});
    }
    return out;
}

}  // namespace

TEST(Codes, ClosureExamples) {
    auto a = s1();
    EXPECT_EQ(code_closure(a.v, a.g, {{1, 1, 1}}).words(), (WordSet{{0, 0, 0}, {1, 1, 1}}));
    auto b = s2();
    EXPECT_EQ(code_closure(b.v, b.g, {{1, 2}}).words(), (WordSet{{0, 0}, {1, 2}, {2, 1}}));
    EXPECT_EQ(code_closure(b.v, b.g, {}).words(), (WordSet{{0, 0}}));
    EXPECT_THROW(code_closure(b.v, b.g, {{1}}), DimensionMismatch);
    auto t = trivial(2, 4);
    EXPECT_THROW(code_closure(t.v, t.g, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 3), CapExceeded);
}

TEST(Codes, DualExamples) {
    auto a = s1();
    auto c = code_closure(a.v, a.g, {{1, 1, 1}});
    EXPECT_EQ(dual(c, a.m).words(), (WordSet{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    auto b = s2();
    auto c2 = code_closure(b.v, b.g, {{1, 2}});
    EXPECT_EQ(dual(c2, b.m).words(), (WordSet{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(dual(code_closure(b.v, b.g, {}), b.m).size(), 9u);
}

TEST(Codes, ThetaCodeAndGDualExamples) {
    auto a = s1();
    auto c = code_closure(a.v, a.g, {{1, 1, 1}});
    EXPECT_EQ(theta_code(c), (WordSet{{0, 0, 0}, {1, 1, 1}}));
    ThetaImage amb1(a.g, a.v);
    EXPECT_EQ(g_dual(amb1, theta_code(c), a.m), (WordSet{{0, 0, 0}}));

    auto b = s2();
    auto c2 = code_closure(b.v, b.g, {{1, 2}});
    EXPECT_EQ(theta_code(c2), (WordSet{{0, 0}}));
    ThetaImage amb2(b.g, b.v);
    EXPECT_EQ(g_dual(amb2, {{0, 0}}, b.m), (WordSet{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_THROW(g_dual(amb2, {{1, 2}}, b.m), NotThetaFixed);

    auto t = trivial(3, 2);
    ThetaImage amb3(t.g, t.v);
    auto c3 = code_closure(t.v, t.g, {{1, 2}});
    EXPECT_EQ(g_dual(amb3, theta_code(c3), t.m), dual(c3, t.m).words());
}

TEST(Codes, LemmaDualExamples) {
    auto a = s1();
    auto r = lemma_dual_check(code_closure(a.v, a.g, {{1, 1, 1}}), a.m);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.g_dual, (WordSet{{0, 0, 0}}));

    auto b = s2();
    r = lemma_dual_check(code_closure(b.v, b.g, {{1, 2}}), b.m);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.g_dual, (WordSet{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(r.theta_dual_mg, (WordSet{{0, 0}, {1, 1}, {2, 2}}));
}

TEST(Codes, HaydenExamples) {
    auto a = s1();
    auto r = hayden_check(code_closure(a.v, a.g, {{1, 1, 1}}), a.m);
    EXPECT_TRUE(r.ok) << r.failed_clause;
    EXPECT_EQ(r.ker_theta, (WordSet{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    EXPECT_EQ(r.theta_dual, (WordSet{{0, 0, 0}}));
    EXPECT_EQ(r.sum, r.theta_c_perp);

    auto t = trivial(2, 2);
    auto c = code_closure(t.v, t.g, {{1, 0}});
    r = hayden_check(c, t.m);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.ker_theta, (WordSet{{0, 0}}));
    EXPECT_EQ(r.theta_c_perp, dual(c, t.m).words());

    auto b = s2();
    EXPECT_TRUE(hayden_check(code_closure(b.v, b.g, {{1, 2}}), b.m).ok);
}

TEST(Codes, PredicatesExamples) {
    auto t = trivial(2, 2);
    auto c = code_closure(t.v, t.g, {{1, 1}});
    auto p = predicates(c, t.m, half_square(t.v));
    EXPECT_TRUE(p.self_dual && p.isotropic && p.g_self_dual && p.g_isotropic);

    auto a = s1();
    p = predicates(code_closure(a.v, a.g, {{1, 1, 1}}), a.m, half_square(a.v));
    EXPECT_FALSE(p.g_isotropic);
    EXPECT_FALSE(p.g_self_orthogonal);

    p = predicates(code_closure(a.v, a.g, {}), a.m, half_square(a.v));
    EXPECT_TRUE(p.g_self_orthogonal && p.g_isotropic);
    EXPECT_FALSE(p.g_self_dual);
}

TEST(Codes, SubmoduleEnumeration) {
    auto count = [](int m, int n) {
        Module v({m, 1});
        return enumerate_submodules(ThetaImage(group_closure(n, {}), v)).size();
    };
    EXPECT_EQ(count(2, 1), 2u);
    EXPECT_EQ(count(4, 1), 3u);
    EXPECT_EQ(count(2, 2), 5u);
    EXPECT_EQ(count(3, 2), 6u);
    EXPECT_EQ(count(2, 3), 16u);
    EXPECT_EQ(count(4, 2), 15u);
    EXPECT_EQ(count(2, 4), 67u);

    Module z2({2, 1});
    auto subs = enumerate_submodules(ThetaImage(group_closure(2, {}), z2));
    EXPECT_EQ(subs, (std::vector<WordSet>{{{0, 0}},
                                          {{0, 0}, {0, 1}},
                                          {{0, 0}, {1, 0}},
                                          {{0, 0}, {1, 1}},
                                          {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}));
    Module z4({4, 1});
    EXPECT_EQ(enumerate_submodules(ThetaImage(group_closure(1, {}), z4))[1], (WordSet{{0}, {2}}));
    EXPECT_THROW(enumerate_submodules(ThetaImage(group_closure(2, {}), Module({3, 1})), 8), CapExceeded);
}

TEST(Codes, FilteredEnumerationMatchesUnfiltered) {
    for (int m : {2, 3, 4}) {
        auto t = trivial(m, 2);
        ThetaImage amb(t.g, t.v);
        auto phis = m == 3 ? std::vector<QuadraticMap>{} : half_square(t.v);
        auto all = enumerate_submodules(amb);
        auto keep = [&](const WordSet& d) { return g_isotropic_set(amb, d, t.m, phis); };
        std::vector<WordSet> expect;
        for (const auto& d : all)
            if (keep(d)) expect.push_back(d);
        EXPECT_EQ(enumerate_submodules(amb, kDefaultSubmoduleCap, keep), expect);
    }
}

TEST(Codes, IdempotentImage) {
    auto t = trivial(6, 1);
    auto c = code_closure(t.v, t.g, {{1}});
    EXPECT_EQ(idempotent_image(c, {1}).words(), c.words());
    EXPECT_EQ(idempotent_image(c, {0}).words(), (WordSet{{0}}));
    EXPECT_EQ(idempotent_image(c, {3}).words(), (WordSet{{0}, {3}}));
    EXPECT_THROW(idempotent_image(c, {2}), NotIdempotent);
    EXPECT_TRUE(idempotent_image(c, {4}).is_g_code());
}

TEST(Codes, RuLemma) {
    Module z2({2, 1}), z4({4, 1});
    auto r = ru_lemma_check(ThetaImage(group_closure(1, {}), z2));
    // literal reading fails already on Z/2: 0 lies in R.1 but not in R^*.1
    EXPECT_FALSE(r.literal_ok);
    EXPECT_EQ(r.literal_counterexamples, (std::vector<std::pair<Word, Word>>{{{0}, {1}}}));
    EXPECT_TRUE(r.corrected_ok);

    r = ru_lemma_check(ThetaImage(group_closure(1, {}), z4));
    EXPECT_FALSE(r.literal_ok);
    EXPECT_TRUE(r.corrected_ok);
    auto& ce = r.literal_counterexamples;
    EXPECT_NE(std::find(ce.begin(), ce.end(), std::make_pair(Word{0}, Word{2})), ce.end());

    // corrected reading on larger ambients
    for (int m : {2, 3, 4, 6}) {
        Module v({m, 1});
        EXPECT_TRUE(ru_lemma_check(ThetaImage(group_closure(2, {}), v)).corrected_ok) << m;
    }
}

TEST(Codes, CorpusProperties) {
    for (int m : {2, 3, 4}) {
        Module v({m, 1});
        DualSpec ms{{BilinearForm::diagonal(v, QmodZ(1, m))}};
        for (int n = 1; n <= 3; ++n)
            for (const auto& g : all_subgroups(n)) {
                if (std::gcd(static_cast<long long>(g.order()), static_cast<long long>(m)) != 1) continue;
                ThetaImage amb(g, v);
                for (const auto& gens : small_generator_sets(v, n)) {
                    auto c = code_closure(v, g, gens);
                    ASSERT_TRUE(c.is_g_code());
                    auto d = dual(c, ms);
                    EXPECT_TRUE(d.is_g_code());
                    EXPECT_EQ(dual(d, ms).words(), c.words());
                    auto tc = theta_code(c);
                    auto gd = g_dual(amb, tc, ms);
                    EXPECT_EQ(g_dual(amb, gd, ms), tc);
                    EXPECT_EQ(tc.size() * gd.size(), amb.size());
                    EXPECT_TRUE(lemma_dual_check(c, ms).ok);
                    EXPECT_TRUE(hayden_check(c, ms).ok);
                    // orbit-of-beta0 dual agrees with the {beta0} dual
                    EXPECT_EQ(dual(c, orbit_dual_spec(ms.forms)).words(), d.words());
                }
            }
    }
}

TEST(Codes, HaydenDetectsABrokenDual) {
    // With a degenerate form the Hayden identity still holds as stated for
    // the annihilator, but the cardinality identity of the G-dual fails.
    Module z6({6, 1});
    DualSpec degenerate{{BilinearForm::diagonal(z6, QmodZ(1, 2))}};
    auto g = group_closure(1, {});
    auto c = code_closure(z6, g, {{1}});
    ThetaImage amb(g, z6);
    EXPECT_NE(theta_code(c).size() * g_dual(amb, theta_code(c), degenerate).size(), amb.size());
}
