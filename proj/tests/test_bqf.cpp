#include <gtest/gtest.h>

#include <cubecomp/bqf.hpp>
#include <cubecomp/oracle.hpp>
#include <cubecomp/verify.hpp>

using namespace cubecomp;

TEST(Discriminant, Examples)
{
    EXPECT_EQ(discriminant(BQF{1, 0, 1}), -4);
    EXPECT_EQ(discriminant(BQF{1, 1, 6}), -23);
    EXPECT_EQ(discriminant(BQF{1, 1, 1}), -3);
}

TEST(SOfD, Examples)
{
    EXPECT_EQ(s_of_d(-4), (BQF{1, 0, 1}));
    EXPECT_EQ(s_of_d(-23), (BQF{1, 1, 6}));
    EXPECT_EQ(s_of_d(-3), (BQF{1, 1, 1}));
    for (int D = -3; D > -400; --D)
        if (is_discriminant(D))
            EXPECT_EQ(s_of_d(D).discriminant(), D);
}

TEST(SOfD, RejectsNonDiscriminants)
{
    EXPECT_THROW(s_of_d(-5), domain_error);
    EXPECT_THROW(s_of_d(4), domain_error);
    EXPECT_THROW(s_of_d(0), domain_error);
}

TEST(Reduce, Examples)
{
    Reduction r = reduce({1, 0, 1});
    EXPECT_EQ(r.form, (BQF{1, 0, 1}));
    EXPECT_EQ(r.transform, IMat2::identity());
    r = reduce({3, 2, 2});
    EXPECT_EQ(r.form, (BQF{2, 2, 3}));
    EXPECT_EQ(act(BQF{3, 2, 2}, r.transform), r.form);
    EXPECT_EQ(oracle::reduce_by_word_search({3, 2, 2}, 6), (BQF{2, 2, 3}));
    r = reduce({1, 1, 6});
    EXPECT_EQ(r.form, (BQF{1, 1, 6}));
    EXPECT_EQ(r.transform, IMat2::identity());
}

TEST(Reduce, BoundaryTieRules)
{
    EXPECT_EQ(reduced({2, -2, 3}), (BQF{2, 2, 3}));
    EXPECT_EQ(reduced({3, -1, 3}), (BQF{3, 1, 3}));
}

TEST(Reduce, RejectsIndefiniteAndDegenerate)
{
    EXPECT_THROW(reduce({1, 3, 1}), domain_error);
    EXPECT_THROW(reduce({1, 2, 1}), domain_error);
    EXPECT_THROW(reduce({-1, 0, -1}), domain_error);
}

TEST(Reduce, IdempotentWithCorrectTransform)
{
    auto r = verify::reduce_properties();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Compose, Examples)
{
    EXPECT_EQ(compose({1, 1, 6}, {2, 1, 3}), (BQF{2, 1, 3}));
    EXPECT_EQ(compose({2, 1, 3}, {2, -1, 3}), (BQF{1, 1, 6}));
    EXPECT_EQ(compose({2, 1, 3}, {2, 1, 3}), (BQF{2, -1, 3}));
}

TEST(Compose, Errors)
{
    EXPECT_THROW(compose({1, 1, 6}, {1, 0, 1}), domain_error);
    EXPECT_THROW(compose({2, 2, 2}, {1, 1, 3}), domain_error); // imprimitive, disc -12
}

TEST(Compose, WellDefinedAndMatchesIdealOracle)
{
    auto r = verify::compose_properties();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Compose, IdealOracleOnNonFundamental)
{
    for (int D : {-12, -16, -27, -28, -36, -48, -60, -64, -99, -100, -108, -128}) {
        auto reps = reduced_forms(D);
        for (auto const & f : reps)
            for (auto const & g : reps)
                EXPECT_EQ(compose(f, g), oracle::compose_via_ideals(f, g)) << D << " " << f << g;
    }
}

TEST(ClassGroup, Examples)
{
    ClassGroup G = class_group(-3);
    EXPECT_EQ(G.h(), 1u);
    EXPECT_EQ(G.reps[0], (BQF{1, 1, 1}));
    G = class_group(-4);
    EXPECT_EQ(G.h(), 1u);
    EXPECT_EQ(G.reps[0], (BQF{1, 0, 1}));
    G = class_group(-23);
    ASSERT_EQ(G.h(), 3u);
    EXPECT_EQ(G.reps, (std::vector<BQF>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}}));
    EXPECT_EQ(G.index_of({2, 5, 6}), 1u);
    EXPECT_EQ(G.inverse_index(1), 2u);
}

TEST(ClassGroup, KnownClassNumbers)
{
    std::map<int, std::size_t> known{{-47, 5}, {-71, 7}, {-84, 4}, {-163, 1}, {-199, 9}, {-420, 8}, {-12, 1}, {-16, 1}, {-99, 2}};
    for (auto [D, h] : known)
        EXPECT_EQ(class_group(D).h(), h) << D;
}

TEST(ClassGroup, AbelianGroupAxioms)
{
    auto r = verify::class_group_laws(1500);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(ClassGroup, ClassNumberMatchesMoveOracle)
{
    auto r = verify::class_number_vs_moves(400);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(ClassGroup, DeterministicUnderThreadCount)
{
    setenv("CUBECOMP_THREADS", "1", 1);
    ClassGroup a = class_group(-4004);
    setenv("CUBECOMP_THREADS", "4", 1);
    ClassGroup b = class_group(-4004);
    unsetenv("CUBECOMP_THREADS");
    EXPECT_EQ(a.reps, b.reps);
    EXPECT_EQ(a.table, b.table);
}

TEST(Heegner, Examples)
{
    auto p = heegner_points(-4);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].re, 0);
    EXPECT_EQ(p[0].im_squared, 1);
    p = heegner_points(-3);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].re, Rational(-1, 2));
    EXPECT_EQ(p[0].im_squared, Rational(3, 4));
    p = heegner_points(-23);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0].re, Rational(-1, 2));
    EXPECT_EQ(p[0].im_squared, Rational(23, 4));
}

TEST(Heegner, FundamentalDomainIffReduced)
{
    for (auto const & f : reduced_forms(-23))
        EXPECT_TRUE(heegner_point(f).in_fundamental_domain());
    EXPECT_FALSE(heegner_point({2, -2, 3}).in_fundamental_domain());
    EXPECT_FALSE(heegner_point({3, -1, 3}).in_fundamental_domain());
    EXPECT_FALSE(heegner_point({6, 5, 2}).in_fundamental_domain());
}

TEST(Heegner, RejectsNonFundamental)
{
    EXPECT_THROW(heegner_points(-12), domain_error);
}

TEST(Heegner, CountAndTorusDeterminant)
{
    auto r = verify::torus_and_heegner();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(UnitCount, Examples)
{
    EXPECT_EQ(unit_count(-4), 4);
    EXPECT_EQ(unit_count(-3), 6);
    EXPECT_EQ(unit_count(-23), 2);
}

TEST(Torus, Examples)
{
    EXPECT_EQ(torus_element(-4, 1, 0), QMat2::identity());
    QMat2 j = torus_element(-4, 0, 1);
    EXPECT_EQ(j, qmat2(0, 1, -1, 0));
    EXPECT_EQ(det(j), 1);
    EXPECT_EQ(det(torus_element(-3, 1, 1)), Rational(7, 4));
    EXPECT_THROW(torus_element(-4, 0, 0), domain_error);
}
