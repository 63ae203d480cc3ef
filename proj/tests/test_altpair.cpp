#include <gtest/gtest.h>

#include <cubecomp/altpair.hpp>
#include <cubecomp/oracle.hpp>
#include <cubecomp/verify.hpp>

using namespace cubecomp;

TEST(Pfaffian, Examples)
{
    EXPECT_EQ(pfaffian(Alt4{0, 1, 0, 0, 1, 0}), 1);
    EXPECT_EQ(pfaffian(Alt4{0, 0, 0, 0, 0, 0}), 0);
    EXPECT_EQ(pfaffian(Alt4{1, 0, 0, 0, 0, 1}), -1);
    EXPECT_EQ(det(Alt4{1, 0, 0, 0, 0, 1}.matrix()), 1);
}

TEST(Pfaffian, MatchesMatrixOracleAndSquaresToDet)
{
    auto r = verify::pfaffian_squared();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Alt4, MatrixLayout)
{
    Alt4 m{1, 2, 3, 4, 5, 6};
    IMat4 M = m.matrix();
    EXPECT_EQ(M(0, 1), 1);
    EXPECT_EQ(M(0, 2), 2);
    EXPECT_EQ(M(0, 3), 3);
    EXPECT_EQ(M(1, 2), 4);
    EXPECT_EQ(M(1, 3), 5);
    EXPECT_EQ(M(2, 3), 6);
    EXPECT_EQ(transpose(M), BigInt(-1) * M);
    EXPECT_EQ(Alt4::from_matrix(M), m);
    M(1, 0) = 7;
    EXPECT_THROW(Alt4::from_matrix(M), domain_error);
}

TEST(QFormPair, Examples)
{
    Cube A{1, 0, 0, 1, 0, 1, 1, 0};
    EXPECT_EQ(qform_pair(fuse(A)), (BQF{-1, 0, 1}));
    AltPair F{{0, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0}};
    EXPECT_EQ(qform_pair(F), (BQF{-1, 0, 0}));
    EXPECT_EQ(qform_pair(canonical_w(-4)).discriminant(), -4);
}

TEST(QFormPair, MatchesPfaffianEvaluation)
{
    verify::Sampler s(41);
    for (int k = 0; k < 2000; ++k) {
        AltPair F{s.alt4(30), s.alt4(30)};
        BQF q = qform_pair(F);
        EXPECT_EQ(q, oracle::qform_pair_by_pfaffian(F));
        EXPECT_EQ(q.a, -pfaffian(F.first));
        EXPECT_EQ(q.c, -pfaffian(F.second));
    }
}

TEST(Fuse, Examples)
{
    AltPair F = fuse(Cube{1, 0, 0, 0, 0, 0, 0, 0});
    EXPECT_EQ(F.first, (Alt4{0, 1, 0, 0, 0, 0}));
    EXPECT_EQ(F.second, (Alt4{0, 0, 0, 0, 0, 0}));
    F = fuse(Cube{1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(F.first, (Alt4{0, 1, 2, 3, 4, 0}));
    EXPECT_EQ(F.second, (Alt4{0, 5, 6, 7, 8, 0}));
    EXPECT_EQ(fuse(Cube{0, 0, 0, 0, 0, 0, 0, 0}), (AltPair{}));
}

TEST(Fuse, CompatibleWithFirstSlicing)
{
    auto r = verify::fusion_compatibility();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Fuse, SurjectiveOnClassesAtSmallHeight)
{
    auto r = verify::fusion_class_surjectivity();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(ActPair, Identity)
{
    AltPair F{{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}};
    EXPECT_EQ(act_pair(F, IMat2::identity(), IMat4::identity()), F);
}

TEST(ActPair, SwapExchangesBlocks)
{
    AltPair F{{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}};
    AltPair G = act_pair(F, mat2(0, 1, 1, 0), IMat4::identity());
    EXPECT_EQ(G.first, F.second);
    EXPECT_EQ(G.second, F.first);
    BQF q = qform_pair(F), p = qform_pair(G);
    EXPECT_EQ(p, (BQF{q.c, q.b, q.a}));
}

TEST(ActPair, SignedPermutationKeepsDisc)
{
    IMat4 g{};
    g(0, 1) = 1;
    g(1, 0) = -1;
    g(2, 3) = 1;
    g(3, 2) = -1;
    ASSERT_EQ(det(g), 1);
    verify::Sampler s(42);
    for (int k = 0; k < 100; ++k) {
        AltPair F{s.alt4(9), s.alt4(9)};
        EXPECT_EQ(qform_pair(act_pair(F, IMat2::identity(), g)).discriminant(), qform_pair(F).discriminant());
    }
}

TEST(ActPair, DiscInvariantUnderSl2xSl4)
{
    auto r = verify::altpair_disc_invariance();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(InvariantsH, CanonicalW)
{
    // P1 = -Pfaff(M_w) = -(0*0 - 1*(-1) - 0) = -1 with the displayed entries
    EXPECT_EQ(invariants_h(canonical_w(-4)), (HInvariants{-4, 1, -1}));
    EXPECT_EQ(invariants_h(canonical_w(-23)), (HInvariants{-23, 1, -1}));
}

TEST(InvariantsH, FusedAndEmbedded)
{
    verify::Sampler s(43);
    for (int k = 0; k < 200; ++k) {
        Cube A = s.cube(20);
        HInvariants fused = invariants_h(fuse(A));
        EXPECT_EQ(fused.p0, 0);
        EXPECT_EQ(fused.p1, -(A.a * A.d - A.b * A.c));
        EXPECT_EQ(invariants_h(embed_vd(A)).p0, 1);
    }
}

TEST(EmbedVd, Examples)
{
    AltPair F = embed_vd(Cube{1, 2, 3, 4, 5, 6, 7, 8});
    EXPECT_EQ(F.second, (Alt4{1, 5, 6, 7, 8, 0}));
    EXPECT_EQ(F.first, (Alt4{0, 1, 2, 3, 4, 0}));
    EXPECT_EQ(embed_vd(Cube{0, 0, 0, 0, 0, 0, 0, 0}), (AltPair{{0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}}));
}

TEST(EmbedVd, DiscriminantShiftRecorded)
{
    // Q for the embedded pair differs from Q_A^1 only in the middle
    // coefficient, by -(r2 l1 + r1 l2) = 0, so the discriminant is unchanged.
    for (int D : {-3, -4, -7, -23, -47}) {
        auto reps = reduced_forms(D);
        for (auto const & f1 : reps)
            for (auto const & f2 : reps) {
                Cube A = cube_from_pair(f1, f2);
                BQF q = qform_pair(embed_vd(A));
                EXPECT_EQ(q, qform(A, 1));
                EXPECT_EQ((q.discriminant() - D) % 4, 0);
            }
    }
}

TEST(CharacterH, Identity)
{
    HCharacter chi = character_h(HElement{});
    EXPECT_EQ(chi.chi0, 1);
    EXPECT_EQ(chi.chi1, 1);
}

TEST(CharacterH, ScalarG1)
{
    // Pfaff is quadratic in M, so chi1 picks up lambda^2
    for (int lam : {2, -3, 5}) {
        HElement g;
        g.g1 = qmat2(lam, 0, 0, lam);
        HCharacter chi = character_h(g);
        EXPECT_EQ(chi.chi0, lam);
        EXPECT_EQ(chi.chi1, lam * lam);
    }
}

TEST(CharacterH, CentralTorusActsTrivially)
{
    for (Rational t : {Rational(2), Rational(-3, 5), Rational(7, 4)}) {
        HElement g;
        g.g1 = qmat2(1 / (t * t), 0, 0, 1 / (t * t));
        g.p = t * QMat4::identity();
        HCharacter chi = character_h(g);
        EXPECT_EQ(chi.chi0, 1);
        EXPECT_EQ(chi.chi1, 1);
        AltPair F{{0, 2, 3, 5, 7, 11}, {13, 17, 19, 23, 29, 31}};
        EXPECT_TRUE(fixes(g, F));
    }
}

TEST(CharacterH, RejectsNonParabolic)
{
    HElement g;
    g.g1 = qmat2(1, 0, 1, 1);
    EXPECT_THROW(character_h(g), domain_error);
    HElement h;
    h.p(3, 0) = 1;
    EXPECT_THROW(character_h(h), domain_error);
}

TEST(CharacterH, ConsistentOnRandomElements)
{
    auto r = verify::altpair_characters();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(CanonicalW, Examples)
{
    AltPair w4 = canonical_w(-4);
    EXPECT_EQ(w4.first, (Alt4{0, 0, 1, -1, 0, 0}));
    EXPECT_EQ(w4.second, (Alt4{1, 1, 0, 0, 1, 0}));
    AltPair w23 = canonical_w(-23);
    EXPECT_EQ(w23.first, (Alt4{0, 0, 1, -1, -1, 0}));
    EXPECT_EQ(w23.second, (Alt4{1, 1, 1, -1, 5, 0})); // -(D+3)/4 with (D+3)/4 = -5
    EXPECT_EQ(qform_pair(w4).discriminant(), -4);
    EXPECT_EQ(qform_pair(w23).discriminant(), -23);
    EXPECT_TRUE(in_w(w4));
    EXPECT_TRUE(in_w0(w23));
    EXPECT_THROW(canonical_w(-5), domain_error);
}

TEST(CanonicalW, DiscriminantForAllSmallFundamental)
{
    auto r = verify::canonical_w_disc();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(StabilizerElement, IdentityParameters)
{
    HElement g = stabilizer_element(-4, 1, 0, 1);
    EXPECT_EQ(g.g1, QMat2::identity());
    EXPECT_EQ(g.p, QMat4::identity());
    EXPECT_TRUE(fixes(g, canonical_w(-4)));
    EXPECT_THROW(stabilizer_element(-4, 0, 1, 1), domain_error);
    EXPECT_THROW(stabilizer_element(-4, 1, 1, 2), domain_error);
}

TEST(StabilizerElement, DisplayedFamilyFixesWMinus4)
{
    EXPECT_TRUE(fixes(stabilizer_element(-4, 2, 3, 1), canonical_w(-4)));
}

TEST(StabilizerElement, DisplayedFamilyFixesWMinus23)
{
    EXPECT_TRUE(fixes(stabilizer_element(-23, Rational(1, 2), -1, -1), canonical_w(-23)));
}

TEST(StabilizerElement, DisplayedFamilyRandom)
{
    auto r = verify::displayed_stabilizer(20);
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(StabilizerElement, DisplayedFamilyClosedUnderProducts)
{
    HElement x = stabilizer_element(-4, 2, 3, 1), y = stabilizer_element(-4, 3, 5, 1);
    HElement xy = x * y;
    Rational a3 = xy.p(0, 0), b3 = xy.p(0, 1);
    HElement expected = stabilizer_element(-4, a3, b3, 1);
    EXPECT_EQ(xy.p, expected.p);
    EXPECT_EQ(xy.g1, expected.g1);
}

TEST(DerivedStabilizer, FixesWAndClosesUnderProducts)
{
    auto r = verify::derived_stabilizer();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(DerivedStabilizer, ParamsRoundTrip)
{
    HElement g = derived_stabilizer_element(-23, Rational(2), Rational(1, 3), Rational(5));
    auto p = derived_stabilizer_params(-23, g);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->a1, 2);
    EXPECT_EQ(p->a3, Rational(1, 3));
    EXPECT_EQ(p->s, 5);
    EXPECT_FALSE(derived_stabilizer_params(-23, stabilizer_element(-23, 2, 3, 1)).has_value());
    HElement id = derived_stabilizer_element(-4, 1, 1, 0);
    EXPECT_EQ(id.g1, QMat2::identity());
    EXPECT_EQ(id.p, QMat4::identity());
}
