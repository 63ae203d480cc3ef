#include <gtest/gtest.h>

#include <cubecomp/cube.hpp>
#include <cubecomp/oracle.hpp>
#include <cubecomp/verify.hpp>

using namespace cubecomp;

namespace {

Cube const sample{1, 0, 0, 1, 0, 1, 1, 0};
Cube const zero{0, 0, 0, 0, 0, 0, 0, 0};

} // namespace

TEST(Slice, Examples)
{
    auto [M, N] = slice(Cube{1, 0, 0, 0, 0, 0, 0, 0}, 1);
    EXPECT_EQ(M, mat2(1, 0, 0, 0));
    EXPECT_EQ(N, mat2(0, 0, 0, 0));
    std::tie(M, N) = slice(sample, 1);
    EXPECT_EQ(M, IMat2::identity());
    EXPECT_EQ(N, mat2(0, 1, 1, 0));
    std::tie(M, N) = slice(sample, 2);
    EXPECT_EQ(M, IMat2::identity());
    EXPECT_EQ(N, mat2(0, 1, 1, 0));
}

TEST(Slice, LayoutOfAllThree)
{
    Cube A{1, 2, 3, 4, 5, 6, 7, 8};
    EXPECT_EQ(slice(A, 1).first, mat2(1, 2, 3, 4));
    EXPECT_EQ(slice(A, 1).second, mat2(5, 6, 7, 8));
    EXPECT_EQ(slice(A, 2).first, mat2(1, 5, 3, 7));
    EXPECT_EQ(slice(A, 2).second, mat2(2, 6, 4, 8));
    EXPECT_EQ(slice(A, 3).first, mat2(1, 5, 2, 6));
    EXPECT_EQ(slice(A, 3).second, mat2(3, 7, 4, 8));
    EXPECT_THROW(slice(A, 0), domain_error);
    EXPECT_THROW(slice(A, 4), domain_error);
}

TEST(QForm, Examples)
{
    EXPECT_EQ(qform(sample, 1), (BQF{-1, 0, 1}));
    EXPECT_EQ(qform(sample, 2), (BQF{-1, 0, 1}));
    EXPECT_EQ(qform(zero, 1), (BQF{0, 0, 0}));
    EXPECT_EQ(qform(zero, 3), (BQF{0, 0, 0}));
}

TEST(QForm, ClosedFormulasMatchDeterminant)
{
    auto r = verify::cube_closed_vs_determinant();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Invariant, Examples)
{
    EXPECT_EQ(invariant(sample), 4);
    EXPECT_EQ(invariant(zero), 0);
    EXPECT_EQ(invariant(cube_from_pair({2, 1, 3}, {2, -1, 3})), -23);
}

TEST(Invariant, SlicingDiscriminantsAgree)
{
    auto r = verify::cube_disc_agreement();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Act, Examples)
{
    EXPECT_EQ(act(sample, CubeTriple{}), sample);
    CubeTriple t;
    t.g1 = mat2(1, 1, 0, 1);
    EXPECT_EQ(act(sample, t), (Cube{1, 0, 0, 1, 1, 1, 1, 1}));
}

TEST(Act, FactorsCommuteAndCompose)
{
    verify::Sampler s(7);
    for (int k = 0; k < 200; ++k) {
        Cube A = s.cube(9);
        CubeTriple x{s.mat(3, true), s.mat(3, true), s.mat(3, true)};
        CubeTriple y{s.mat(3, true), s.mat(3, true), s.mat(3, true)};
        CubeTriple xy{x.g1 * y.g1, x.g2 * y.g2, x.g3 * y.g3};
        EXPECT_EQ(act(act(A, x), y), act(A, xy));
        CubeTriple only1{x.g1, IMat2::identity(), IMat2::identity()};
        CubeTriple only3{IMat2::identity(), IMat2::identity(), x.g3};
        EXPECT_EQ(act(act(A, only1), only3), act(act(A, only3), only1));
    }
}

TEST(Character, Examples)
{
    EXPECT_EQ(character(CubeTriple{}), 1);
    CubeTriple t;
    t.g1 = mat2(2, 0, 0, 1);
    EXPECT_EQ(character(t), 4);
    IMat2 flip = mat2(1, 0, 0, -1);
    EXPECT_EQ(character(CubeTriple{flip, flip, flip}), 1);
}

TEST(Character, Equivariance)
{
    auto r = verify::cube_equivariance();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Character, UnitDeterminantProductPreservesInvariant)
{
    verify::Sampler s(8);
    for (int k = 0; k < 200; ++k) {
        Cube A = s.cube(20);
        CubeTriple t{s.sl2(5), mat2(0, 1, 1, 0), mat2(1, 0, 0, -1)};
        EXPECT_EQ(invariant(act(A, t)), invariant(A));
    }
}

TEST(Classes, InvariantUnderSl2Cubed)
{
    auto r = verify::cube_class_invariance();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(TripleLaw, Examples)
{
    Cube A = cube_from_pair({2, 1, 3}, {2, -1, 3});
    EXPECT_TRUE(triple_law_check(A));
    Cube B = cube_from_pair({1, 0, 1}, {1, 0, 1});
    EXPECT_TRUE(triple_law_check(B));
    verify::Sampler s(9);
    for (int k = 0; k < 20; ++k) {
        EXPECT_TRUE(triple_law_check(act(A, {s.sl2(8), s.sl2(8), s.sl2(8)})));
        EXPECT_TRUE(triple_law_check(act(B, {s.sl2(8), s.sl2(8), s.sl2(8)})));
    }
}

TEST(TripleLaw, SignTwistsKeepLaw)
{
    Cube A = cube_from_pair({2, 1, 3}, {2, 1, 3});
    IMat2 flip = mat2(1, 0, 0, -1);
    EXPECT_TRUE(triple_law_check(act(A, {flip, IMat2::identity(), IMat2::identity()})));
    EXPECT_TRUE(triple_law_check(act(A, {IMat2::identity(), flip, flip})));
}

TEST(TripleLaw, RefusesDegenerateCubes)
{
    EXPECT_THROW(triple_law_check(sample), domain_error);                     // P = 4
    EXPECT_THROW(triple_law_check(zero), domain_error);                       // P = 0
    EXPECT_THROW(triple_law_check(Cube{0, 2, 2, 0, 2, 0, 0, -2}), domain_error); // imprimitive
}

TEST(TripleLaw, AllPairsAndTranslates)
{
    auto r = verify::cube_triple_law();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(CubeFromPair, Examples)
{
    Cube A = cube_from_pair({1, 0, 1}, {1, 0, 1});
    EXPECT_EQ(invariant(A), -4);
    for (int i = 1; i <= 3; ++i)
        EXPECT_EQ(reduced(oriented_form(qform(A, i))), (BQF{1, 0, 1}));

    Cube B = cube_from_pair({2, 1, 3}, {2, 1, 3});
    EXPECT_EQ(invariant(B), -23);
    EXPECT_EQ(reduced(qform(B, 1)), (BQF{2, 1, 3}));
    EXPECT_EQ(reduced(qform(B, 2)), (BQF{2, 1, 3}));
    EXPECT_EQ(reduced(qform(B, 3)), (BQF{2, 1, 3}));
}

TEST(CubeFromPair, Postconditions)
{
    for (int D : {-3, -4, -7, -8, -15, -20, -23, -47, -84, -104, -199, -420}) {
        auto reps = reduced_forms(D);
        for (auto const & f1 : reps) {
            for (auto const & f2 : reps) {
                Cube A = cube_from_pair(f1, f2);
                EXPECT_EQ(invariant(A), D);
                EXPECT_EQ(reduced(qform(A, 2)), f1);
                EXPECT_EQ(reduced(qform(A, 3)), f2);
                EXPECT_EQ(reduced(qform(A, 1)), inverse(compose(f1, f2)));
            }
        }
    }
}

TEST(CubeFromPair, Errors)
{
    EXPECT_THROW(cube_from_pair({1, 1, 6}, {1, 0, 1}), domain_error);
    EXPECT_THROW(cube_from_pair({2, 2, 2}, {1, 1, 3}), domain_error);
    EXPECT_THROW(cube_from_pair({1, 3, 1}, {1, 3, 1}), domain_error);
}

TEST(CubeFromPair, PairCountIsHSquared)
{
    auto r = verify::cube_pair_count();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(OrbitReduce, ZeroCube)
{
    OrbitResult r = orbit_reduce(zero, 50);
    EXPECT_TRUE(r.conclusive);
    EXPECT_EQ(r.cube, zero);
    EXPECT_EQ(r.states, 1u);
}

TEST(OrbitReduce, MinimalCubeIsFixedPoint)
{
    Cube A = cube_from_pair({1, 1, 1}, {1, 1, 1});
    OrbitResult r = orbit_reduce(A, 5);
    ASSERT_TRUE(r.conclusive);
    OrbitResult again = orbit_reduce(r.cube, 5);
    ASSERT_TRUE(again.conclusive);
    EXPECT_EQ(again.cube, r.cube);
    EXPECT_FALSE(A < r.cube);
}

TEST(OrbitReduce, TranslatesShareCanonicalForm)
{
    auto r = verify::cube_orbit_reduce();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(OrbitReduce, InconclusiveCases)
{
    Cube A = cube_from_pair({1, 1, 1}, {1, 1, 1});
    EXPECT_FALSE(orbit_reduce(A, 50, 100'000).conclusive);
    EXPECT_FALSE(orbit_reduce(Cube{100, 0, 0, 0, 0, 0, 0, 0}, 50).conclusive);
    OrbitResult r = orbit_reduce(A, 50, 100'000);
    EXPECT_EQ(r.cube, A);
}
