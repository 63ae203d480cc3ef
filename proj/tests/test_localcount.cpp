#include <gtest/gtest.h>

#include <cubecomp/localcount.hpp>
#include <cubecomp/oracle.hpp>
#include <cubecomp/verify.hpp>

using namespace cubecomp;

TEST(SqrtCount, Examples)
{
    EXPECT_EQ(sqrt_count_mod(-3, 4), 2);
    EXPECT_EQ(sqrt_count_mod(-4, 12), 0);
    EXPECT_EQ(sqrt_count_mod(-23, 12), 4);
}

TEST(SqrtCount, RejectsZeroModulus)
{
    EXPECT_THROW(sqrt_count_mod(-3, 0), domain_error);
    EXPECT_THROW(sqrt_count_fast(-3, 0), domain_error);
}

TEST(SqrtCount, ScanGuard)
{
    EXPECT_THROW(sqrt_count_scan(-3, BigInt(sqrt_scan_guard) + 1), domain_error);
}

TEST(SqrtCount, FastPathBeyondGuard)
{
    // 4 * 10007^2 is above the scan guard; CRT gives 2 * (1 + (-23 | 10007))
    BigInt p = 10007;
    BigInt m = 4 * p * p;
    ASSERT_GT(m, sqrt_scan_guard);
    EXPECT_EQ(sqrt_count_mod(-23, m), 2 * (1 + kronecker(-23, p)));
    EXPECT_EQ(sqrt_count_mod(-23, m), sqrt_count_fast(-23, m));
    // powers of two: x^2 = 1 mod 2^k has 4 roots for k >= 3
    EXPECT_EQ(sqrt_count_mod(1, BigInt(1) << 40), 4);
    EXPECT_EQ(sqrt_count_mod(-7, BigInt(1) << 40), 4);
    EXPECT_EQ(sqrt_count_mod(-3, BigInt(1) << 40), 0);
    EXPECT_EQ(sqrt_count_mod(0, BigInt(1) << 40), BigInt(1) << 20);
}

TEST(SqrtCount, FastPathMatchesScan)
{
    auto r = verify::localcount_fast_vs_scan();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(HenselRoots, AreRoots)
{
    for (int p : {2, 3, 5, 7, 13}) {
        for (unsigned k = 1; k <= 6; ++k) {
            BigInt m = pow_big(p, k);
            for (int u = 1; u < 60; ++u) {
                if (u % p == 0)
                    continue;
                auto roots = hensel_sqrt_roots(u, p, k);
                for (auto const & x : roots)
                    EXPECT_EQ(mod_floor(x * x - u, m), 0);
                EXPECT_EQ(BigInt(roots.size()), oracle::sqrt_count_bruteforce(u, m.convert_to<std::int64_t>()));
            }
        }
    }
}

TEST(LocalOrbitCount, Examples)
{
    EXPECT_EQ(local_orbit_count(-23, 3, 1), 4);
    EXPECT_EQ(local_orbit_count(-4, 3, 1), 0);
    for (int D : {-3, -4, -7, -23, -47})
        EXPECT_EQ(local_orbit_count(D, 5, 0), sqrt_count_mod(D, 4));
    EXPECT_THROW(local_orbit_count(-23, 4, 1), domain_error);
}

TEST(LocalOrbitCount, CrtLaw)
{
    auto r = verify::local_orbit_law();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(LocalCount, HenselCharacterCrt)
{
    auto r = verify::localcount_laws();
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(EulerFactor, Examples)
{
    EXPECT_EQ(euler_factor_chi(-4, 3), Rational(3, 4));
    EXPECT_EQ(euler_factor_chi(-3, 3), 1);
    EXPECT_EQ(euler_factor_chi(-23, 2), 2);
}

TEST(EulerFactor, Errors)
{
    EXPECT_THROW(euler_factor_chi(-12, 5), domain_error);
    EXPECT_THROW(euler_factor_chi(-23, 9), domain_error);
}
