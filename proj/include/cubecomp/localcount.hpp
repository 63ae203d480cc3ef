#ifndef CUBECOMP_LOCALCOUNT_HPP
#define CUBECOMP_LOCALCOUNT_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace cubecomp {

/// Moduli up to this size are counted by exhaustive scan.
inline constexpr std::int64_t sqrt_scan_guard = 100'000'000;

/// #{x in [0, m) : x^2 = D (mod m)} by direct scan; m <= sqrt_scan_guard.
inline BigInt sqrt_count_scan(BigInt const & D, BigInt const & m)
{
    if (m < 1)
        throw domain_error("sqrt_count: modulus must be positive");
    if (m > sqrt_scan_guard)
        throw domain_error("sqrt_count_scan: modulus " + m.str() + " exceeds the scan guard");
    auto const mm = m.convert_to<std::int64_t>();
    auto const target = mod_floor(D, m).convert_to<std::int64_t>();
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < mm; ++x)
        if ((x * x) % mm == target)
            ++count;
    return count;
}

namespace detail {

inline BigInt powm(BigInt const & base, BigInt const & exponent, BigInt const & mod)
{
    return boost::multiprecision::powm(mod_floor(base, mod), exponent, mod);
}

/// Square root of a quadratic residue u modulo an odd prime p (Tonelli-Shanks).
inline BigInt sqrt_mod_prime(BigInt const & u, BigInt const & p)
{
    BigInt n = mod_floor(u, p);
    if (n == 0)
        return 0;
    if (p % 4 == 3)
        return powm(n, (p + 1) / 4, p);
    BigInt q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    BigInt z = 2;
    while (jacobi(z, p) != -1)
        ++z;
    BigInt c = powm(z, q, p);
    BigInt x = powm(n, (q + 1) / 2, p);
    BigInt t = powm(n, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        BigInt t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        BigInt b = powm(c, BigInt(1) << (m - i - 1), p);
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

/// Inverse of a modulo m (gcd(a, m) = 1).
inline BigInt inverse_mod(BigInt const & a, BigInt const & m)
{
    ExtendedGcd eg = extended_gcd(mod_floor(a, m), m);
    if (eg.g != 1)
        throw domain_error("inverse_mod: not invertible");
    return mod_floor(eg.x, m);
}

} // namespace detail

/// All roots of x^2 = u (mod p^k) for a unit u, by lifting roots mod p
/// (or mod 8 when p = 2) one power of p at a time.
inline std::vector<BigInt> hensel_sqrt_roots(BigInt const & u, BigInt const & p, unsigned k)
{
    if (k == 0)
        return {0};
    if (u % p == 0)
        throw domain_error("hensel_sqrt_roots: argument must be a unit mod p");
    std::set<BigInt> roots;
    if (p == 2) {
        if (k <= 3) {
            BigInt mod = BigInt(1) << k;
            for (BigInt x = 0; x < mod; ++x)
                if (mod_floor(x * x - u, mod) == 0)
                    roots.insert(x);
            return {roots.begin(), roots.end()};
        }
        if (mod_floor(u, 8) != 1)
            return {};
        // x^2 = u (2^j), j >= 3: one of x, x + 2^(j-1) is a root mod 2^(j+1)
        BigInt x = 1;
        for (unsigned j = 3; j < k; ++j)
            if (mod_floor(x * x - u, BigInt(1) << (j + 1)) != 0)
                x += BigInt(1) << (j - 1);
        BigInt mod = BigInt(1) << k;
        BigInt half = mod / 2;
        for (BigInt y : {x, BigInt(-x), BigInt(x + half), BigInt(half - x)})
            roots.insert(mod_floor(y, mod));
        return {roots.begin(), roots.end()};
    }
    if (jacobi(u, p) != 1)
        return {};
    BigInt x = detail::sqrt_mod_prime(u, p);
    BigInt mod = p;
    // Newton step x <- x - (x^2 - u) / (2x) mod p^(j+1)
    for (unsigned j = 1; j < k; ++j) {
        mod *= p;
        BigInt correction = mod_floor((x * x - u) * detail::inverse_mod(2 * x, mod), mod);
        x = mod_floor(x - correction, mod);
    }
    roots.insert(x);
    roots.insert(mod_floor(-x, mod));
    return {roots.begin(), roots.end()};
}

/// #{x mod p^e : x^2 = D mod p^e}.
inline BigInt sqrt_count_prime_power(BigInt const & D, BigInt const & p, unsigned e)
{
    if (e == 0)
        return 1;
    BigInt const pe = pow_big(p, e);
    BigInt const r = mod_floor(D, pe);
    if (r == 0)
        return pow_big(p, e / 2);
    unsigned v = padic_valuation(r, p);
    if (v % 2 == 1)
        return 0;
    unsigned t = v / 2;
    BigInt unit = r / pow_big(p, v);
    // x = p^t y with y mod p^(e-t); y^2 = unit mod p^(e-2t)
    return pow_big(p, t) * BigInt(hensel_sqrt_roots(unit, p, e - 2 * t).size());
}

/// Trial-division factorization of m >= 1.
inline std::vector<std::pair<BigInt, unsigned>> factor(BigInt m)
{
    if (m < 1)
        throw domain_error("factor: argument must be positive");
    std::vector<std::pair<BigInt, unsigned>> out;
    for (BigInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (m > 1)
        out.emplace_back(m, 1);
    return out;
}

/// CRT product of prime-power counts.
inline BigInt sqrt_count_fast(BigInt const & D, BigInt const & m)
{
    if (m < 1)
        throw domain_error("sqrt_count: modulus must be positive");
    BigInt total = 1;
    for (auto const & [p, e] : factor(m))
        total *= sqrt_count_prime_power(D, p, e);
    return total;
}

/// #{x in [0, m) : x^2 = D (mod m)}: scan up to the guard, CRT + Hensel beyond.
inline BigInt sqrt_count_mod(BigInt const & D, BigInt const & m)
{
    if (m < 1)
        throw domain_error("sqrt_count_mod: modulus must be positive (got " + m.str() + ")");
    if (m <= sqrt_scan_guard)
        return sqrt_count_scan(D, m);
    return sqrt_count_fast(D, m);
}

/// Number of local orbits with unit constraints: #roots of x^2 = D mod 4 p^k.
inline BigInt local_orbit_count(BigInt const & D, BigInt const & p, unsigned k)
{
    if (!is_prime(p))
        throw domain_error("local_orbit_count: " + p.str() + " is not prime");
    return sqrt_count_mod(D, 4 * pow_big(p, k));
}

/// (1 - chi_D(p)/p)^-1 for the quadratic character of discriminant D.
inline Rational euler_factor_chi(BigInt const & D, BigInt const & p)
{
    if (!is_fundamental_discriminant(D))
        throw domain_error("euler_factor_chi: " + D.str() + " is not a fundamental discriminant");
    if (!is_prime(p))
        throw domain_error("euler_factor_chi: " + p.str() + " is not prime");
    int chi = kronecker(D, p);
    return Rational(p, p - chi);
}

} // namespace cubecomp

#endif // CUBECOMP_LOCALCOUNT_HPP
