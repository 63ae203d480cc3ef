#ifndef CUBECOMP_ORACLE_HPP
#define CUBECOMP_ORACLE_HPP

// Slow independent reference implementations used by the property suite and
// the tests. Nothing here is used by the library proper.

#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "altpair.hpp"
#include "arith.hpp"
#include "bqf.hpp"
#include "cube.hpp"

namespace cubecomp::oracle {

/// Element (X + Y sqrt(D)) / 2 of the order of discriminant D.
struct QuadElt {
    BigInt X, Y;
};

inline QuadElt mul(QuadElt const & p, QuadElt const & q, BigInt const & D)
{
    return {(p.X * q.X + p.Y * q.Y * D) / 2, (p.X * q.Y + p.Y * q.X) / 2};
}

/// Composition through ideals: (a, b, c) <-> [a, (-b + sqrt D)/2]. The product
/// lattice is put in Hermite form, its content removed, and the form read off.
inline BQF compose_via_ideals(BQF const & f1, BQF const & f2)
{
    BigInt const D = f1.discriminant();
    std::vector<QuadElt> gens1{{2 * f1.a, 0}, {-f1.b, 1}};
    std::vector<QuadElt> gens2{{2 * f2.a, 0}, {-f2.b, 1}};
    std::vector<QuadElt> v;
    for (auto const & p : gens1)
        for (auto const & q : gens2)
            v.push_back(mul(p, q, D));
    // Euclid on the Y column
    for (;;) {
        std::size_t piv = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i].Y != 0 && (piv == v.size() || abs_big(v[i].Y) < abs_big(v[piv].Y)))
                piv = i;
        bool done = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i == piv || v[i].Y == 0)
                continue;
            done = false;
            BigInt q = v[i].Y / v[piv].Y;
            v[i].X -= q * v[piv].X;
            v[i].Y -= q * v[piv].Y;
        }
        if (done) {
            std::swap(v[0], v[piv]);
            break;
        }
    }
    if (v[0].Y < 0)
        v[0] = {-v[0].X, -v[0].Y};
    BigInt x0 = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        x0 = gcd_big(x0, v[i].X);
    BigInt const g = v[0].Y;
    BigInt const a = x0 / (2 * g);
    BigInt const b = -(v[0].X / g);
    BigInt const b_norm = mod_floor(b + a, 2 * a) - a; // any representative mod 2a
    return reduced({a, b_norm, (b_norm * b_norm - D) / (4 * a)});
}

/// Number of classes of primitive positive definite forms of discriminant D,
/// counted as connected components of the graph on forms with |a|, |b|, |c| <= H
/// under u -> u + v, u -> u - v and (u, v) -> (-v, u).
inline std::size_t class_count_by_moves(std::int64_t D, std::int64_t H)
{
    std::map<std::array<std::int64_t, 3>, std::size_t> id;
    std::vector<std::array<std::int64_t, 3>> forms;
    for (std::int64_t a = 1; a <= H; ++a) {
        for (std::int64_t b = -H; b <= H; ++b) {
            std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c > H || std::gcd(std::gcd(a, b), c) != 1)
                continue;
            id[{a, b, c}] = forms.size();
            forms.push_back({a, b, c});
        }
    }
    std::vector<std::size_t> parent(forms.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < forms.size(); ++i) {
        auto [a, b, c] = forms[i];
        std::array<std::array<std::int64_t, 3>, 3> nbrs{{
            {a, b + 2 * a, a + b + c},
            {a, b - 2 * a, a - b + c},
            {c, -b, a},
        }};
        for (auto const & n : nbrs) {
            auto it = id.find(n);
            if (it != id.end())
                parent[find(i)] = find(it->second);
        }
    }
    std::size_t comps = 0;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (find(i) == i)
            ++comps;
    return comps;
}

/// Q^i by evaluating -det(M u - N v) at (1,0), (0,1), (1,1).
inline BQF qform_by_determinant(Cube const & A, int i)
{
    auto [M, N] = slice(A, i);
    auto q = [&](BigInt const & u, BigInt const & v) { return -det(BigInt(u) * M + BigInt(-v) * N); };
    BigInt a = q(1, 0), c = q(0, 1);
    return {a, q(1, 1) - a - c, c};
}

/// Pfaffian from the matrix entries, normalised so that (0 I; -I 0) has value 1
/// (the negative of m01 m23 - m02 m13 + m03 m12).
template <class T>
T pfaffian_from_matrix(Mat<T, 4> const & m)
{
    return -(m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2));
}

/// Q_F(u, v) = -Pfaff(M u - N v) by evaluation at three points.
inline BQF qform_pair_by_pfaffian(AltPair const & F)
{
    IMat4 M = F.first.matrix(), N = F.second.matrix();
    auto q = [&](BigInt const & u, BigInt const & v) { return -pfaffian_from_matrix(u * M + BigInt(-v) * N); };
    BigInt a = q(1, 0), c = q(0, 1);
    return {a, q(1, 1) - a - c, c};
}

/// (D | p) for an odd prime p by brute force.
inline int kronecker_odd_prime(std::int64_t D, std::int64_t p)
{
    std::int64_t r = ((D % p) + p) % p;
    if (r == 0)
        return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r)
            return 1;
    return -1;
}

/// #{x mod m : x^2 = D mod m} by scanning.
inline std::int64_t sqrt_count_bruteforce(std::int64_t D, std::int64_t m)
{
    std::int64_t r = ((D % m) + m) % m, n = 0;
    for (std::int64_t x = 0; x < m; ++x)
        if (x * x % m == r)
            ++n;
    return n;
}

/// A reduced form reachable from f by words of length <= depth in T, T^-1, S;
/// nullopt if none is found.
inline std::optional<BQF> reduce_by_word_search(BQF const & f, int depth)
{
    std::set<BQF> seen{f};
    std::deque<std::pair<BQF, int>> queue{{f, 0}};
    std::vector<IMat2> gens{mat2(1, 1, 0, 1), mat2(1, -1, 0, 1), mat2(0, -1, 1, 0)};
    while (!queue.empty()) {
        auto [g, k] = queue.front();
        queue.pop_front();
        if (is_reduced(g))
            return g;
        if (k == depth)
            continue;
        for (auto const & m : gens) {
            BQF n = act(g, m);
            if (seen.insert(n).second)
                queue.push_back({n, k + 1});
        }
    }
    return std::nullopt;
}

/// c(n) from the definition: all forms (primitive or not) with 4ac - b^2 = n,
/// reduced, weighted 2/w of their primitive part.
inline Rational coeff_by_definition(std::int64_t n)
{
    Rational total = 0;
    for (std::int64_t a = 1; a * a <= n; ++a) {
        for (std::int64_t b = -a; b <= a; ++b) {
            std::int64_t num = b * b + n;
            if (num % (4 * a) != 0)
                continue;
            BQF f{a, b, num / (4 * a)};
            if (!is_reduced(f))
                continue;
            BigInt g = f.content();
            total += Rational(2, unit_count(-BigInt(n) / (g * g)));
        }
    }
    return total;
}

} // namespace cubecomp::oracle

#endif // CUBECOMP_ORACLE_HPP
