#ifndef CUBECOMP_CUBE_HPP
#define CUBECOMP_CUBE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "arith.hpp"
#include "bqf.hpp"

namespace cubecomp {

/// 2x2x2 integral cube. Entry (i, j, k) in binary order: a=000, b=001, c=010,
/// d=011, e=100, f=101, g=110, h=111.
struct Cube {
    BigInt a, b, c, d, e, f, g, h;

    std::array<BigInt, 8> entries() const { return {a, b, c, d, e, f, g, h}; }

    static Cube from_entries(std::array<BigInt, 8> const & v)
    {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }

    friend bool operator==(Cube const & x, Cube const & y) { return x.entries() == y.entries(); }
    friend bool operator!=(Cube const & x, Cube const & y) { return !(x == y); }
    friend bool operator<(Cube const & x, Cube const & y) { return x.entries() < y.entries(); }

    friend std::ostream & operator<<(std::ostream & o, Cube const & A)
    {
        auto v = A.entries();
        o << "[";
        for (std::size_t i = 0; i < 8; ++i)
            o << (i ? "," : "") << v[i];
        return o << "]";
    }
};

/// Element (g1, g2, g3) of GL2^3; g_i acts on the i-th slicing pair.
struct CubeTriple {
    IMat2 g1 = IMat2::identity();
    IMat2 g2 = IMat2::identity();
    IMat2 g3 = IMat2::identity();

    IMat2 const & factor(int i) const { return i == 1 ? g1 : (i == 2 ? g2 : g3); }
};

namespace detail {

// Positions of (M00, M01, M10, M11, N00, N01, N10, N11) of slicing i inside
// the entry array (a, ..., h).
inline constexpr std::array<std::array<std::size_t, 8>, 3> slice_positions{{
    {0, 1, 2, 3, 4, 5, 6, 7}, // M1 = (a b; c d), N1 = (e f; g h)
    {0, 4, 2, 6, 1, 5, 3, 7}, // M2 = (a e; c g), N2 = (b f; d h)
    {0, 4, 1, 5, 2, 6, 3, 7}, // M3 = (a e; b f), N3 = (c g; d h)
}};

inline void check_slice_index(int i)
{
    if (i < 1 || i > 3)
        throw domain_error("slice index must be 1, 2 or 3");
}

/// (M, N) . g = (g11 M + g21 N, g12 M + g22 N) on slicing i, in place.
template <class T, class G>
void apply_slice(std::array<T, 8> & v, int i, G const & g11, G const & g12, G const & g21, G const & g22)
{
    auto const & pos = slice_positions[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < 4; ++k) {
        T & m = v[pos[k]];
        T & n = v[pos[k + 4]];
        T m2 = g11 * m + g21 * n;
        T n2 = g12 * m + g22 * n;
        m = std::move(m2);
        n = std::move(n2);
    }
}

} // namespace detail

/// (M_A^i, N_A^i).
inline std::pair<IMat2, IMat2> slice(Cube const & A, int i)
{
    detail::check_slice_index(i);
    auto v = A.entries();
    auto const & p = detail::slice_positions[static_cast<std::size_t>(i - 1)];
    return {mat2(v[p[0]], v[p[1]], v[p[2]], v[p[3]]), mat2(v[p[4]], v[p[5]], v[p[6]], v[p[7]])};
}

/// Q_A^i(u, v) = -det(M_A^i u - N_A^i v), by the closed coefficient formulas.
inline BQF qform(Cube const & A, int i)
{
    detail::check_slice_index(i);
    auto const & [a, b, c, d, e, f, g, h] = A;
    switch (i) {
    case 1:
        return {-(a * d - b * c), -(-a * h + b * g + c * f - d * e), -(e * h - f * g)};
    case 2:
        return {-(a * g - c * e), -(-a * h - b * g + c * f + d * e), -(b * h - d * f)};
    default:
        return {-(a * f - b * e), -(-a * h + b * g - c * f + d * e), -(c * h - d * g)};
    }
}

/// Relative invariant P(A) = disc(Q_A^1) (= disc(Q_A^2) = disc(Q_A^3)).
inline BigInt invariant(Cube const & A)
{
    BigInt p = qform(A, 1).discriminant();
    if (qform(A, 2).discriminant() != p || qform(A, 3).discriminant() != p)
        throw std::logic_error("cube invariant: slicing discriminants disagree");
    return p;
}

inline Cube act(Cube const & A, CubeTriple const & t)
{
    auto v = A.entries();
    for (int i = 1; i <= 3; ++i) {
        IMat2 const & g = t.factor(i);
        detail::apply_slice(v, i, g(0, 0), g(0, 1), g(1, 0), g(1, 1));
    }
    return Cube::from_entries(v);
}

/// chi(t) = det(g1)^2 det(g2)^2 det(g3)^2.
inline BigInt character(CubeTriple const & t)
{
    BigInt d = det(t.g1) * det(t.g2) * det(t.g3);
    return d * d;
}

/// All three forms primitive.
inline bool is_projective(Cube const & A)
{
    return qform(A, 1).is_primitive() && qform(A, 2).is_primitive() && qform(A, 3).is_primitive();
}

/// Positive definite representative attached to a definite form: the form
/// itself, or (-a, b, -c) for a negative definite one. A det = -1 twist on one
/// factor negates the other two forms and inverts the class of its own, so
/// this choice keeps the triple law invariant under GL2^3 sign twists.
inline BQF oriented_form(BQF const & q)
{
    if (q.a > 0)
        return q;
    return {-q.a, q.b, -q.c};
}

/// Q^1 o Q^2 o Q^3 is the principal class.
inline bool triple_law_check(Cube const & A)
{
    BigInt P = invariant(A);
    if (P >= 0)
        throw domain_error("triple_law_check: cube discriminant " + P.str() + " is not negative");
    if (!is_projective(A))
        throw domain_error("triple_law_check: cube is not projective (some slicing form is imprimitive)");
    BQF q1 = oriented_form(qform(A, 1));
    BQF q2 = oriented_form(qform(A, 2));
    BQF q3 = oriented_form(qform(A, 3));
    return compose(q1, compose(q2, q3)) == principal_form(P);
}

namespace detail {

/// A form equivalent to f whose first coefficient is coprime to m.
inline BQF with_leading_coprime_to(BQF const & f, BigInt const & m)
{
    if (gcd_big(f.a, m) == 1)
        return f;
    for (BigInt radius = 1;; ++radius) {
        for (BigInt x = -radius; x <= radius; ++x) {
            for (BigInt y : std::array<BigInt, 2>{-radius, radius}) {
                for (int flip = 0; flip < 2; ++flip) {
                    BigInt const & u = flip ? y : x;
                    BigInt const & w = flip ? x : y;
                    if (gcd_big(u, w) != 1)
                        continue;
                    if (gcd_big(f(u, w), m) != 1)
                        continue;
                    ExtendedGcd eg = extended_gcd(u, w);
                    // columns (u, w) and (-y', x') with u x' + w y' = 1
                    return act(f, mat2(u, -eg.y, w, eg.x));
                }
            }
        }
    }
}

} // namespace detail

/// Cube with Q^2 ~ f1, Q^3 ~ f2 and Q^1 ~ (f1 o f2)^-1, P = disc(f1).
///
/// Moves f1, f2 to united forms (a1, B, a2 C), (a2, B, a1 C) with
/// gcd(a1, a2) = 1 and emits
///     a = 0, b = a2, c = a1, d = -B, e = 1, f = g = 0, h = -C,
/// whose forms are read back and checked.
inline Cube cube_from_pair(BQF const & f1, BQF const & f2)
{
    if (!f1.is_positive_definite() || !f2.is_positive_definite())
        throw domain_error("cube_from_pair: forms must be positive definite");
    BigInt const D = f1.discriminant();
    if (f2.discriminant() != D)
        throw domain_error("cube_from_pair: discriminants differ (" + D.str() + " vs " + f2.discriminant().str() + ")");
    if (!f1.is_primitive() || !f2.is_primitive())
        throw domain_error("cube_from_pair: forms must be primitive");

    BQF const p = reduced(f1);
    BQF const q = detail::with_leading_coprime_to(reduced(f2), p.a);
    BigInt const & a1 = p.a;
    BigInt const & a2 = q.a;

    // B = b1 (mod 2 a1), B = b2 (mod 2 a2)
    ExtendedGcd eg = extended_gcd(a1, a2);
    BigInt k = mod_floor(eg.x * ((q.b - p.b) / 2), a2);
    BigInt B = p.b + 2 * a1 * k;
    BigInt num = B * B - D;
    if (num % (4 * a1 * a2) != 0)
        throw std::logic_error("cube_from_pair: united-form congruence failed");
    BigInt C = num / (4 * a1 * a2);

    Cube A{0, a2, a1, -B, 1, 0, 0, -C};

    if (reduced(qform(A, 2)) != p || reduced(qform(A, 3)) != reduced(f2)
        || reduced(qform(A, 1)) != inverse(compose(f1, f2)))
        throw std::logic_error("cube_from_pair: postcondition failed");
    return A;
}

struct OrbitResult {
    bool conclusive = false;
    Cube cube;              // lexicographic minimum found (the input if inconclusive)
    std::size_t states = 0; // distinct cubes visited
};

/// Lexicographically smallest cube in the connected component of A under the
/// elementary SL2 moves (T^{+-1}, L^{+-1}, S^{+-1} on each factor) with every
/// entry bounded by `bound` in absolute value. Inconclusive when the start
/// violates the bound or the component has more than `budget` cubes.
inline OrbitResult orbit_reduce(Cube const & A, BigInt const & bound, std::size_t budget = 2'000'000)
{
    OrbitResult res;
    res.cube = A;
    // entries stay below 2^41 in magnitude, far from int64 overflow
    if (bound < 0 || bound > (BigInt(1) << 40))
        return res;
    auto const limit = bound.convert_to<std::int64_t>();
    using State = std::array<std::int64_t, 8>;
    State start{};
    auto v = A.entries();
    for (std::size_t i = 0; i < 8; ++i) {
        if (abs_big(v[i]) > bound)
            return res;
        start[i] = v[i].convert_to<std::int64_t>();
    }
    struct StateHash {
        std::size_t operator()(State const & s) const noexcept
        {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (auto x : s)
                h = (h ^ static_cast<std::uint64_t>(x)) * 0x100000001b3ULL + (h >> 29);
            return static_cast<std::size_t>(h);
        }
    };
    static constexpr std::array<std::array<std::int64_t, 4>, 6> moves{{
        {1, 1, 0, 1}, {1, -1, 0, 1}, {1, 0, 1, 1}, {1, 0, -1, 1}, {0, -1, 1, 0}, {0, 1, -1, 0},
    }};
    std::unordered_set<State, StateHash> seen{start};
    std::deque<State> queue{start};
    State best = start;
    while (!queue.empty()) {
        State cur = queue.front();
        queue.pop_front();
        for (int i = 1; i <= 3; ++i) {
            for (auto const & m : moves) {
                State next = cur;
                detail::apply_slice(next, i, m[0], m[1], m[2], m[3]);
                bool inside = std::all_of(next.begin(), next.end(),
                                          [limit](std::int64_t x) { return x <= limit && x >= -limit; });
                if (!inside || !seen.insert(next).second)
                    continue;
                if (seen.size() > budget) {
                    res.states = seen.size();
                    return res;
                }
                best = std::min(best, next);
                queue.push_back(next);
            }
        }
    }
    res.conclusive = true;
    res.states = seen.size();
    std::array<BigInt, 8> out;
    for (std::size_t i = 0; i < 8; ++i)
        out[i] = best[i];
    res.cube = Cube::from_entries(out);
    return res;
}

} // namespace cubecomp

#endif // CUBECOMP_CUBE_HPP
