#ifndef CUBECOMP_ALTPAIR_HPP
#define CUBECOMP_ALTPAIR_HPP

#include <array>
#include <optional>
#include <ostream>
#include <utility>

#include "arith.hpp"
#include "bqf.hpp"
#include "cube.hpp"

namespace cubecomp {

/// Alternating 4x4 matrix
///     ( 0  r  a  b)
///     (-r  0  c  d)
///     (-a -c  0  l)
///     (-b -d -l  0)
template <class T>
struct BasicAlt4 {
    T r{}, a{}, b{}, c{}, d{}, l{};

    Mat<T, 4> matrix() const
    {
        Mat<T, 4> m;
        m(0, 1) = r;
        m(0, 2) = a;
        m(0, 3) = b;
        m(1, 2) = c;
        m(1, 3) = d;
        m(2, 3) = l;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < i; ++j)
                m(i, j) = -m(j, i);
        return m;
    }

    static BasicAlt4 from_matrix(Mat<T, 4> const & m)
    {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (m(i, j) != -m(j, i))
                    throw domain_error("matrix is not alternating");
        return {m(0, 1), m(0, 2), m(0, 3), m(1, 2), m(1, 3), m(2, 3)};
    }

    friend bool operator==(BasicAlt4 const & x, BasicAlt4 const & y)
    {
        return x.r == y.r && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.l == y.l;
    }
    friend bool operator!=(BasicAlt4 const & x, BasicAlt4 const & y) { return !(x == y); }

    friend std::ostream & operator<<(std::ostream & o, BasicAlt4 const & m)
    {
        return o << "(r=" << m.r << " a=" << m.a << " b=" << m.b << " c=" << m.c << " d=" << m.d << " l=" << m.l
                 << ")";
    }
};

/// F = (M_F, N_F); the second block's entries are r2, e, f, g, h, l2.
template <class T>
struct BasicAltPair {
    BasicAlt4<T> first, second;

    friend bool operator==(BasicAltPair const & x, BasicAltPair const & y)
    {
        return x.first == y.first && x.second == y.second;
    }
    friend bool operator!=(BasicAltPair const & x, BasicAltPair const & y) { return !(x == y); }

    friend std::ostream & operator<<(std::ostream & o, BasicAltPair const & F)
    {
        return o << "{" << F.first << ", " << F.second << "}";
    }
};

using Alt4 = BasicAlt4<BigInt>;
using QAlt4 = BasicAlt4<Rational>;
using AltPair = BasicAltPair<BigInt>;
using QAltPair = BasicAltPair<Rational>;

inline QAltPair to_rational(AltPair const & F)
{
    auto conv = [](Alt4 const & m) {
        return QAlt4{Rational(m.r), Rational(m.a), Rational(m.b), Rational(m.c), Rational(m.d), Rational(m.l)};
    };
    return {conv(F.first), conv(F.second)};
}

/// Pfaffian normalized so that Pfaff((0 I; -I 0)) = 1: ad - bc - rl.
template <class T>
T pfaffian(BasicAlt4<T> const & m)
{
    return m.a * m.d - m.b * m.c - m.r * m.l;
}

/// Coefficients of Q_F(u, v) = -Pfaff(M_F u - N_F v).
template <class T>
std::array<T, 3> qform_coefficients(BasicAltPair<T> const & F)
{
    auto const & M = F.first;
    auto const & N = F.second;
    return {-pfaffian(M), M.a * N.d + N.a * M.d - M.b * N.c - N.b * M.c - M.r * N.l - N.r * M.l, -pfaffian(N)};
}

inline BQF qform_pair(AltPair const & F)
{
    auto q = qform_coefficients(F);
    return {q[0], q[1], q[2]};
}

/// Skew-symmetrization Z^2 x Z^2 x Z^2 -> Z^2 x wedge^2 Z^4.
inline AltPair fuse(Cube const & A)
{
    return {{0, A.a, A.b, A.c, A.d, 0}, {0, A.e, A.f, A.g, A.h, 0}};
}

/// (M, N) . (g1, g2) = (s g2^t M g2 + u g2^t N g2, t g2^t M g2 + v g2^t N g2),
/// g1 = (s t; u v).
template <class T>
BasicAltPair<T> act_pair(BasicAltPair<T> const & F, Mat<T, 2> const & g1, Mat<T, 4> const & g2)
{
    Mat<T, 4> const g2t = transpose(g2);
    Mat<T, 4> const M = g2t * F.first.matrix() * g2;
    Mat<T, 4> const N = g2t * F.second.matrix() * g2;
    return {BasicAlt4<T>::from_matrix(g1(0, 0) * M + g1(1, 0) * N),
            BasicAlt4<T>::from_matrix(g1(0, 1) * M + g1(1, 1) * N)};
}

/// r1 = 0.
template <class T>
bool in_w(BasicAltPair<T> const & F)
{
    return F.first.r == 0;
}

/// r1 = 0 and a = 0.
template <class T>
bool in_w0(BasicAltPair<T> const & F)
{
    return F.first.r == 0 && F.first.a == 0;
}

struct HInvariants {
    BigInt disc; // disc(Q_F)
    BigInt p0;   // r2(F)
    BigInt p1;   // -Pfaff(M_F)

    friend bool operator==(HInvariants const & x, HInvariants const & y)
    {
        return x.disc == y.disc && x.p0 == y.p0 && x.p1 == y.p1;
    }
};

inline HInvariants invariants_h(AltPair const & F)
{
    return {qform_pair(F).discriminant(), F.second.r, -pfaffian(F.first)};
}

/// Element (g1, p) of B2 x P_{2,2} (or the rational/adelic points of it).
struct HElement {
    QMat2 g1 = QMat2::identity();
    QMat4 p = QMat4::identity();

    /// g1 upper triangular, p block upper triangular (lower-left 2x2 block zero), both invertible.
    bool in_h_shape() const
    {
        return g1(1, 0) == 0 && p(2, 0) == 0 && p(2, 1) == 0 && p(3, 0) == 0 && p(3, 1) == 0 && det(g1) != 0
               && det(p) != 0;
    }

    /// Additionally p upper triangular (minimal parabolic).
    bool in_b_shape() const { return in_h_shape() && p(1, 0) == 0 && p(3, 2) == 0; }

    /// det(g1) det(p) = 1.
    bool has_unit_determinant() const { return det(g1) * det(p) == 1; }

    friend HElement operator*(HElement const & x, HElement const & y) { return {x.g1 * y.g1, x.p * y.p}; }
};

inline QAltPair act_pair(QAltPair const & F, HElement const & g)
{
    return act_pair(F, g.g1, g.p);
}

inline QAltPair act_pair(AltPair const & F, HElement const & g)
{
    return act_pair(to_rational(F), g.g1, g.p);
}

inline bool fixes(HElement const & g, AltPair const & F)
{
    return act_pair(F, g) == to_rational(F);
}

struct HCharacter {
    Rational chi0, chi1;
};

/// (chi0, chi1) with P0(F g) = chi0 P0(F) and P1(F g) = chi1 P1(F) on W,
/// obtained by acting on two generic probe elements and dividing.
inline HCharacter character_h(HElement const & g)
{
    if (!g.in_h_shape())
        throw domain_error("character_h: element is not in B2 x P_{2,2} shape");
    static AltPair const probes[2] = {
        {{0, 2, 3, 5, 7, 11}, {13, 17, 19, 23, 29, 31}},
        {{0, 1, 4, 9, 16, 25}, {3, 5, 8, 13, 21, 34}},
    };
    HCharacter out;
    for (int k = 0; k < 2; ++k) {
        QAltPair F = to_rational(probes[k]);
        QAltPair Fg = act_pair(F, g);
        if (!in_w(Fg))
            throw std::logic_error("character_h: action does not preserve W");
        Rational chi0 = Fg.second.r / F.second.r;
        Rational chi1 = pfaffian(Fg.first) / pfaffian(F.first);
        if (k == 0) {
            out = {chi0, chi1};
        } else if (out.chi0 != chi0 || out.chi1 != chi1) {
            throw std::logic_error("character_h: probes disagree");
        }
    }
    return out;
}

/// Image of a cube: fused blocks with r2 = 1 in the second matrix.
inline AltPair embed_vd(Cube const & A)
{
    AltPair F = fuse(A);
    F.second.r = 1;
    return F;
}

/// Representative w of the single B^1-orbit on W^0_D. The alternating forms
/// are read off the upper triangles of the displayed matrices.
inline AltPair canonical_w(BigInt const & D)
{
    require_negative_discriminant(D);
    if (mod_floor(D, 4) == 0)
        return {{0, 0, 1, -1, 0, 0}, {1, 1, 0, 0, -D / 4, 0}};
    return {{0, 0, 1, -1, -1, 0}, {1, 1, 1, -1, -(D + 3) / 4, 0}};
}

/// The displayed stabilizer family: diag(a3, 1/a3) x (+-) p(a3, b3).
inline HElement stabilizer_element(BigInt const & D, Rational const & a3, Rational const & b3, int sign)
{
    require_negative_discriminant(D);
    if (a3 == 0)
        throw domain_error("stabilizer_element: a3 must be nonzero");
    if (sign != 1 && sign != -1)
        throw domain_error("stabilizer_element: sign must be +1 or -1");
    HElement g;
    g.g1 = qmat2(a3, 0, 0, Rational(1) / a3);
    QMat4 & p = g.p;
    p = QMat4{};
    bool const even = mod_floor(D, 4) == 0;
    Rational const k = even ? Rational(D, 4) : Rational(D + 3, 4);
    p(0, 0) = a3;
    p(0, 1) = b3;
    p(0, 2) = even ? a3 * b3 : -a3 + a3 * b3;
    p(0, 3) = b3 * b3 - k;
    p(1, 1) = 1;
    p(1, 2) = -a3;
    p(1, 3) = even ? -b3 : -1 - b3;
    p(2, 2) = a3;
    p(2, 3) = b3;
    p(3, 3) = 1;
    if (sign < 0)
        p = Rational(-1) * p;
    return g;
}

/// Stabilizer of canonical_w(D) inside B, solved from the orbit equations:
/// g1 = a1 I and, with lambda = 1/(a1 a3),
///   D = 0 (4): p = (a3 s s (D/4)(a3-lambda); 0 lambda lambda-a3 -s; 0 0 a3 s; 0 0 0 lambda)
///   D = 1 (4): p = (a3 s s ((D-1)/4)(a3-lambda); 0 lambda lambda-a3 lambda-a3-s;
///                   0 0 a3 a3+s-lambda; 0 0 0 lambda)
/// Every element has det(g1) det(p) = 1.
inline HElement derived_stabilizer_element(BigInt const & D, Rational const & a1, Rational const & a3,
                                           Rational const & s)
{
    require_negative_discriminant(D);
    if (a1 == 0 || a3 == 0)
        throw domain_error("derived_stabilizer_element: a1 and a3 must be nonzero");
    HElement g;
    g.g1 = qmat2(a1, 0, 0, a1);
    Rational const lambda = Rational(1) / (a1 * a3);
    bool const even = mod_floor(D, 4) == 0;
    QMat4 & p = g.p;
    p = QMat4{};
    p(0, 0) = a3;
    p(0, 1) = s;
    p(0, 2) = s;
    p(0, 3) = (even ? Rational(D, 4) : Rational(D - 1, 4)) * (a3 - lambda);
    p(1, 1) = lambda;
    p(1, 2) = lambda - a3;
    p(1, 3) = even ? Rational(-s) : lambda - a3 - s;
    p(2, 2) = a3;
    p(2, 3) = even ? s : a3 + s - lambda;
    p(3, 3) = lambda;
    return g;
}

struct DerivedStabilizerParams {
    Rational a1, a3, s;
};

/// Recovers (a1, a3, s) from an element of the derived family; nullopt if g is
/// not of that exact form for discriminant D.
inline std::optional<DerivedStabilizerParams> derived_stabilizer_params(BigInt const & D, HElement const & g)
{
    Rational const & a1 = g.g1(0, 0);
    Rational const & a3 = g.p(0, 0);
    if (a1 == 0 || a3 == 0)
        return std::nullopt;
    DerivedStabilizerParams params{a1, a3, g.p(0, 1)};
    HElement expected = derived_stabilizer_element(D, params.a1, params.a3, params.s);
    if (expected.g1 != g.g1 || expected.p != g.p)
        return std::nullopt;
    return params;
}

} // namespace cubecomp

#endif // CUBECOMP_ALTPAIR_HPP
