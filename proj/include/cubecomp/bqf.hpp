#ifndef CUBECOMP_BQF_HPP
#define CUBECOMP_BQF_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <ostream>
#include <tuple>
#include <vector>

#include "arith.hpp"
#include "parallel.hpp"

namespace cubecomp {

/// Integral binary quadratic form a*u^2 + b*u*v + c*v^2.
struct BQF {
    BigInt a, b, c;

    BigInt discriminant() const { return b * b - 4 * a * c; }

    bool is_positive_definite() const { return discriminant() < 0 && a > 0; }

    BigInt content() const { return gcd_big(gcd_big(a, b), c); }

    bool is_primitive() const { return content() == 1; }

    BigInt operator()(BigInt const & u, BigInt const & v) const
    {
        return a * u * u + b * u * v + c * v * v;
    }

    friend bool operator==(BQF const & x, BQF const & y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(BQF const & x, BQF const & y) { return !(x == y); }

    friend bool operator<(BQF const & x, BQF const & y)
    {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    }

    friend std::ostream & operator<<(std::ostream & o, BQF const & f)
    {
        return o << "(" << f.a << "," << f.b << "," << f.c << ")";
    }
};

inline BigInt discriminant(BQF const & f)
{
    return f.discriminant();
}

/// Symmetric matrix view (a b/2; b/2 c).
inline QMat2 gram_matrix(BQF const & f)
{
    return qmat2(Rational(f.a), Rational(f.b, 2), Rational(f.b, 2), Rational(f.c));
}

/// Right action f . g: the form (u, v) -> f(g11 u + g12 v, g21 u + g22 v),
/// i.e. Gram matrix g^t S g.
inline BQF act(BQF const & f, IMat2 const & g)
{
    BigInt const & p = g(0, 0);
    BigInt const & q = g(0, 1);
    BigInt const & r = g(1, 0);
    BigInt const & s = g(1, 1);
    return {f.a * p * p + f.b * p * r + f.c * r * r,
            2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s,
            f.a * q * q + f.b * q * s + f.c * s * s};
}

inline void require_negative_discriminant(BigInt const & D)
{
    if (D >= 0 || !is_discriminant(D))
        throw domain_error(D.str() + " is not a negative discriminant (need D < 0, D = 0,1 mod 4)");
}

/// The form of S(D): (1, 0, -D/4) for D = 0 mod 4, (1, 1, (1-D)/4) for D = 1 mod 4.
inline BQF s_of_d(BigInt const & D)
{
    require_negative_discriminant(D);
    if (mod_floor(D, 4) == 0)
        return {1, 0, -D / 4};
    return {1, 1, (1 - D) / 4};
}

/// Principal form of discriminant D (same as s_of_d).
inline BQF principal_form(BigInt const & D)
{
    return s_of_d(D);
}

/// Gauss reduced: |b| <= a <= c, and b >= 0 when |b| = a or a = c.
inline bool is_reduced(BQF const & f)
{
    if (!f.is_positive_definite())
        return false;
    if (abs_big(f.b) > f.a || f.a > f.c)
        return false;
    if ((abs_big(f.b) == f.a || f.a == f.c) && f.b < 0)
        return false;
    return true;
}

struct Reduction {
    BQF form;
    IMat2 transform; // act(input, transform) == form, det(transform) == 1
};

inline Reduction reduce(BQF const & f)
{
    if (!f.is_positive_definite())
        throw domain_error("reduce: form is not positive definite");
    BQF g = f;
    IMat2 gamma = IMat2::identity();
    IMat2 const swap = mat2(0, -1, 1, 0);
    for (;;) {
        if (g.b <= -g.a || g.b > g.a) {
            BigInt two_a = 2 * g.a;
            BigInt k = floor_div(g.a - g.b, two_a);
            IMat2 step = mat2(1, k, 0, 1);
            g = act(g, step);
            gamma = gamma * step;
        }
        if (g.a > g.c) {
            g = act(g, swap);
            gamma = gamma * swap;
            continue;
        }
        if (g.a == g.c && g.b < 0) {
            g = act(g, swap);
            gamma = gamma * swap;
        }
        return {g, gamma};
    }
}

inline BQF reduced(BQF const & f)
{
    return reduce(f).form;
}

/// Class inverse (a, -b, c), reduced.
inline BQF inverse(BQF const & f)
{
    return reduced({f.a, -f.b, f.c});
}

/// Gauss composition of two primitive positive definite forms of the same
/// discriminant, returned reduced.
///
/// Dirichlet composition: with s = (b1+b2)/2 and d = gcd(a1, a2, s), solve
/// the congruences defining the united form (a1 a2 / d^2, B, C) by two
/// extended-gcd steps.
inline BQF compose(BQF const & f1, BQF const & f2)
{
    if (!f1.is_positive_definite() || !f2.is_positive_definite())
        throw domain_error("compose: forms must be positive definite");
    BigInt const D = f1.discriminant();
    if (f2.discriminant() != D)
        throw domain_error("compose: discriminants differ (" + D.str() + " vs " + f2.discriminant().str() + ")");
    if (!f1.is_primitive() || !f2.is_primitive())
        throw domain_error("compose: forms must be primitive");

    BQF const * x = &f1;
    BQF const * y = &f2;
    if (x->a > y->a)
        std::swap(x, y);
    BigInt const & a1 = x->a;
    BigInt const & b1 = x->b;
    BigInt const & a2 = y->a;
    BigInt const & b2 = y->b;
    BigInt const & c2 = y->c;

    BigInt s = (b1 + b2) / 2;
    BigInt n = b2 - s;

    BigInt y1, d;
    if (a2 % a1 == 0) {
        y1 = 0;
        d = a1;
    } else {
        ExtendedGcd eg = extended_gcd(a2, a1);
        y1 = eg.x;
        d = eg.g;
    }

    BigInt x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        ExtendedGcd eg = extended_gcd(s, d);
        x2 = eg.x;
        y2 = -eg.y;
        d1 = eg.g;
    }

    BigInt v1 = a1 / d1;
    BigInt v2 = a2 / d1;
    BigInt r = mod_floor(y1 * y2 * n - x2 * c2, v1);
    BigInt b3 = b2 + 2 * v2 * r;
    BigInt a3 = v1 * v2;
    BigInt c3 = (b3 * b3 - D) / (4 * a3);
    return reduced({a3, b3, c3});
}

/// Reduced primitive positive definite forms of discriminant D, ordered by a,
/// then |b|, then b > 0 first. The principal form comes first.
inline std::vector<BQF> reduced_forms(BigInt const & D)
{
    require_negative_discriminant(D);
    std::vector<BQF> out;
    BigInt const bound = isqrt(-D / 3);
    for (BigInt a = 1; a <= bound; ++a) {
        for (BigInt b = -a + 1; b <= a; ++b) {
            BigInt num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            BQF f{a, b, num / (4 * a)};
            if (is_reduced(f) && f.is_primitive())
                out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](BQF const & p, BQF const & q) {
        BigInt ap = abs_big(p.b), aq = abs_big(q.b);
        return std::tie(p.a, ap, q.b) < std::tie(q.a, aq, p.b);
    });
    return out;
}

/// Form class group: reduced representatives and the composition table.
struct ClassGroup {
    BigInt D;
    std::vector<BQF> reps;
    std::vector<std::vector<std::size_t>> table; // table[i][j] = index of reps[i] o reps[j]

    std::size_t h() const { return reps.size(); }

    /// Index of the class of f (any equivalent positive definite form).
    std::size_t index_of(BQF const & f) const
    {
        BQF r = reduced(f);
        auto it = std::lower_bound(order_.begin(), order_.end(), r,
                                   [this](std::size_t i, BQF const & key) { return reps[i] < key; });
        if (it == order_.end() || reps[*it] != r)
            throw domain_error("form is not a primitive form of discriminant " + D.str());
        return *it;
    }

    std::size_t inverse_index(std::size_t i) const
    {
        for (std::size_t j = 0; j < h(); ++j)
            if (table[i][j] == 0)
                return j;
        throw domain_error("class has no inverse");
    }

    void build_index()
    {
        order_.resize(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i)
            order_[i] = i;
        std::sort(order_.begin(), order_.end(), [this](std::size_t i, std::size_t j) { return reps[i] < reps[j]; });
    }

  private:
    std::vector<std::size_t> order_;
};

inline ClassGroup class_group(BigInt const & D)
{
    ClassGroup G;
    G.D = D;
    G.reps = reduced_forms(D);
    G.build_index();
    std::size_t const h = G.h();
    G.table.assign(h, std::vector<std::size_t>(h, 0));
    parallel_for(h, [&](std::size_t i) {
        for (std::size_t j = 0; j < h; ++j)
            G.table[i][j] = G.index_of(compose(G.reps[i], G.reps[j]));
    });
    return G;
}

/// Root z = (-b + sqrt(D)) / (2a) of a positive definite form, kept exactly
/// as Re z and (Im z)^2.
struct HeegnerPoint {
    Rational re;
    Rational im_squared;
    BQF source;

    /// Closed standard fundamental domain with the usual boundary identifications:
    /// -1/2 <= Re z < 1/2, |z| >= 1, and Re z <= 0 on |z| = 1.
    bool in_fundamental_domain() const
    {
        Rational const half(1, 2);
        if (re < -half || re >= half)
            return false;
        Rational norm = re * re + im_squared;
        if (norm < 1)
            return false;
        if (norm == 1 && re > 0)
            return false;
        return true;
    }
};

inline HeegnerPoint heegner_point(BQF const & f)
{
    if (!f.is_positive_definite())
        throw domain_error("heegner_point: form is not positive definite");
    return {Rational(-f.b, 2 * f.a), Rational(-f.discriminant(), 4 * f.a * f.a), f};
}

inline std::vector<HeegnerPoint> heegner_points(BigInt const & D)
{
    require_negative_discriminant(D);
    if (!is_fundamental_discriminant(D))
        throw domain_error("heegner_points: " + D.str() + " is not a fundamental discriminant");
    std::vector<HeegnerPoint> out;
    for (auto const & f : reduced_forms(D))
        out.push_back(heegner_point(f));
    return out;
}

/// Number of roots of unity in the order of discriminant D < 0.
inline int unit_count(BigInt const & D)
{
    require_negative_discriminant(D);
    if (D == -4)
        return 4;
    if (D == -3)
        return 6;
    return 2;
}

/// x + y (b/2 c; -a -b/2) with (a, b, c) = s_of_d(D); determinant x^2 - y^2 D / 4.
inline QMat2 torus_element(BigInt const & D, Rational const & x, Rational const & y)
{
    if (x == 0 && y == 0)
        throw domain_error("torus_element: (x, y) = (0, 0) is not invertible");
    BQF s = s_of_d(D);
    Rational half_b(s.b, 2);
    return qmat2(x + y * half_b, y * Rational(s.c), -y * Rational(s.a), x - y * half_b);
}

} // namespace cubecomp

#endif // CUBECOMP_BQF_HPP
