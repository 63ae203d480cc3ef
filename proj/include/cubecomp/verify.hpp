#ifndef CUBECOMP_VERIFY_HPP
#define CUBECOMP_VERIFY_HPP

// Deterministic property suite (fixed seeds, no timings) behind `verify all`.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubecomp.hpp"
#include "oracle.hpp"

namespace cubecomp::verify {

struct Result {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Fixed-seed source of small random objects.
class Sampler
{
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(std::int64_t span = 9, std::int64_t den = 9)
    {
        return Rational(integer(-span, span), integer(1, den));
    }

    Rational nonzero_rational(std::int64_t span = 9, std::int64_t den = 9)
    {
        for (;;) {
            Rational q = rational(span, den);
            if (q != 0)
                return q;
        }
    }

    Cube cube(std::int64_t r)
    {
        std::array<BigInt, 8> v;
        for (auto & x : v)
            x = integer(-r, r);
        return Cube::from_entries(v);
    }

    IMat2 mat(std::int64_t r, bool nonsingular)
    {
        for (;;) {
            IMat2 m = mat2(integer(-r, r), integer(-r, r), integer(-r, r), integer(-r, r));
            if (!nonsingular || det(m) != 0)
                return m;
        }
    }

    /// Product of `len` elementary generators of SL2(Z).
    IMat2 sl2(int len)
    {
        static IMat2 const gens[4] = {mat2(1, 1, 0, 1), mat2(1, -1, 0, 1), mat2(1, 0, 1, 1), mat2(0, -1, 1, 0)};
        IMat2 m = IMat2::identity();
        for (int k = 0; k < len; ++k)
            m = m * gens[integer(0, 3)];
        return m;
    }

    IMat4 sl4(int len)
    {
        IMat4 m = IMat4::identity();
        for (int k = 0; k < len; ++k) {
            auto i = static_cast<std::size_t>(integer(0, 3));
            auto j = static_cast<std::size_t>(integer(0, 2));
            if (j >= i)
                ++j;
            IMat4 e = IMat4::identity();
            e(i, j) = integer(-2, 2);
            m = m * e;
        }
        return m;
    }

    Alt4 alt4(std::int64_t r)
    {
        return {integer(-r, r), integer(-r, r), integer(-r, r), integer(-r, r), integer(-r, r), integer(-r, r)};
    }

    std::uint64_t raw() { return rng_(); }

  private:
    std::mt19937_64 rng_;
};

namespace detail {

/// Counts failures and keeps the first failure message.
class Tally
{
  public:
    void check(bool ok, std::function<std::string()> const & what)
    {
        ++cases_;
        if (!ok && failures_++ == 0)
            first_ = what();
    }
    Result result(std::string module, std::string name, std::string const & scope) const
    {
        std::ostringstream o;
        o << cases_ << " cases (" << scope << "), " << failures_ << " failures";
        if (failures_)
            o << "; first: " << first_;
        return {std::move(module), std::move(name), failures_ == 0, o.str()};
    }

  private:
    std::size_t cases_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

template <class T>
std::string show(T const & x)
{
    std::ostringstream o;
    o << x;
    return o.str();
}

inline std::vector<std::int64_t> fundamental_discriminants(std::int64_t lo, std::int64_t hi)
{
    std::vector<std::int64_t> out;
    for (std::int64_t D = hi; D >= lo; --D)
        if (is_fundamental_discriminant(D))
            out.push_back(D);
    return out;
}

inline std::vector<std::int64_t> odd_primes_below(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 3; p < n; p += 2)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

} // namespace detail

// ---- arith ----

inline Result det_multiplicative()
{
    Sampler s(101);
    detail::Tally t;
    for (int k = 0; k < 1000; ++k) {
        IMat2 x = s.mat(20, false), y = s.mat(20, false);
        t.check(det(x * y) == det(x) * det(y), [&] { return detail::show(x) + " " + detail::show(y); });
        IMat4 p, q;
        for (auto & e : p.e)
            e = s.integer(-9, 9);
        for (auto & e : q.e)
            e = s.integer(-9, 9);
        t.check(det(p * q) == det(p) * det(q), [&] { return detail::show(p) + " " + detail::show(q); });
    }
    return t.result("arith", "det_multiplicative", "1000 random 2x2 and 4x4 pairs");
}

inline Result kronecker_multiplicative()
{
    Sampler s(102);
    detail::Tally t;
    for (int k = 0; k < 2000; ++k) {
        std::int64_t D = -s.integer(3, 2000);
        if (!is_discriminant(D))
            continue;
        std::int64_t m = s.integer(-300, 300), n = s.integer(-300, 300);
        t.check(kronecker(D, BigInt(m) * n) == kronecker(D, m) * kronecker(D, n),
                [&] { return "D=" + std::to_string(D) + " m=" + std::to_string(m) + " n=" + std::to_string(n); });
    }
    return t.result("arith", "kronecker_multiplicative", "2000 random (D, m, n)");
}

inline Result kronecker_vs_bruteforce()
{
    detail::Tally t;
    for (std::int64_t D = -800; D <= 800; ++D) {
        if (!is_discriminant(D) || D == 0)
            continue;
        for (std::int64_t p : detail::odd_primes_below(100))
            t.check(kronecker(D, p) == oracle::kronecker_odd_prime(D, p),
                    [&] { return "D=" + std::to_string(D) + " p=" + std::to_string(p); });
    }
    return t.result("arith", "kronecker_vs_bruteforce", "|D| <= 800, odd p < 100");
}

// ---- bqf ----

inline Result reduce_properties()
{
    Sampler s(201);
    detail::Tally t;
    for (int k = 0; k < 2000; ++k) {
        std::int64_t a = s.integer(1, 40), b = s.integer(-40, 40);
        std::int64_t c = (b * b) / (4 * a) + s.integer(1, 40);
        BQF f = act(BQF{a, b, c}, s.sl2(6));
        Reduction r = reduce(f);
        t.check(is_reduced(r.form) && act(f, r.transform) == r.form && det(r.transform) == 1
                    && reduced(r.form) == r.form,
                [&] { return detail::show(f); });
    }
    for (int k = 0; k < 300; ++k) {
        std::int64_t a = s.integer(1, 12), b = s.integer(-12, 12);
        std::int64_t c = (b * b) / (4 * a) + s.integer(1, 12);
        BQF f = act(BQF{a, b, c}, s.sl2(3));
        auto w = oracle::reduce_by_word_search(f, 9);
        t.check(!w || *w == reduced(f), [&] { return "word search " + detail::show(f); });
    }
    return t.result("bqf", "reduce_idempotent_and_transform", "2000 random forms + 300 word-search oracles");
}

inline Result compose_properties()
{
    Sampler s(202);
    detail::Tally t;
    std::vector<std::int64_t> Ds = detail::fundamental_discriminants(-2000, -3);
    for (int k = 0; k < 600; ++k) {
        std::int64_t D = Ds[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(Ds.size()) - 1))];
        auto reps = reduced_forms(D);
        BQF const & f = reps[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(reps.size()) - 1))];
        BQF const & g = reps[static_cast<std::size_t>(s.integer(0, static_cast<std::int64_t>(reps.size()) - 1))];
        BQF fg = compose(f, g);
        t.check(compose(act(f, s.sl2(5)), act(g, s.sl2(5))) == fg,
                [&] { return "translates " + detail::show(f) + detail::show(g); });
        t.check(oracle::compose_via_ideals(f, g) == fg, [&] { return "ideal oracle " + detail::show(f) + detail::show(g); });
    }
    return t.result("bqf", "compose_well_defined_and_ideal_oracle", "600 random pairs, fundamental |D| <= 2000");
}

inline Result class_group_laws(std::int64_t max_abs_d)
{
    detail::Tally t;
    for (std::int64_t D = -3; D >= -max_abs_d; --D) {
        if (!is_discriminant(D))
            continue;
        ClassGroup G = class_group(D);
        std::size_t h = G.h();
        bool ok = G.reps[0] == principal_form(D);
        for (std::size_t i = 0; i < h && ok; ++i) {
            ok = G.table[0][i] == i && G.table[i][0] == i;
            bool has_inverse = false;
            for (std::size_t j = 0; j < h && ok; ++j) {
                ok = G.table[i][j] == G.table[j][i];
                has_inverse = has_inverse || G.table[i][j] == 0;
                for (std::size_t k = 0; k < h && ok; ++k)
                    ok = G.table[G.table[i][j]][k] == G.table[i][G.table[j][k]];
            }
            ok = ok && has_inverse;
        }
        t.check(ok, [&] { return "D=" + std::to_string(D); });
    }
    return t.result("bqf", "class_group_axioms", "every discriminant with |D| <= " + std::to_string(max_abs_d));
}

inline Result class_number_vs_moves(std::int64_t max_abs_d)
{
    detail::Tally t;
    for (std::int64_t D : detail::fundamental_discriminants(-max_abs_d, -3)) {
        std::size_t h = class_group(D).h();
        std::size_t oracle_h = oracle::class_count_by_moves(D, -D);
        t.check(h == oracle_h, [&] {
            return "D=" + std::to_string(D) + " h=" + std::to_string(h) + " oracle=" + std::to_string(oracle_h);
        });
    }
    return t.result("bqf", "class_number_vs_move_oracle", "fundamental |D| <= " + std::to_string(max_abs_d));
}

inline Result torus_and_heegner()
{
    Sampler s(203);
    detail::Tally t;
    for (int k = 0; k < 500; ++k) {
        std::int64_t D = -s.integer(3, 200);
        if (!is_discriminant(D))
            continue;
        Rational x = s.rational(), y = s.rational();
        if (x == 0 && y == 0)
            continue;
        t.check(det(torus_element(D, x, y)) == x * x - y * y * Rational(D, 4),
                [&] { return "torus D=" + std::to_string(D); });
    }
    for (std::int64_t D : detail::fundamental_discriminants(-4000, -3)) {
        auto pts = heegner_points(D);
        bool ok = pts.size() == class_group(D).h();
        for (auto const & p : pts)
            ok = ok && p.in_fundamental_domain() && p.im_squared > 0;
        t.check(ok, [&] { return "heegner D=" + std::to_string(D); });
    }
    return t.result("bqf", "torus_det_and_heegner_count", "500 torus elements, fundamental |D| <= 4000");
}

// ---- cube ----

inline Result cube_disc_agreement(int trials = 10000)
{
    Sampler s(301);
    detail::Tally t;
    for (int k = 0; k < trials; ++k) {
        Cube A = s.cube(50);
        BigInt p = qform(A, 1).discriminant();
        t.check(qform(A, 2).discriminant() == p && qform(A, 3).discriminant() == p, [&] { return detail::show(A); });
    }
    return t.result("cube", "slicing_discriminants_agree", std::to_string(trials) + " cubes, entries in [-50,50]");
}

inline Result cube_closed_vs_determinant()
{
    Sampler s(302);
    detail::Tally t;
    for (int k = 0; k < 3000; ++k) {
        Cube A = s.cube(50);
        for (int i = 1; i <= 3; ++i)
            t.check(qform(A, i) == oracle::qform_by_determinant(A, i),
                    [&] { return detail::show(A) + " i=" + std::to_string(i); });
    }
    return t.result("cube", "closed_formulas_vs_determinant", "3000 cubes x 3 slicings");
}

inline Result cube_equivariance(int trials = 10000)
{
    Sampler s(303);
    detail::Tally t;
    for (int k = 0; k < trials; ++k) {
        Cube A = s.cube(50);
        CubeTriple g{s.mat(3, true), s.mat(3, true), s.mat(3, true)};
        t.check(invariant(act(A, g)) == character(g) * invariant(A), [&] { return detail::show(A); });
    }
    return t.result("cube", "invariant_equivariance", std::to_string(trials) + " random (A, t), t entries in [-3,3]");
}

inline Result cube_class_invariance()
{
    Sampler s(304);
    detail::Tally t;
    int done = 0;
    while (done < 500) {
        Cube A = s.cube(6);
        BigInt P = invariant(A);
        if (P >= 0 || !is_projective(A))
            continue;
        ++done;
        Cube B = act(A, {s.sl2(4), s.sl2(4), s.sl2(4)});
        bool ok = true;
        for (int i = 1; i <= 3; ++i)
            ok = ok && reduced(oriented_form(qform(A, i))) == reduced(oriented_form(qform(B, i)));
        t.check(ok, [&] { return detail::show(A); });
    }
    return t.result("cube", "classes_invariant_under_sl2_cubed", "500 projective cubes with P < 0");
}

inline std::vector<std::int64_t> triple_law_discriminants()
{
    return {-3, -4, -7, -8, -11, -15, -20, -23, -47};
}

inline Result cube_triple_law(int translates = 10)
{
    Sampler s(305);
    detail::Tally t;
    for (std::int64_t D : triple_law_discriminants()) {
        auto reps = reduced_forms(D);
        for (auto const & f1 : reps) {
            for (auto const & f2 : reps) {
                Cube A = cube_from_pair(f1, f2);
                t.check(triple_law_check(A) && invariant(A) == D, [&] { return detail::show(A); });
                for (int k = 0; k < translates; ++k) {
                    Cube B = act(A, {s.sl2(6), s.sl2(6), s.sl2(6)});
                    t.check(triple_law_check(B), [&] { return "translate " + detail::show(B); });
                }
            }
        }
    }
    // random projective cubes, including det -1 twists
    int done = 0;
    while (done < 500) {
        Cube A = s.cube(5);
        if (invariant(A) >= 0 || !is_projective(A))
            continue;
        ++done;
        t.check(triple_law_check(A), [&] { return "random " + detail::show(A); });
    }
    return t.result("cube", "triple_law", "all class pairs for 9 discriminants, " + std::to_string(translates)
                                              + " translates each, 500 random projective cubes");
}

inline Result cube_pair_count()
{
    detail::Tally t;
    for (std::int64_t D : triple_law_discriminants()) {
        auto reps = reduced_forms(D);
        std::set<std::pair<BQF, BQF>> seen;
        for (auto const & f1 : reps)
            for (auto const & f2 : reps) {
                Cube A = cube_from_pair(f1, f2);
                seen.insert({reduced(qform(A, 2)), reduced(qform(A, 3))});
            }
        t.check(seen.size() == reps.size() * reps.size(), [&] { return "D=" + std::to_string(D); });
    }
    return t.result("cube", "class_pairs_count_h_squared", "9 discriminants");
}

inline Result cube_orbit_reduce()
{
    Sampler s(306);
    detail::Tally t;
    int done = 0;
    while (done < 6) {
        Cube A = s.cube(2);
        if (invariant(A) >= 0)
            continue;
        ++done;
        OrbitResult r = orbit_reduce(A, 6);
        Cube B = act(A, {s.sl2(2), s.sl2(2), s.sl2(2)});
        OrbitResult rb = orbit_reduce(B, 6);
        bool ok = r.conclusive && (!rb.conclusive || rb.cube == r.cube) && orbit_reduce(r.cube, 6).cube == r.cube;
        t.check(ok, [&] { return detail::show(A); });
    }
    Cube zero{0, 0, 0, 0, 0, 0, 0, 0};
    OrbitResult z = orbit_reduce(zero, 50);
    t.check(z.conclusive && z.cube == zero, [] { return std::string("zero cube"); });
    return t.result("cube", "orbit_reduce_canonical", "6 random cubes at bound 6 plus the zero cube");
}

// ---- altpair ----

inline Result pfaffian_squared(int trials = 10000)
{
    Sampler s(401);
    detail::Tally t;
    for (int k = 0; k < trials; ++k) {
        Alt4 m = s.alt4(50);
        BigInt pf = pfaffian(m);
        t.check(pf * pf == det(m.matrix()) && pf == oracle::pfaffian_from_matrix(m.matrix()),
                [&] { return detail::show(m); });
    }
    return t.result("altpair", "pfaffian_squared_is_det", std::to_string(trials) + " random Alt4");
}

inline Result fusion_compatibility(int trials = 10000)
{
    Sampler s(402);
    detail::Tally t;
    for (int k = 0; k < trials; ++k) {
        Cube A = s.cube(50);
        AltPair F = fuse(A);
        t.check(qform_pair(F) == qform(A, 1) && qform_pair(F) == oracle::qform_pair_by_pfaffian(F),
                [&] { return detail::show(A); });
    }
    return t.result("altpair", "fusion_compatibility", std::to_string(trials) + " random cubes");
}

inline Result altpair_disc_invariance()
{
    Sampler s(403);
    detail::Tally t;
    for (int k = 0; k < 1000; ++k) {
        AltPair F{s.alt4(9), s.alt4(9)};
        AltPair G = act_pair(F, s.sl2(4), s.sl4(5));
        t.check(qform_pair(G).discriminant() == qform_pair(F).discriminant(), [&] { return detail::show(F); });
    }
    return t.result("altpair", "disc_invariant_under_sl2_x_sl4", "1000 random pairs");
}

inline Result altpair_characters()
{
    Sampler s(404);
    detail::Tally t;
    for (int k = 0; k < 300; ++k) {
        HElement g;
        g.g1 = qmat2(s.nonzero_rational(), s.rational(), 0, s.nonzero_rational());
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                g.p(i, j) = (i >= 2 && j < 2) ? Rational(0) : s.rational(5, 4);
        if (!g.in_h_shape())
            continue;
        HCharacter chi = character_h(g);
        QMat2 ul = qmat2(g.p(0, 0), g.p(0, 1), g.p(1, 0), g.p(1, 1));
        for (int r = 0; r < 3; ++r) {
            Alt4 m = s.alt4(9), n = s.alt4(9);
            m.r = 0;
            AltPair F{m, n};
            QAltPair Fg = act_pair(F, g);
            t.check(Fg.first.r == 0 && Fg.second.r == chi.chi0 * Rational(F.second.r)
                        && pfaffian(Fg.first) == chi.chi1 * Rational(pfaffian(F.first))
                        && chi.chi0 == g.g1(1, 1) * det(ul) && chi.chi1 == g.g1(0, 0) * g.g1(0, 0) * det(g.p),
                    [&] { return detail::show(F); });
        }
    }
    return t.result("altpair", "character_consistency", "random H-shaped rational elements, 3 pairs each");
}

inline Result canonical_w_disc()
{
    detail::Tally t;
    for (std::int64_t D : detail::fundamental_discriminants(-199, -3)) {
        AltPair w = canonical_w(D);
        t.check(qform_pair(w).discriminant() == D && w.first.r == 0 && in_w0(w), [&] { return "D=" + std::to_string(D); });
    }
    return t.result("altpair", "canonical_w_discriminant", "fundamental -200 < D < 0");
}

inline Result displayed_stabilizer(int per_d = 100)
{
    Sampler s(405);
    detail::Tally t;
    for (std::int64_t D : detail::fundamental_discriminants(-199, -3)) {
        AltPair w = canonical_w(D);
        for (int k = 0; k < per_d; ++k) {
            Rational a3 = s.nonzero_rational(), b3 = s.rational();
            int sign = s.integer(0, 1) ? 1 : -1;
            t.check(fixes(stabilizer_element(D, a3, b3, sign), w), [&] {
                return "D=" + std::to_string(D) + " a3=" + to_string(a3) + " b3=" + to_string(b3)
                       + " sign=" + std::to_string(sign);
            });
        }
    }
    return t.result("altpair", "displayed_stabilizer_fixes_w",
                    std::to_string(per_d) + " random rational elements per fundamental -200 < D < 0");
}

inline Result derived_stabilizer()
{
    Sampler s(406);
    detail::Tally t;
    for (std::int64_t D : detail::fundamental_discriminants(-199, -3)) {
        AltPair w = canonical_w(D);
        for (int k = 0; k < 20; ++k) {
            HElement g = derived_stabilizer_element(D, s.nonzero_rational(), s.nonzero_rational(), s.rational());
            HElement h = derived_stabilizer_element(D, s.nonzero_rational(), s.nonzero_rational(), s.rational());
            t.check(fixes(g, w) && g.has_unit_determinant() && g.in_b_shape()
                        && derived_stabilizer_params(D, g * h).has_value(),
                    [&] { return "D=" + std::to_string(D); });
        }
    }
    return t.result("altpair", "derived_stabilizer_fixes_w_and_closes", "20 random products per fundamental -200 < D < 0");
}

inline Result fusion_class_surjectivity()
{
    detail::Tally t;
    for (std::int64_t D : {-3, -4, -7}) {
        std::set<BQF> fused;
        for (auto const & f1 : reduced_forms(D))
            for (auto const & f2 : reduced_forms(D))
                fused.insert(reduced(oriented_form(qform(cube_from_pair(f1, f2), 1))));
        // W^0: r1 = 0, a = 0; remaining ten entries in {-1, 0, 1}
        std::array<std::int64_t, 10> v{};
        std::size_t found = 0;
        for (int code = 0; code < 59049; ++code) {
            int c = code;
            for (auto & x : v) {
                x = c % 3 - 1;
                c /= 3;
            }
            AltPair F{{0, 0, v[0], v[1], v[2], v[3]}, {v[4], v[5], v[6], v[7], v[8], v[9]}};
            BQF q = qform_pair(F);
            if (q.discriminant() != D)
                continue;
            ++found;
            t.check(fused.count(reduced(oriented_form(q))) == 1, [&] { return detail::show(F); });
        }
        t.check(found > 0, [&] { return "no elements found for D=" + std::to_string(D); });
    }
    return t.result("altpair", "fusion_surjective_on_classes", "W0 elements with entries in {-1,0,1}, D in {-3,-4,-7}");
}

// ---- localcount ----

inline Result localcount_laws()
{
    detail::Tally t;
    auto primes = detail::odd_primes_below(50);
    // one exhaustive scan per modulus: histogram of x^2 mod m
    auto histogram = [](std::int64_t m) {
        std::vector<std::int64_t> h(static_cast<std::size_t>(m), 0);
        for (std::int64_t x = 0; x < m; ++x)
            ++h[static_cast<std::size_t>(x * x % m)];
        return h;
    };
    auto count = [](std::vector<std::int64_t> const & h, std::int64_t D) {
        auto m = static_cast<std::int64_t>(h.size());
        return h[static_cast<std::size_t>(((D % m) + m) % m)];
    };
    auto const h4 = histogram(4);
    for (std::int64_t p : primes) {
        std::vector<std::vector<std::int64_t>> hp, h4p;
        std::int64_t pk = p;
        for (unsigned k = 1; k <= 4; ++k, pk *= p) {
            hp.push_back(histogram(pk));
            h4p.push_back(histogram(4 * pk));
        }
        for (std::int64_t D = -200; D <= 200; ++D) {
            if (D == 0 || D % p == 0)
                continue;
            std::int64_t base = count(hp[0], D);
            t.check(sqrt_count_mod(D, p) == base, [&] { return "scan D=" + std::to_string(D) + " p=" + std::to_string(p); });
            if (is_discriminant(D))
                t.check(base == 1 + kronecker(D, p),
                        [&] { return "character D=" + std::to_string(D) + " p=" + std::to_string(p); });
            pk = p;
            for (unsigned k = 1; k <= 4; ++k, pk *= p) {
                std::int64_t c = count(hp[k - 1], D), c4 = count(h4p[k - 1], D);
                t.check(c == base, [&] { return "hensel D=" + std::to_string(D) + " p^k=" + std::to_string(pk); });
                t.check(c4 == count(h4, D) * c, [&] { return "crt D=" + std::to_string(D) + " p^k=" + std::to_string(pk); });
                if (k <= 2)
                    t.check(sqrt_count_mod(D, 4 * pk) == c4,
                            [&] { return "count D=" + std::to_string(D) + " m=" + std::to_string(4 * pk); });
            }
        }
    }
    return t.result("localcount", "hensel_character_crt", "|D| <= 200, odd p < 50, k <= 4");
}

inline Result localcount_fast_vs_scan()
{
    detail::Tally t;
    for (std::int64_t D = -300; D <= 300; ++D)
        for (std::int64_t m = 1; m <= 600; ++m)
            t.check(sqrt_count_fast(D, m) == oracle::sqrt_count_bruteforce(D, m),
                    [&] { return "D=" + std::to_string(D) + " m=" + std::to_string(m); });
    Sampler s(501);
    for (int k = 0; k < 100; ++k) {
        std::int64_t D = s.integer(-100000, 100000);
        std::int64_t m = s.integer(1, 200000);
        t.check(sqrt_count_fast(D, m) == sqrt_count_scan(D, m),
                [&] { return "D=" + std::to_string(D) + " m=" + std::to_string(m); });
    }
    return t.result("localcount", "fast_path_matches_scan", "|D| <= 300 with m <= 600, plus 100 random large pairs");
}

inline Result local_orbit_law()
{
    detail::Tally t;
    for (std::int64_t D : detail::fundamental_discriminants(-200, -3))
        for (std::int64_t p : detail::odd_primes_below(50)) {
            if (D % p == 0)
                continue;
            t.check(local_orbit_count(D, p, 1) == sqrt_count_mod(D, 4) * (1 + kronecker(D, p)),
                    [&] { return "D=" + std::to_string(D) + " p=" + std::to_string(p); });
        }
    for (std::int64_t D : detail::fundamental_discriminants(200, 1))
        for (std::int64_t p : detail::odd_primes_below(50)) {
            if (D % p == 0)
                continue;
            t.check(local_orbit_count(D, p, 1) == sqrt_count_mod(D, 4) * (1 + kronecker(D, p)),
                    [&] { return "D=" + std::to_string(D) + " p=" + std::to_string(p); });
        }
    return t.result("localcount", "local_orbit_count_law", "fundamental |D| <= 200, odd p < 50, p does not divide D");
}

// ---- zeta ----

inline Result zeta_table_vs_coeff()
{
    detail::Tally t;
    CoeffTable tab = coeff_table(500);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        t.check(tab[n] == coeff(n) && tab[n] == oracle::coeff_by_definition(static_cast<std::int64_t>(n)),
                [&] { return "n=" + std::to_string(n); });
    }
    return t.result("zeta", "sieve_matches_per_n_and_definition", "n <= 500");
}

inline Result zeta_class_number_relation()
{
    detail::Tally t;
    CoeffTable tab = coeff_table(4000);
    for (std::int64_t n = 3; n <= 4000; ++n) {
        if (!is_fundamental_discriminant(-n))
            continue;
        Rational lower(2 * static_cast<std::int64_t>(class_group(-n).h()), unit_count(-n));
        // fundamental: no imprimitive forms, so equality
        t.check(tab[static_cast<std::uint64_t>(n)] == lower, [&] { return "n=" + std::to_string(n); });
    }
    return t.result("zeta", "coeff_equals_weighted_class_number", "fundamental -n, n <= 4000");
}

inline Result zeta_tail_bound()
{
    detail::Tally t;
    for (std::uint64_t N : {100u, 400u}) {
        CoeffTable small = coeff_table(N), big = coeff_table(4 * N);
        for (double s : {2.0, 2.5, 3.0, 4.0}) {
            DirichletValue v = dirichlet_value(small, s), w = dirichlet_value(big, s);
            t.check(std::abs(w.value - v.value) <= v.tail_bound && w.value >= v.value,
                    [&] { return "N=" + std::to_string(N) + " s=" + std::to_string(s); });
        }
    }
    return t.result("zeta", "tail_bound_sound", "N in {100, 400} against 4N, s in {2, 2.5, 3, 4}");
}

inline Result zeta_growth()
{
    detail::Tally t;
    double e = growth_exponent(100000);
    std::ostringstream o;
    o.precision(6);
    o << std::fixed << e;
    t.check(e >= 1.45 && e <= 1.55, [&] { return "exponent " + o.str(); });
    Result r = t.result("zeta", "growth_exponent_band", "N = 100000, band [1.45, 1.55]");
    r.detail += "; exponent " + o.str();
    return r;
}

/// The full suite, in a fixed order.
inline std::vector<Result> run_all()
{
    std::vector<std::function<Result()>> props{
        det_multiplicative,
        kronecker_multiplicative,
        kronecker_vs_bruteforce,
        reduce_properties,
        compose_properties,
        [] { return class_group_laws(4000); },
        [] { return class_number_vs_moves(400); },
        torus_and_heegner,
        [] { return cube_disc_agreement(); },
        cube_closed_vs_determinant,
        [] { return cube_equivariance(); },
        cube_class_invariance,
        [] { return cube_triple_law(); },
        cube_pair_count,
        cube_orbit_reduce,
        [] { return pfaffian_squared(); },
        [] { return fusion_compatibility(); },
        altpair_disc_invariance,
        altpair_characters,
        canonical_w_disc,
        [] { return displayed_stabilizer(); },
        derived_stabilizer,
        fusion_class_surjectivity,
        localcount_laws,
        localcount_fast_vs_scan,
        local_orbit_law,
        zeta_table_vs_coeff,
        zeta_class_number_relation,
        zeta_tail_bound,
        zeta_growth,
    };
    std::vector<Result> out;
    for (auto const & p : props) {
        try {
            out.push_back(p());
        } catch (std::exception const & ex) {
            out.push_back({"?", "exception", false, ex.what()});
        }
    }
    return out;
}

} // namespace cubecomp::verify

#endif // CUBECOMP_VERIFY_HPP
