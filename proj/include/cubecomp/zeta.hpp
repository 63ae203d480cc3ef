#ifndef CUBECOMP_ZETA_HPP
#define CUBECOMP_ZETA_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "arith.hpp"
#include "parallel.hpp"

namespace cubecomp {

/// How a class of discriminant -n is weighted in c(n).
struct CoeffConvention {
    enum class Weight { two_over_w, one_over_w };
    Weight weight = Weight::two_over_w;
    bool include_imprimitive = true;
};

/// c(1..N) (index 0 holds c(1)).
struct CoeffTable {
    std::uint64_t N = 0;
    std::vector<Rational> c;

    Rational const & operator[](std::uint64_t n) const { return c.at(n - 1); }
};

/// Largest N accepted by the sieve; keeps every intermediate below 2^62.
inline constexpr std::uint64_t zeta_sieve_limit = 1'000'000'000'000ULL;

namespace detail {

/// Weight of a reduced form (a, b, c) of discriminant -n in units of 1/12:
/// the unit count is taken at the primitive discriminant -n / g^2.
inline std::int64_t form_weight_twelfths(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n,
                                         CoeffConvention const & conv)
{
    std::int64_t g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
    if (g != 1 && !conv.include_imprimitive)
        return 0;
    std::int64_t core = n / (g * g);
    std::int64_t w = core == 3 ? 6 : (core == 4 ? 4 : 2);
    std::int64_t twelfths = conv.weight == CoeffConvention::Weight::two_over_w ? 24 / w : 12 / w;
    return twelfths;
}

inline void check_sieve_bound(std::uint64_t N)
{
    if (N < 1)
        throw domain_error("zeta: N must be at least 1");
    if (N > zeta_sieve_limit)
        throw domain_error("zeta: N exceeds the sieve limit");
}

/// c(n) for n = 1..N in units of 1/12, one pass over reduced forms
/// (a, b, c) with 4ac - b^2 <= N.
inline std::vector<std::int64_t> coeff_twelfths(std::uint64_t N, CoeffConvention const & conv)
{
    check_sieve_bound(N);
    auto const n_max = static_cast<std::int64_t>(N);
    std::int64_t a_max = 1;
    while ((a_max + 1) * (a_max + 1) * 3 <= n_max)
        ++a_max;
    unsigned workers = std::max(1u, thread_count());
    std::vector<std::vector<std::int64_t>> partial(workers);
    parallel_for(
        workers,
        [&](std::size_t w) {
            auto & acc = partial[w];
            acc.assign(N + 1, 0);
            for (std::int64_t a = 1 + static_cast<std::int64_t>(w); a <= a_max; a += workers) {
                for (std::int64_t b = -a + 1; b <= a; ++b) {
                    // c >= a, and 4ac - b^2 <= N
                    for (std::int64_t c = a;; ++c) {
                        std::int64_t n = 4 * a * c - b * b;
                        if (n > n_max)
                            break;
                        if ((a == c || b == a) && b < 0)
                            continue;
                        acc[static_cast<std::size_t>(n)] += form_weight_twelfths(a, b, c, n, conv);
                    }
                }
            }
        },
        workers);
    std::vector<std::int64_t> total(N + 1, 0);
    for (auto const & acc : partial)
        for (std::size_t i = 0; i <= N; ++i)
            total[i] += acc[i];
    return total;
}

} // namespace detail

/// c(n): weighted number of SL2(Z)-classes of positive definite forms of
/// discriminant -n (0 when -n is not a discriminant).
inline Rational coeff(std::uint64_t n, CoeffConvention const & conv = {})
{
    if (n < 1)
        throw domain_error("coeff: n must be positive");
    if (n > zeta_sieve_limit)
        throw domain_error("coeff: n exceeds the enumeration limit");
    auto const nn = static_cast<std::int64_t>(n);
    if (nn % 4 != 0 && nn % 4 != 3)
        return 0;
    std::int64_t twelfths = 0;
    for (std::int64_t a = 1; 3 * a * a <= nn; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b + nn;
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (c < a || ((a == c || b == a) && b < 0))
                continue;
            twelfths += detail::form_weight_twelfths(a, b, c, nn, conv);
        }
    }
    return Rational(twelfths, 12);
}

inline CoeffTable coeff_table(std::uint64_t N, CoeffConvention const & conv = {})
{
    auto tw = detail::coeff_twelfths(N, conv);
    CoeffTable t;
    t.N = N;
    t.c.reserve(N);
    for (std::uint64_t n = 1; n <= N; ++n)
        t.c.emplace_back(tw[n], 12);
    return t;
}

inline Rational partial_sum(std::uint64_t N, CoeffConvention const & conv = {})
{
    auto tw = detail::coeff_twelfths(N, conv);
    BigInt total = 0;
    for (auto x : tw)
        total += x;
    return Rational(total, 12);
}

/// Least-squares slope of log(sum_{n<=x} c(n)) against log x over a
/// 32-point geometric grid in [N/10, N].
inline double growth_exponent(std::uint64_t N, CoeffConvention const & conv = {})
{
    if (N < 100)
        throw domain_error("growth_exponent: N must be at least 100");
    auto tw = detail::coeff_twelfths(N, conv);
    std::vector<std::int64_t> prefix(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n)
        prefix[n] = prefix[n - 1] + tw[n];
    constexpr int points = 32;
    double const lo = std::log(static_cast<double>(N) / 10.0);
    double const hi = std::log(static_cast<double>(N));
    std::vector<double> xs, ys;
    for (int k = 0; k < points; ++k) {
        double lx = lo + (hi - lo) * k / (points - 1);
        auto x = static_cast<std::uint64_t>(std::floor(std::exp(lx) + 1e-9));
        x = std::min<std::uint64_t>(std::max<std::uint64_t>(x, 1), N);
        if (prefix[x] <= 0)
            continue;
        xs.push_back(std::log(static_cast<double>(x)));
        ys.push_back(std::log(static_cast<double>(prefix[x]) / 12.0));
    }
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

struct DirichletValue {
    double value = 0;      // sum_{n<=N} c(n) n^-s
    double tail_bound = 0; // bound on sum_{n>N} c(n) n^-s
};

/// Truncated series with a tail bound from c(n) <= K n^(1/2+eps), where K is
/// the largest ratio c(n)/n^(1/2+eps) in the table and eps = min(1/4, (s-3/2)/2):
///     tail <= K N^(3/2+eps-s) / (s - 3/2 - eps).
inline DirichletValue dirichlet_value(CoeffTable const & table, double s)
{
    if (!(s > 1.5))
        throw domain_error("dirichlet_value: s must exceed 3/2");
    double const eps = std::min(0.25, (s - 1.5) / 2.0);
    long double sum = 0;
    double ratio = 0;
    for (std::uint64_t n = 1; n <= table.N; ++n) {
        double cn = table[n].convert_to<double>();
        if (cn == 0)
            continue;
        double dn = static_cast<double>(n);
        sum += static_cast<long double>(cn) * std::pow(static_cast<long double>(dn), -static_cast<long double>(s));
        ratio = std::max(ratio, cn / std::pow(dn, 0.5 + eps));
    }
    double const Nd = static_cast<double>(table.N);
    double tail = ratio * std::pow(Nd, 1.5 + eps - s) / (s - 1.5 - eps);
    return {static_cast<double>(sum), tail};
}

inline DirichletValue dirichlet_value(double s, std::uint64_t N, CoeffConvention const & conv = {})
{
    if (!(s > 1.5))
        throw domain_error("dirichlet_value: s must exceed 3/2");
    return dirichlet_value(coeff_table(N, conv), s);
}

} // namespace cubecomp

#endif // CUBECOMP_ZETA_HPP
