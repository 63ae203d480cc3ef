#ifndef CUBECOMP_ARITH_HPP
#define CUBECOMP_ARITH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace cubecomp {

// Expression templates off: every arithmetic result is a plain value.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

/// Raised when an argument lies outside an operation's mathematical domain.
class domain_error : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

inline Rational make_rational(BigInt const & num, BigInt const & den)
{
    if (den == 0)
        throw domain_error("rational with zero denominator");
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

inline BigInt numerator_of(Rational const & q)
{
    return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(Rational const & q)
{
    return boost::multiprecision::denominator(q);
}

inline std::string to_string(BigInt const & x)
{
    return x.str();
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(Rational const & q)
{
    if (denominator_of(q) == 1)
        return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Floor division and the matching nonnegative remainder (for m > 0).
inline BigInt floor_div(BigInt const & a, BigInt const & m)
{
    BigInt q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0)))
        --q;
    return q;
}

inline BigInt mod_floor(BigInt const & a, BigInt const & m)
{
    BigInt r = a % m;
    if (r < 0)
        r += (m < 0 ? -m : m);
    return r;
}

inline BigInt abs_big(BigInt const & a)
{
    return a < 0 ? BigInt(-a) : a;
}

inline BigInt gcd_big(BigInt const & a, BigInt const & b)
{
    return boost::multiprecision::gcd(abs_big(a), abs_big(b));
}

struct ExtendedGcd {
    BigInt g, x, y; // x*a + y*b = g >= 0
};

inline ExtendedGcd extended_gcd(BigInt const & a, BigInt const & b)
{
    BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

/// Largest r with r*r <= n, n >= 0.
inline BigInt isqrt(BigInt const & n)
{
    if (n < 0)
        throw domain_error("isqrt of a negative number");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(BigInt const & n)
{
    if (n < 0)
        return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

inline bool is_prime(BigInt const & n)
{
    if (n < 2)
        return false;
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    if (n < 1369)
        return true;
    return boost::multiprecision::miller_rabin_test(n, 25);
}

inline BigInt pow_big(BigInt const & base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

// ---------------------------------------------------------------------------
// Small dense square matrices over an exact ring.

template <class T, std::size_t N>
struct Mat {
    std::array<T, N * N> e{}; // row-major

    static constexpr std::size_t size = N;

    static Mat identity()
    {
        Mat m;
        for (std::size_t i = 0; i < N; ++i)
            m(i, i) = T(1);
        return m;
    }

    T & operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
    T const & operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }

    friend bool operator==(Mat const & x, Mat const & y) { return x.e == y.e; }
    friend bool operator!=(Mat const & x, Mat const & y) { return !(x == y); }

    friend Mat operator*(Mat const & x, Mat const & y)
    {
        Mat r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                T acc(0);
                for (std::size_t k = 0; k < N; ++k)
                    acc += x(i, k) * y(k, j);
                r(i, j) = acc;
            }
        return r;
    }

    friend Mat operator+(Mat const & x, Mat const & y)
    {
        Mat r;
        for (std::size_t i = 0; i < N * N; ++i)
            r.e[i] = x.e[i] + y.e[i];
        return r;
    }

    friend Mat operator*(T const & s, Mat const & x)
    {
        Mat r;
        for (std::size_t i = 0; i < N * N; ++i)
            r.e[i] = s * x.e[i];
        return r;
    }

    friend std::ostream & operator<<(std::ostream & o, Mat const & m)
    {
        o << "(";
        for (std::size_t i = 0; i < N; ++i) {
            o << (i ? "; " : "");
            for (std::size_t j = 0; j < N; ++j)
                o << (j ? " " : "") << m(i, j);
        }
        return o << ")";
    }
};

using IMat2 = Mat<BigInt, 2>;
using IMat4 = Mat<BigInt, 4>;
using QMat2 = Mat<Rational, 2>;
using QMat4 = Mat<Rational, 4>;

template <class T, std::size_t N>
Mat<T, N> transpose(Mat<T, N> const & m)
{
    Mat<T, N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            r(j, i) = m(i, j);
    return r;
}

namespace detail {

template <class T, std::size_t N>
Mat<T, N - 1> minor_of(Mat<T, N> const & m, std::size_t row, std::size_t col)
{
    Mat<T, N - 1> r;
    for (std::size_t i = 0, ri = 0; i < N; ++i) {
        if (i == row)
            continue;
        for (std::size_t j = 0, rj = 0; j < N; ++j) {
            if (j == col)
                continue;
            r(ri, rj) = m(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

} // namespace detail

/// Exact determinant by cofactor expansion along the first row.
template <class T, std::size_t N>
T det(Mat<T, N> const & m)
{
    if constexpr (N == 1) {
        return m(0, 0);
    } else if constexpr (N == 2) {
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    } else {
        T acc(0);
        for (std::size_t j = 0; j < N; ++j) {
            if (m(0, j) == 0)
                continue;
            T term = m(0, j) * det(detail::minor_of(m, 0, j));
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }
}

/// Adjugate of a 2x2 matrix: adj(m) * m = det(m) * I.
template <class T>
Mat<T, 2> adjugate(Mat<T, 2> const & m)
{
    Mat<T, 2> r;
    r(0, 0) = m(1, 1);
    r(0, 1) = -m(0, 1);
    r(1, 0) = -m(1, 0);
    r(1, 1) = m(0, 0);
    return r;
}

inline QMat2 inverse(QMat2 const & m)
{
    Rational d = det(m);
    if (d == 0)
        throw domain_error("singular 2x2 matrix");
    return Rational(1) / d * adjugate(m);
}

template <std::size_t N>
Mat<Rational, N> to_rational(Mat<BigInt, N> const & m)
{
    Mat<Rational, N> r;
    for (std::size_t i = 0; i < N * N; ++i)
        r.e[i] = Rational(m.e[i]);
    return r;
}

inline IMat2 mat2(BigInt a, BigInt b, BigInt c, BigInt d)
{
    IMat2 m;
    m.e = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return m;
}

inline QMat2 qmat2(Rational a, Rational b, Rational c, Rational d)
{
    QMat2 m;
    m.e = {std::move(a), std::move(b), std::move(c), std::move(d)};
    return m;
}

// ---------------------------------------------------------------------------
// Number-theoretic helpers.

inline bool is_discriminant(BigInt const & D)
{
    BigInt r = mod_floor(D, 4);
    return r == 0 || r == 1;
}

/// Discriminant of the maximal order of a quadratic field (D != 1).
inline bool is_fundamental_discriminant(BigInt const & D)
{
    if (D == 0 || D == 1)
        return false;
    auto squarefree = [](BigInt n) {
        n = abs_big(n);
        for (BigInt p = 2; p * p <= n; ++p) {
            if (n % (p * p) == 0)
                return false;
            if (n % p == 0)
                n /= p;
        }
        return true;
    };
    BigInt r = mod_floor(D, 4);
    if (r == 1)
        return squarefree(D);
    if (r != 0)
        return false;
    BigInt m = D / 4;
    BigInt rm = mod_floor(m, 4);
    return (rm == 2 || rm == 3) && squarefree(m);
}

/// Jacobi symbol (a|n) for odd positive n.
inline int jacobi(BigInt a, BigInt n)
{
    if (n <= 0 || n % 2 == 0)
        throw domain_error("jacobi symbol needs odd positive modulus");
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            BigInt r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Kronecker symbol (D|n), completed to all integers n.
inline int kronecker(BigInt const & D, BigInt n)
{
    if (!is_discriminant(D))
        throw domain_error("kronecker: " + D.str() + " is not a discriminant (must be 0 or 1 mod 4)");
    if (n == 0)
        return (D == 1 || D == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (D < 0)
            result = -result;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0)
            return 0;
        BigInt r = mod_floor(D, 8);
        if (r == 3 || r == 5)
            result = -result;
    }
    if (n == 1)
        return result;
    return result * jacobi(D, n);
}

/// Largest k with p^k | n.
inline unsigned padic_valuation(BigInt n, BigInt const & p)
{
    if (n == 0)
        throw domain_error("p-adic valuation of 0 is infinite");
    if (!is_prime(p))
        throw domain_error("padic_valuation: " + p.str() + " is not prime");
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

/// Parses a decimal integer; a leading 'm' is accepted as a minus sign.
inline std::optional<BigInt> parse_integer(std::string s)
{
    if (!s.empty() && s[0] == 'm')
        s[0] = '-';
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return std::nullopt;
    if (s[0] == '+')
        s.erase(0, 1);
    return BigInt(s);
}

/// Parses "p", "p/q" (with the same 'm' alias for the sign).
inline std::optional<Rational> parse_rational(std::string const & s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        auto n = parse_integer(s);
        if (!n)
            return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_integer(s.substr(0, slash));
    auto d = parse_integer(s.substr(slash + 1));
    if (!n || !d || *d == 0)
        return std::nullopt;
    return Rational(*n, *d);
}

} // namespace cubecomp

#endif // CUBECOMP_ARITH_HPP
