#pragma once

#include "lineup/rational.hpp"

#include <cstddef>
#include <memory>
#include <cstdint>
#include <stdexcept>

namespace lineup::detail {

/// Thrown by the machine-integer kernels when a result leaves int64 range.
/// Callers rerun the computation on arbitrary-precision integers.
struct ArithmeticOverflow : std::overflow_error {
    ArithmeticOverflow() : std::overflow_error("int64 overflow in exact kernel") {}
};

using Wide = __int128;

inline std::int64_t narrow(Wide v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw ArithmeticOverflow();
    return static_cast<std::int64_t>(v);
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_gcd(Wide a, Wide b)
{
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
inline int sign_of(const Integer& x) { return sgn(x); }

inline std::int64_t dot(const std::int64_t* a, const std::int64_t* b, std::size_t n)
{
    Wide acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Wide p = static_cast<Wide>(a[i]) * b[i];
        if (__builtin_add_overflow(acc, p, &acc))
            throw ArithmeticOverflow();
    }
    return narrow(acc);
}

inline Integer dot(const Integer* a, const Integer* b, std::size_t n)
{
    Integer acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * b[i];
    return acc;
}

/// out = a*u + b*v, divided by the gcd of its entries.
inline void combine(std::int64_t* out, std::int64_t a, const std::int64_t* u, std::int64_t b,
                    const std::int64_t* v, std::size_t n)
{
    Wide tmp[64];
    Wide* buf = tmp;
    std::unique_ptr<Wide[]> heap;
    if (n > 64) {
        heap.reset(new Wide[n]);
        buf = heap.get();
    }
    Wide g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Wide x = static_cast<Wide>(a) * u[i];
        Wide y = static_cast<Wide>(b) * v[i];
        Wide s;
        if (__builtin_add_overflow(x, y, &s))
            throw ArithmeticOverflow();
        buf[i] = s;
        if (g != 1)
            g = wide_gcd(g, s);
    }
    for (std::size_t i = 0; i < n; ++i)
        out[i] = narrow(g > 1 ? buf[i] / g : buf[i]);
}

inline void combine(Integer* out, const Integer& a, const Integer* u, const Integer& b, const Integer* v,
                    std::size_t n)
{
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * u[i] + b * v[i];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1)
        for (std::size_t i = 0; i < n; ++i)
            mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), g.get_mpz_t());
}

inline void make_primitive(std::int64_t* v, std::size_t n)
{
    Wide g = 0;
    for (std::size_t i = 0; i < n; ++i)
        g = wide_gcd(g, v[i]);
    if (g > 1)
        for (std::size_t i = 0; i < n; ++i)
            v[i] = static_cast<std::int64_t>(v[i] / g);
}

inline void make_primitive(Integer* v, std::size_t n)
{
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    if (g > 1)
        for (std::size_t i = 0; i < n; ++i)
            mpz_divexact(v[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
}

inline std::int64_t checked_neg(std::int64_t x)
{
    if (x == INT64_MIN)
        throw ArithmeticOverflow();
    return -x;
}
inline Integer checked_neg(const Integer& x) { return -x; }

inline std::int64_t narrow_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t d;
    if (__builtin_sub_overflow(a, b, &d))
        throw ArithmeticOverflow();
    return d;
}
inline Integer narrow_sub(const Integer& a, const Integer& b) { return a - b; }

inline Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }
inline Integer to_integer(const Integer& x) { return x; }

template <class Int>
Int from_integer(const Integer& x);

template <>
inline std::int64_t from_integer<std::int64_t>(const Integer& x)
{
    if (!x.fits_slong_p())
        throw ArithmeticOverflow();
    return x.get_si();
}

template <>
inline Integer from_integer<Integer>(const Integer& x)
{
    return x;
}

}  // namespace lineup::detail
