#ifndef QHL_GINT_HPP
#define QHL_GINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace qhl {

using bigint = boost::multiprecision::cpp_int;

// Gaussian integer a+bi with exact component arithmetic.  The component
// type is a template parameter: bigint for the public exact type,
// int64_t for the sieve/moment hot paths where norms stay far below 2^62.
template <typename I>
struct GInt {
    I re{};
    I im{};

    GInt() = default;
    GInt(I r, I i) : re(std::move(r)), im(std::move(i)) {}
    explicit GInt(I r) : re(std::move(r)), im(0) {}

    friend GInt operator+(const GInt& a, const GInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GInt operator-(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GInt operator-(const GInt& a) { return {-a.re, -a.im}; }
    friend GInt operator*(const GInt& a, const GInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GInt& operator+=(const GInt& b) { re += b.re; im += b.im; return *this; }
    GInt& operator-=(const GInt& b) { re -= b.re; im -= b.im; return *this; }
    GInt& operator*=(const GInt& b) { *this = *this * b; return *this; }

    friend bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GInt& a, const GInt& b) { return !(a == b); }

    GInt conj() const { return {re, -im}; }
    I norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }
    bool is_one() const { return re == 1 && im == 0; }

    // multiplication by i^k, k taken mod 4
    GInt mul_i(int k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    // ordering by (norm, re, im); used for canonical enumeration order
    friend bool operator<(const GInt& a, const GInt& b) {
        I na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

using GaussianInt = GInt<bigint>;
using GaussianInt64 = GInt<std::int64_t>;

inline GaussianInt to_big(const GaussianInt64& a) { return {bigint(a.re), bigint(a.im)}; }
inline GaussianInt64 to_small(const GaussianInt& a) {
    return {static_cast<std::int64_t>(a.re), static_cast<std::int64_t>(a.im)};
}

namespace detail {
// ceil((2p - n) / (2n)) for n > 0: nearest integer to p/n with ties
// rounded toward -infinity
template <typename I>
I round_half_down(const I& p, const I& n) {
    I num = 2 * p - n;
    I den = 2 * n;
    I q = num / den;
    if (num % den != 0 && ((num > 0) == (den > 0))) q += 1;  // ceil
    return q;
}
}  // namespace detail

// Euclidean division: a = q*b + r with N(r) <= N(b)/2.  Both coordinates
// of a/b are rounded to the nearest integer, ties toward -infinity, so the
// quotient is platform independent.
template <typename I>
std::pair<GInt<I>, GInt<I>> divmod(const GInt<I>& a, const GInt<I>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    I n = b.norm();
    GInt<I> t = a * b.conj();
    GInt<I> q{detail::round_half_down(t.re, n), detail::round_half_down(t.im, n)};
    GInt<I> r = a - q * b;
    return {q, r};
}

template <typename I>
GInt<I> mod(const GInt<I>& a, const GInt<I>& b) { return divmod(a, b).second; }

// exact division; throws if b does not divide a
template <typename I>
GInt<I> divexact(const GInt<I>& a, const GInt<I>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("divexact: not divisible");
    return q;
}

template <typename I>
bool divides(const GInt<I>& d, const GInt<I>& a) {
    return !d.is_zero() && mod(a, d).is_zero();
}

// n odd <=> norm odd <=> re+im odd
template <typename I>
bool is_odd(const GInt<I>& n) { return ((n.re + n.im) % 2) != 0; }

// primary: n == 1 mod (1+i)^3, equivalently (re,im) == (1,0) or (3,2) mod 4
template <typename I>
bool is_primary(const GInt<I>& n) {
    I a = ((n.re % 4) + 4) % 4;
    I b = ((n.im % 4) + 4) % 4;
    return (a == 1 && b == 0) || (a == 3 && b == 2);
}

// 1 or 2 for a primary element; see the two congruence classes above
template <typename I>
int classify_type(const GInt<I>& n) {
    I a = ((n.re % 4) + 4) % 4;
    I b = ((n.im % 4) + 4) % 4;
    if (a == 1 && b == 0) return 1;
    if (a == 3 && b == 2) return 2;
    throw std::domain_error("classify_type: not primary");
}

// n = i^k * m with m primary; returns (k, m).  Exactly one associate of an
// odd element is primary.
template <typename I>
std::pair<int, GInt<I>> normalize_primary(const GInt<I>& n) {
    if (n.is_zero() || !is_odd(n)) throw std::domain_error("normalize_primary: input must be odd and nonzero");
    for (int k = 0; k < 4; ++k) {
        GInt<I> m = n.mul_i(-k);  // n = i^k * m
        if (is_primary(m)) return {k, m};
    }
    throw std::logic_error("normalize_primary: no primary associate");  // unreachable
}

// gcd normalized to i^0 (1+i)^k * primary (primary itself when odd)
template <typename I>
GInt<I> gcd(GInt<I> a, GInt<I> b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0,0) undefined");
    while (!b.is_zero()) {
        GInt<I> r = mod(a, b);
        a = b;
        b = r;
    }
    // strip (1+i) powers, normalize the odd part
    const GInt<I> one_plus_i{I(1), I(1)};
    int two_exp = 0;
    while (!is_odd(a)) {
        a = divexact(a, one_plus_i);
        ++two_exp;
    }
    a = normalize_primary(a).second;
    for (int k = 0; k < two_exp; ++k) a = a * one_plus_i;
    return a;
}

template <typename I>
bool coprime(const GInt<I>& a, const GInt<I>& b) {
    return gcd(a, b).is_unit();
}

inline std::string str_of(const bigint& v) { return v.str(); }
inline std::string str_of(std::int64_t v) { return std::to_string(v); }

template <typename I>
std::string format_gint(const GInt<I>& z) {
    if (z.im == 0) return str_of(z.re);
    std::string s;
    if (z.re != 0) s = str_of(z.re);
    if (z.im > 0 && !s.empty()) s += "+";
    if (z.im == -1) s += "-";
    else if (z.im != 1) s += str_of(z.im);
    s += "i";
    return s;
}

GaussianInt parse_gint(const std::string& s);

struct GIntHash {
    std::size_t operator()(const GaussianInt64& z) const {
        std::uint64_t a = static_cast<std::uint64_t>(z.re);
        std::uint64_t b = static_cast<std::uint64_t>(z.im);
        a *= 0x9e3779b97f4a7c15ULL;
        b *= 0xc2b2ae3d27d4eb4fULL;
        std::uint64_t h = a ^ (b + 0x165667b19e3779f9ULL + (a << 12) + (a >> 7));
        return static_cast<std::size_t>(h);
    }
};

}  // namespace qhl

#endif
