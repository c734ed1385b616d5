#include "qhl/characters.hpp"

#include "qhl/tables.hpp"

#include <bit>
#include <stdexcept>

namespace qhl {

namespace {

// (i/n) for primary n = x+yi is +1 iff x == 1 mod 4
template <typename I>
int supp_i(const GInt<I>& n) {
    I x4 = ((n.re % 4) + 4) % 4;
    return x4 == 1 ? 1 : -1;
}

// ((1+i)/n) = (-1)^((x-y-1-y^2)/4) for primary n = x+yi
template <typename I>
int supp_one_plus_i(const GInt<I>& n) {
    I v = n.re - n.im - 1 - n.im * n.im;
    I e = v / 4;
    return (((e % 2) + 2) % 2) == 0 ? 1 : -1;
}

int bit_width_of(const bigint& v) { return static_cast<int>(boost::multiprecision::msb(v)) + 1; }
int bit_width_of(std::int64_t v) { return std::bit_width(static_cast<std::uint64_t>(v)); }

// reciprocity loop; each flip at least halves the norm of the lower
// argument, the cap only guards against internal errors
template <typename I>
int quad_symbol_impl(GInt<I> a, const GInt<I>& n) {
    if (n.is_zero() || !is_odd(n)) throw std::domain_error("quad_symbol: lower argument must be odd and nonzero");
    GInt<I> m = normalize_primary(n).second;
    if (m.is_unit()) return 1;
    const GInt<I> one_plus_i{I(1), I(1)};
    int acc = 1;
    int cap = 10 * bit_width_of(m.norm()) + 16;
    for (int iter = 0; iter < cap; ++iter) {
        a = mod(a, m);
        if (a.is_zero()) return 0;
        int t = 0;
        while (!is_odd(a)) {
            a = divexact(a, one_plus_i);
            ++t;
        }
        auto [k, ap] = normalize_primary(a);
        if (t % 2 != 0) acc *= supp_one_plus_i(m);
        if (k % 2 != 0) acc *= supp_i(m);
        if (ap.is_one()) return acc;
        a = m;
        m = ap;
    }
    throw std::logic_error("quad_symbol: reciprocity recursion exceeded its depth cap");
}

GaussianInt powmod_g(GaussianInt base, bigint e, const GaussianInt& q) {
    GaussianInt r{bigint(1), bigint(0)};
    base = mod(base, q);
    while (e > 0) {
        if ((e & 1) != 0) r = mod(r * base, q);
        base = mod(base * base, q);
        e >>= 1;
    }
    return r;
}

// Euler criterion at a single prime
int euler_symbol(const GaussianInt& a, const GaussianInt& p) {
    bigint e = (p.norm() - 1) / 2;
    GaussianInt r = powmod_g(a, e, p);
    if (r.is_zero()) return 0;
    if (mod(r - GaussianInt{bigint(1), bigint(0)}, p).is_zero()) return 1;
    if (mod(r + GaussianInt{bigint(1), bigint(0)}, p).is_zero()) return -1;
    throw std::logic_error("euler_symbol: criterion value is not 0, 1 or -1");
}

}  // namespace

int quad_symbol_naive(const GaussianInt& a, const GaussianInt& n) {
    if (n.is_zero() || !is_odd(n)) throw std::domain_error("quad_symbol_naive: lower argument must be odd and nonzero");
    GaussianInt m = normalize_primary(n).second;
    if (m.is_unit()) return 1;
    PrimaryFactorization f = factor(m);
    int acc = 1;
    for (const auto& [p, e] : f.factors) {
        int s = euler_symbol(a, p);
        if (s == 0) return 0;
        if (e % 2 != 0) acc *= s;
    }
    return acc;
}

int quad_symbol(const GaussianInt& a, const GaussianInt& n) { return quad_symbol_impl(a, n); }
int quad_symbol(const GaussianInt64& a, const GaussianInt64& n) { return quad_symbol_impl(a, n); }

int symbol_of_i(const GaussianInt& n) { return supp_i(normalize_primary(n).second); }
int symbol_of_i(const GaussianInt64& n) { return supp_i(normalize_primary(n).second); }
int symbol_of_one_plus_i(const GaussianInt& n) { return supp_one_plus_i(normalize_primary(n).second); }
int symbol_of_one_plus_i(const GaussianInt64& n) { return supp_one_plus_i(normalize_primary(n).second); }

int chi_m(const GaussianInt& m, const GaussianInt& a) {
    if (!a.is_zero() && a.is_unit()) return 1;
    return quad_symbol(m, a);
}

std::string psi_name(Psi j) {
    switch (j) {
        case Psi::one: return "1";
        case Psi::i: return "i";
        case Psi::one_plus_i: return "1+i";
        default: return "i(1+i)";
    }
}

Psi psi_from_name(const std::string& name) {
    if (name == "1") return Psi::one;
    if (name == "i") return Psi::i;
    if (name == "1+i") return Psi::one_plus_i;
    if (name == "i(1+i)") return Psi::i_times_one_plus_i;
    throw std::invalid_argument("psi_from_name: unknown label '" + name + "'");
}

int psi_eval(Psi j, const GaussianInt& a) {
    if (j == Psi::one) return 1;
    if (a.is_zero() || !is_odd(a)) throw std::domain_error("psi_eval: argument must be odd and nonzero");
    GaussianInt p = normalize_primary(a).second;
    switch (j) {
        case Psi::i: return supp_i(p);
        case Psi::one_plus_i: return supp_one_plus_i(p);
        default: return supp_i(p) * supp_one_plus_i(p);
    }
}

int psi_eval(Psi j, const GaussianInt64& a) {
    if (j == Psi::one) return 1;
    if (a.is_zero() || !is_odd(a)) throw std::domain_error("psi_eval: argument must be odd and nonzero");
    GaussianInt64 p = normalize_primary(a).second;
    switch (j) {
        case Psi::i: return supp_i(p);
        case Psi::one_plus_i: return supp_one_plus_i(p);
        default: return supp_i(p) * supp_one_plus_i(p);
    }
}

int psi2_eval(const GaussianInt& a) {
    if (a.is_zero() || !is_odd(a)) throw std::domain_error("psi2_eval: argument must be odd and nonzero");
    return (a.re % 2) == 0 ? -1 : 1;
}

int psi2_eval(const GaussianInt64& a) {
    if (a.is_zero() || !is_odd(a)) throw std::domain_error("psi2_eval: argument must be odd and nonzero");
    return (a.re % 2) == 0 ? -1 : 1;
}

int QuadraticCharacter::eval(const GaussianInt& a) const {
    if (a.is_zero()) return 0;
    if (!modulus.is_unit() && !coprime(a, modulus)) return 0;
    int v = kernel.is_one() ? 1 : quad_symbol(a, kernel);
    if (v == 0) return 0;
    if (psi != Psi::one) v *= psi_eval(psi, a);
    if (has_psi2) v *= psi2_eval(a);
    return v;
}

int QuadraticCharacter::eval(const GaussianInt64& a) const {
    // components of the conductor stay tiny in every use here, so the
    // int64 arithmetic path applies; fall back to exact otherwise
    const bigint small_cap = bigint(1) << 30;
    if (boost::multiprecision::abs(modulus.re) > small_cap || boost::multiprecision::abs(modulus.im) > small_cap)
        return eval(to_big(a));
    if (a.is_zero()) return 0;
    GaussianInt64 m = to_small(modulus);
    GaussianInt64 k = to_small(kernel);
    if (!m.is_unit() && !gcd(a, m).is_unit()) return 0;
    int v = k.is_one() ? 1 : quad_symbol(a, k);
    if (v == 0) return 0;
    if (psi != Psi::one) v *= psi_eval(psi, a);
    if (has_psi2) v *= psi2_eval(a);
    return v;
}

QuadraticCharacter primitive_inducing(const GaussianInt& n, Psi j) {
    if (!is_primary(n)) throw std::domain_error("primitive_inducing: input must be primary");
    auto [c1, c2] = squarefree_decompose(n);
    QuadraticCharacter ch;
    ch.kernel = c1;
    ch.psi = j;
    ch.twist_label = n;
    ch.primitive = true;
    int type = c1.is_one() ? 1 : classify_type(c1);
    ch.has_psi2 = type == 2;
    const GaussianInt two{bigint(2), bigint(0)};
    const GaussianInt four{bigint(4), bigint(0)};
    const GaussianInt opi5{bigint(-4), bigint(-4)};  // (1+i)^5
    switch (j) {
        case Psi::one:
            ch.modulus = type == 1 ? c1 : two * c1;
            break;
        case Psi::i:
            ch.modulus = four * c1;
            break;
        default:
            ch.modulus = opi5 * c1;
            break;
    }
    return ch;
}

int chi_tilde_eval(const GaussianInt& n, const GaussianInt& m) {
    if (!is_primary(n)) throw std::domain_error("chi_tilde_eval: twist must be primary");
    if (m.is_zero() || !is_odd(m)) return 0;
    int v = quad_symbol(m, n);
    if (v != 0 && classify_type(n) == 2) v *= psi2_eval(m);
    return v;
}

}  // namespace qhl
