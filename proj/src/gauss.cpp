#include "qhl/gauss.hpp"

#include "qhl/numeric.hpp"
#include "qhl/tables.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace qhl {

namespace {

constexpr std::int64_t kResidueCap = 1000000;

std::mutex g_residue_mutex;
std::unordered_map<GaussianInt64, ResidueSystem, GIntHash> g_residue_cache;

ResidueSystem build_residue_system(const GaussianInt64& q) {
    std::int64_t N = q.norm();
    if (N < 1 || N > kResidueCap) throw std::domain_error("residue_system: norm outside [1, 10^6]");
    ResidueSystem rs;
    rs.modulus = q;
    rs.representatives.reserve(static_cast<std::size_t>(N));
    // canonical representatives are fixed points of the reduction; they
    // live in the box |a|,|b| <= sqrt(N/2) + 1
    std::int64_t box = static_cast<std::int64_t>(std::sqrt(static_cast<double>(N) / 2.0)) + 2;
    for (std::int64_t a = -box; a <= box; ++a)
        for (std::int64_t b = -box; b <= box; ++b) {
            GaussianInt64 x{a, b};
            if (mod(x, q) == x) rs.representatives.push_back(x);
        }
    if (rs.representatives.size() != static_cast<std::size_t>(N))
        throw std::logic_error("residue_system: representative count does not match the norm");
    return rs;
}

// exp(2 pi i t / N) with t the exact integer phase numerator
std::complex<double> unit_phase(std::int64_t t, std::int64_t N) {
    t %= N;
    if (t < 0) t += N;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(N);
    return {std::cos(ang), std::sin(ang)};
}

bigint ipow(const bigint& b, int e) {
    bigint r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

int parity_of(const bigint& v) { return static_cast<int>(((v % 2) + 2) % 2); }

}  // namespace

std::complex<double> e_tilde(std::complex<double> z) {
    double ang = 2.0 * std::numbers::pi * z.imag();
    return {std::cos(ang), std::sin(ang)};
}

const ResidueSystem& residue_system(const GaussianInt64& q) {
    std::lock_guard<std::mutex> lk(g_residue_mutex);
    auto it = g_residue_cache.find(q);
    if (it == g_residue_cache.end()) it = g_residue_cache.emplace(q, build_residue_system(q)).first;
    return it->second;
}

std::complex<double> gauss_sum_direct(const GaussianInt64& r, const GaussianInt64& n) {
    if (!is_primary(n)) throw std::domain_error("gauss_sum_direct: n must be odd primary");
    const ResidueSystem& rs = residue_system(n);
    std::int64_t N = n.norm();
    GaussianInt64 rr = mod(r, n);
    GaussianInt64 nbar = n.conj();
    KahanComplex acc;
    for (const auto& x : rs.representatives) {
        int s = quad_symbol(x, n);
        if (s == 0) continue;
        // Im(r x conj(n)) is the exact phase numerator over N(n)
        GaussianInt64 p = rr * x * nbar;
        std::complex<double> ph = unit_phase(p.im, N);
        acc.add(s > 0 ? ph : -ph);
    }
    return acc.value();
}

double ExactGaussSum::value() const {
    return coeff.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
}

ExactGaussSum gauss_sum_fast(const GaussianInt& r, const GaussianInt& n) {
    if (!is_primary(n)) throw std::domain_error("gauss_sum_fast: n must be odd primary");
    PrimaryFactorization f = factor(n);
    ExactGaussSum out;
    out.coeff = 1;
    out.radicand = 1;
    const GaussianInt i_unit{bigint(0), bigint(1)};
    for (const auto& [p, l] : f.factors) {
        bigint N = p.norm();
        int h = 0;
        GaussianInt cof = r;
        bool r_zero = r.is_zero();
        if (!r_zero) {
            for (;;) {
                auto [q, rem] = divmod(cof, p);
                if (!rem.is_zero()) break;
                cof = q;
                ++h;
                if (h > l + 1) break;  // deeper valuation acts like infinity here
            }
        }
        bool h_inf = r_zero || h > l;
        if (h_inf || l <= h) {
            if (l % 2 != 0) return ExactGaussSum{};       // l <= h odd
            out.coeff *= ipow(N, l - 1) * (N - 1);        // l <= h even
        } else if (l == h + 1) {
            if (l % 2 == 0) {
                out.coeff *= -ipow(N, l - 1);
            } else {
                int s = quad_symbol(i_unit * cof, p);
                out.coeff *= s * ipow(N, l - 1);
                out.radicand *= N;
            }
        } else {
            return ExactGaussSum{};  // l >= h+2
        }
    }
    return out;
}

double gauss_sum_fast64(const GaussianInt64& r,
                        const std::vector<std::pair<GaussianInt64, int>>& n_factors) {
    double out = 1.0;
    const GaussianInt64 i_unit{0, 1};
    for (const auto& [p, l] : n_factors) {
        double N = static_cast<double>(p.norm());
        int h = 0;
        GaussianInt64 cof = r;
        bool r_zero = r.is_zero();
        if (!r_zero) {
            for (;;) {
                auto [q, rem] = divmod(cof, p);
                if (!rem.is_zero()) break;
                cof = q;
                ++h;
                if (h > l + 1) break;
            }
        }
        if (r_zero || h >= l) {
            if (l % 2 != 0) return 0.0;
            out *= std::pow(N, l - 1) * (N - 1.0);
        } else if (l == h + 1) {
            if (l % 2 == 0) {
                out *= -std::pow(N, l - 1);
            } else {
                int s = quad_symbol(i_unit * cof, p);
                out *= s * std::pow(N, l - 1) * std::sqrt(N);
            }
        } else {
            return 0.0;
        }
    }
    return out;
}

double gauss_sum_twisted(const GaussianInt& r, int j, const GaussianInt& c) {
    if (j != 1 && j != 2) throw std::domain_error("gauss_sum_twisted: j must be 1 or 2");
    if (!is_primary(c)) throw std::domain_error("gauss_sum_twisted: c must be odd primary");
    int p1 = parity_of(r.im) == 0 ? 1 : -1;
    int p2 = parity_of(r.re + j - 1) == 0 ? 1 : -1;
    int pref = p1 + p2;
    if (pref == 0) return 0.0;
    return symbol_of_i(c) * pref * gauss_sum_fast(r, c).value();
}

std::complex<double> gauss_sum_twisted_direct(const GaussianInt64& r, int j, const GaussianInt64& c) {
    if (j != 1 && j != 2) throw std::domain_error("gauss_sum_twisted_direct: j must be 1 or 2");
    if (!is_primary(c)) throw std::domain_error("gauss_sum_twisted_direct: c must be odd primary");
    GaussianInt64 m = GaussianInt64{2, 0} * c;
    const ResidueSystem& rs = residue_system(m);
    std::int64_t N = m.norm();
    GaussianInt64 rr = mod(r, m);
    GaussianInt64 mbar = m.conj();
    KahanComplex acc;
    for (const auto& x : rs.representatives) {
        if (!is_odd(x)) continue;
        int s = quad_symbol(x, c);
        if (s == 0) continue;
        if (j == 2) s *= psi2_eval(x);
        GaussianInt64 p = rr * x * mbar;
        std::complex<double> ph = unit_phase(p.im, N);
        acc.add(s > 0 ? ph : -ph);
    }
    return acc.value();
}

std::complex<double> gauss_sum_character_direct(const GaussianInt64& r, const QuadraticCharacter& ch) {
    GaussianInt64 m = to_small(ch.modulus);
    if (m.norm() == 1) return {1.0, 0.0};
    const ResidueSystem& rs = residue_system(m);
    std::int64_t N = m.norm();
    GaussianInt64 rr = mod(r, m);
    GaussianInt64 mbar = m.conj();
    KahanComplex acc;
    for (const auto& x : rs.representatives) {
        int s = ch.eval(x);
        if (s == 0) continue;
        GaussianInt64 p = rr * x * mbar;
        std::complex<double> ph = unit_phase(p.im, N);
        acc.add(s > 0 ? ph : -ph);
    }
    return acc.value();
}

std::complex<double> gauss_sum_primitive_char(const QuadraticCharacter& ch) {
    if (!ch.primitive) throw std::domain_error("gauss_sum_primitive_char: character must be primitive");
    const GaussianInt& c1 = ch.kernel;
    GaussianInt qe = divexact(ch.modulus, c1);
    double g_odd = gauss_sum_fast(GaussianInt{bigint(1), bigint(0)}, c1).value();
    if (qe.is_unit()) return {g_odd, 0.0};

    auto eps = [&ch](const GaussianInt& x) {
        int v = psi_eval(ch.psi, x);
        if (ch.has_psi2) v *= psi2_eval(x);
        return v;
    };
    // g(1, eps) over the small even modulus
    GaussianInt64 qes = to_small(qe);
    const ResidueSystem& rs = residue_system(qes);
    std::int64_t N = qes.norm();
    GaussianInt64 qbar = qes.conj();
    KahanComplex acc;
    for (const auto& x : rs.representatives) {
        if (!is_odd(x)) continue;
        int s = eps(to_big(x));
        GaussianInt64 p = x * qbar;
        std::complex<double> ph = unit_phase(p.im, N);
        acc.add(static_cast<double>(s) * ph);
    }
    std::complex<double> g_even = acc.value();

    // cross factors from the Chinese remainder splitting of the modulus
    double cross = static_cast<double>(eps(c1) * (c1.is_one() ? 1 : quad_symbol(qe, c1)));
    return cross * g_even * g_odd;
}

}  // namespace qhl
