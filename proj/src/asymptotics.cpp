#include "qhl/asymptotics.hpp"

#include "qhl/cgamma.hpp"
#include "qhl/lfunctions.hpp"
#include "qhl/tables.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qhl {

namespace {

cplx cpow(double x, cplx s) { return std::exp(s * std::log(x)); }
cplx npow(double n, cplx s) { return std::exp(s * std::log(n)); }

// prime norms (one entry per prime, 2 listed once for the ramified
// prime) up to max_norm; cached behind a mutex, returned by value once
std::vector<std::int64_t> prime_norms(std::int64_t max_norm) {
    static std::mutex mx;
    static std::vector<std::int64_t> norms;
    static std::int64_t covered = 0;
    std::lock_guard<std::mutex> lk(mx);
    if (max_norm > covered) {
        norms.clear();
        for (const auto& p : primary_primes(max_norm)) norms.push_back(p.norm());
        norms.push_back(2);
        std::sort(norms.begin(), norms.end());
        covered = max_norm;
    }
    std::vector<std::int64_t> out;
    out.reserve(norms.size());
    for (std::int64_t N : norms)
        if (N <= max_norm) out.push_back(N);
    return out;
}

// single P factor at a prime of norm N
cplx p_factor(double N, cplx z) {
    cplx d = npow(N, z - 0.5) - 1.0;
    if (std::abs(d) < 1e-6) throw std::domain_error("P_eval: factor pole too close");
    return 1.0 + 1.0 / (d * (N + 1.0));
}

}  // namespace

cplx P_eval(cplx z, bool include_even_prime, std::int64_t max_norm) {
    if (z.real() <= 0.5 + 1e-6) throw std::domain_error("P_eval: Re(z) must exceed 1/2");
    // P(z) = zeta_K(z+1/2) * prod (1 - N^(-z-1/2)) * factor(N); the
    // combined bracket is 1 + O(N^(-min(Re z+3/2, 2 Re z))) instead of
    // the bare factor's 1 + O(N^(1/2 - Re z))
    cplx zs = z + 0.5;
    cplx acc = zeta_K(zs);
    for (std::int64_t N : prime_norms(max_norm)) {
        cplx bracket = (1.0 - npow(static_cast<double>(N), -zs)) * p_factor(static_cast<double>(N), z);
        acc *= bracket;
    }
    if (!include_even_prime) acc /= p_factor(2.0, z);
    return acc;
}

cplx euler_ratio_prefactor(cplx alpha, cplx beta) {
    return std::numbers::pi * zeta_K2(1.0 + 2.0 * alpha) / (8.0 * zeta_K2(1.0 + alpha + beta));
}

cplx euler_ratio_product(cplx alpha, cplx beta, std::int64_t max_norm) {
    cplx acc = 1.0;
    for (std::int64_t Ni : prime_norms(max_norm)) {
        if (Ni == 2) continue;
        double N = static_cast<double>(Ni);
        cplx den = npow(N, 1.0 + alpha - beta) * (npow(N, 1.0 + alpha + beta) - 1.0);
        if (std::abs(den) < 1e-12) throw std::domain_error("euler_ratio_product: factor pole");
        acc *= 1.0 + (npow(N, alpha - beta) - 1.0) / den;
    }
    return acc;
}

MainTermBreakdown main_term_ratios(double X, cplx alpha, cplx beta, const WeightFunction& w) {
    if (X <= 0.0) throw std::domain_error("main_term_ratios: X must be positive");
    if (alpha.real() <= 0.0 || alpha.real() >= 0.5 || beta.real() <= 0.0)
        throw std::domain_error("main_term_ratios: shifts outside the valid ranges");
    MainTermBreakdown out;
    out.term1 = X * w.mellin(1.0) * euler_ratio_prefactor(alpha, beta) *
                euler_ratio_product(alpha, beta);
    cplx gfac = cpow(std::numbers::pi, 2.0 * alpha + 1.0) * complex_gamma(1.0 - 2.0 * alpha) *
                complex_gamma(alpha) / (complex_gamma(1.0 - alpha) * complex_gamma(2.0 * alpha));
    cplx zfac = P_eval(1.5 - alpha + beta) * zeta_K(1.0 - 2.0 * alpha) /
                (zeta_K(2.0) * zeta_K(1.0 - alpha + beta));
    cplx two_fac = std::exp((alpha + beta - 2.0) * std::numbers::ln2) /
                   (3.0 * std::exp((1.0 - alpha + beta) * std::numbers::ln2) - 2.0);
    out.term2 = cpow(X, 1.0 - alpha) * w.mellin(1.0 - alpha) * gfac * zfac * two_fac;
    out.exponent1 = 1.0;
    out.exponent2 = 1.0 - alpha.real();
    out.error_exponent_bound = std::max(1.0 - 2.0 * alpha.real(), 1.0 - 2.0 * beta.real());
    return out;
}

namespace {

// first-moment main terms without the range check, so the q_poly limit
// can probe small negative shifts
MainTermBreakdown first_moment_impl(double X, cplx alpha, const WeightFunction& w) {
    MainTermBreakdown out;
    out.term1 = X * w.mellin(1.0) * std::numbers::pi * zeta_K2(1.0 + 2.0 * alpha) /
                (8.0 * zeta_K2(2.0 + 2.0 * alpha));
    // coefficient 2^(2a-3)/3: the beta -> infinity limit of the ratios
    // secondary term, confirmed against direct desk-scale moment sums
    cplx gfac = std::exp((2.0 * alpha - 3.0) * std::numbers::ln2) *
                cpow(std::numbers::pi, 2.0 * alpha + 1.0) * complex_gamma(1.0 - 2.0 * alpha) *
                complex_gamma(alpha) /
                (3.0 * complex_gamma(1.0 - alpha) * complex_gamma(2.0 * alpha));
    out.term2 = cpow(X, 1.0 - alpha) * w.mellin(1.0 - alpha) * gfac *
                zeta_K(1.0 - 2.0 * alpha) / zeta_K(2.0);
    out.exponent1 = 1.0;
    out.exponent2 = 1.0 - alpha.real();
    out.error_exponent_bound = 0.5;
    return out;
}

}  // namespace

MainTermBreakdown main_term_first_moment(double X, cplx alpha, const WeightFunction& w) {
    if (X <= 0.0) throw std::domain_error("main_term_first_moment: X must be positive");
    if (alpha.real() <= 0.0 || alpha.real() >= 0.5)
        throw std::domain_error("main_term_first_moment: Re(alpha) must be in (0, 1/2)");
    return first_moment_impl(X, alpha, w);
}

double q_poly(double X, const WeightFunction& w, double a0) {
    if (X <= 0.0) throw std::domain_error("q_poly: X must be positive");
    if (a0 <= 0.0 || a0 > 0.01) throw std::domain_error("q_poly: probe offset out of range");
    auto sym = [&](double a) {
        cplx plus = first_moment_impl(X, cplx(a, 0.0), w).total();
        cplx minus = first_moment_impl(X, cplx(-a, 0.0), w).total();
        return 0.5 * (plus + minus).real() / X;
    };
    double f1 = sym(a0);
    double f2 = sym(0.5 * a0);
    double q = (4.0 * f2 - f1) / 3.0;
    // the symmetric average is Q + c a0^2 + O(a0^4); if Richardson does
    // not improve on the raw difference the pole cancellation failed
    double spread = std::abs(f1 - f2);
    if (spread > 0.05 * std::abs(q) + 1e-9)
        throw std::runtime_error("q_poly: extrapolation did not converge");
    return q;
}

}  // namespace qhl
