#include "qhl/cgamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhl {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

// Godfrey's 15-term coefficients for g = 607/128
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

cplx gamma_core(cplx s) {
    // requires Re(s) >= 1/2
    cplx a = kLanczosC[0];
    for (int k = 1; k < 15; ++k) a += kLanczosC[k] / (s - 1.0 + static_cast<double>(k));
    cplx t = s + (kLanczosG - 0.5);
    return std::sqrt(2.0 * kPi) * std::pow(t, s - 0.5) * std::exp(-t) * a;
}

bool near_nonpositive_int(cplx s, long& m) {
    double r = std::round(s.real());
    if (r > 0.5) return false;
    if (std::abs(s.real() - r) > 1e-12 || std::abs(s.imag()) > 1e-12) return false;
    m = static_cast<long>(-r);
    return true;
}

// E1(x) by its alternating series; accurate for small x
double expint_e1_series(double x) {
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k < 60; ++k) {
        term *= -x / static_cast<double>(k);
        double add = -term / static_cast<double>(k);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

// Lentz continued fraction for Gamma(s,x); good for x away from 0
cplx upper_gamma_cf(cplx s, double x) {
    const double tiny = 1e-300;
    cplx b = x + 1.0 - s;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 400; ++i) {
        cplx an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        cplx delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

// lower incomplete gamma by the rising-denominator series; s not a
// nonpositive integer
cplx lower_gamma_series(cplx s, double x) {
    cplx den = s;
    cplx term = 1.0 / s;
    cplx sum = term;
    for (int n = 1; n < 500; ++n) {
        den = s + static_cast<double>(n);
        term *= x / den;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-x + s * std::log(x)) * sum;
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> s) {
    long m;
    if (near_nonpositive_int(s, m)) throw std::domain_error("complex_gamma: pole at a nonpositive integer");
    if (s.real() >= 0.5) return gamma_core(s);
    // reflection
    return kPi / (std::sin(kPi * s) * gamma_core(1.0 - s));
}

std::complex<double> upper_gamma(std::complex<double> s, double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_gamma: x must be positive");
    long m;
    if (near_nonpositive_int(s, m)) {
        // Gamma(-m, x) by downward recurrence from Gamma(0,x) = E1(x)
        if (x >= 1.0) return upper_gamma_cf(cplx(-static_cast<double>(m), 0.0), x);
        double g = expint_e1_series(x);
        double ex = std::exp(-x);
        double xp = 1.0 / x;  // x^(s-1) sweeping s = 0, -1, ...
        for (long k = 1; k <= m; ++k) {
            g = (g - ex * xp) / (-static_cast<double>(k));
            xp /= x;
        }
        return cplx(g, 0.0);
    }
    if (x >= std::abs(s) + 1.5) return upper_gamma_cf(s, x);
    return complex_gamma(s) - lower_gamma_series(s, x);
}

}  // namespace qhl
