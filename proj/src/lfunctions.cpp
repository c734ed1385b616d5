#include "qhl/lfunctions.hpp"

#include "qhl/cgamma.hpp"
#include "qhl/gauss.hpp"
#include "qhl/numeric.hpp"
#include "qhl/tables.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qhl {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kThetaCut = 40.0;  // exp(-40) ~ 4e-18 per dropped term

std::mutex g_table_mutex;
std::unique_ptr<IdealTable> g_ideal_table;

cplx cpow(double x, cplx s) { return std::exp(s * std::log(x)); }

bool is_perfect_square(const GaussianInt& n) {
    PrimaryFactorization f = factor(n);
    if (f.unit_exp % 2 != 0 || f.two_exp % 2 != 0) return false;
    for (const auto& [p, e] : f.factors)
        if (e % 2 != 0) return false;
    return true;
}

// 4 (2pi)^(-s) Gamma(s) L(s, ch) for primitive nontrivial ch, via the
// theta split at y0 = scale/(2 sqrt(N(q)))
cplx theta_completed(const QuadraticCharacter& ch, cplx s, double scale) {
    double Nq = ch.modulus.norm().convert_to<double>();
    double y0 = scale / (2.0 * std::sqrt(Nq));
    double y0p = 1.0 / (4.0 * Nq * y0);
    std::int64_t M1 = static_cast<std::int64_t>(std::ceil(kThetaCut / (kTwoPi * y0)));
    std::int64_t M2 = static_cast<std::int64_t>(std::ceil(kThetaCut / (kTwoPi * y0p)));
    const IdealTable& tab = shared_ideal_table(std::max(M1, M2));

    cplx g1 = gauss_sum_primitive_char(ch);
    cplx pref = g1 / (2.0 * Nq) * cpow(4.0 * Nq, 1.0 - s);
    KahanComplex S1, S2;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        std::int64_t N = tab.entry(i).norm;
        if (N > M1 && N > M2) break;
        int c = ch.eval(tab.generator(i));
        if (c == 0) continue;
        double dc = static_cast<double>(c);
        double dN = static_cast<double>(N);
        if (N <= M1) S1.add(dc * cpow(kTwoPi * dN, -s) * upper_gamma(s, kTwoPi * dN * y0));
        if (N <= M2) S2.add(dc * cpow(kTwoPi * dN, s - 1.0) * upper_gamma(1.0 - s, kTwoPi * dN * y0p));
    }
    return 4.0 * (S1.value() + pref * S2.value());
}

}  // namespace

const IdealTable& shared_ideal_table(std::int64_t min_norm) {
    std::lock_guard<std::mutex> lk(g_table_mutex);
    if (!g_ideal_table || g_ideal_table->max_norm() < min_norm) {
        std::int64_t target = 1024;
        while (target < min_norm) target *= 2;
        g_ideal_table = std::make_unique<IdealTable>(target);
    }
    return *g_ideal_table;
}

std::complex<double> zeta_K(std::complex<double> s) {
    if (std::abs(s - 1.0) < 1e-12) throw std::domain_error("zeta_K: pole at s = 1");
    const double y0 = 0.5;  // the self-dual split point for conductor 1
    std::int64_t M = static_cast<std::int64_t>(std::ceil(kThetaCut / kPi));
    const IdealTable& tab = shared_ideal_table(M);
    KahanComplex S1, S2;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        std::int64_t N = tab.entry(i).norm;
        if (N > M) break;
        double dN = static_cast<double>(N);
        S1.add(cpow(kTwoPi * dN, -s) * upper_gamma(s, kPi * dN));
        S2.add(cpow(kPi * dN / 2.0, s - 1.0) * upper_gamma(1.0 - s, kPi * dN));
    }
    cplx total = 4.0 * S1.value() + cpow(y0, s - 1.0) / (2.0 * (s - 1.0)) - cpow(y0, s) / s +
                 2.0 * S2.value();
    return total / (4.0 * cpow(kTwoPi, -s) * complex_gamma(s));
}

std::complex<double> zeta_K2(std::complex<double> s) {
    return zeta_K(s) * (1.0 - cpow(2.0, -s));
}

std::complex<double> completed_lambda(const QuadraticCharacter& ch, std::complex<double> s,
                                      double split_scale) {
    if (!ch.primitive) throw std::domain_error("completed_lambda: character must be primitive");
    if (ch.is_trivial()) throw std::domain_error("completed_lambda: trivial character has a polar completion");
    double Nq = ch.modulus.norm().convert_to<double>();
    return cpow(4.0 * Nq, s / 2.0) * theta_completed(ch, s, split_scale) / 4.0;
}

LEvaluation l_value(const QuadraticCharacter& ch, std::complex<double> s) {
    if (!ch.primitive) throw std::domain_error("l_value: character must be primitive");
    LEvaluation out;
    out.s = s;
    out.method = LEvaluation::Method::afe;
    if (ch.is_trivial()) {
        out.value = zeta_K(s);
        out.truncation_norm = static_cast<std::int64_t>(std::ceil(kThetaCut / kPi));
        out.est_error = 1e-12 * std::abs(out.value);
        return out;
    }
    double Nq = ch.modulus.norm().convert_to<double>();
    cplx denom = cpow(kTwoPi, -s) * complex_gamma(s);
    out.value = theta_completed(ch, s, 1.0) / (4.0 * denom);
    out.truncation_norm = static_cast<std::int64_t>(std::ceil(kThetaCut * std::sqrt(Nq) / kPi));
    // heuristic: dropped theta terms are below exp(-cut), the working
    // error is dominated by rounding in the two sums
    out.est_error =
        (std::exp(-kThetaCut) * static_cast<double>(out.truncation_norm) + 1e-13) *
        (std::abs(out.value) + 1.0);
    return out;
}

LEvaluation l_value_direct(const QuadraticCharacter& ch, std::complex<double> s,
                           std::int64_t max_norm) {
    if (s.real() <= 1.05) throw std::domain_error("l_value_direct: needs Re(s) > 1.05");
    const IdealTable& tab = shared_ideal_table(max_norm);
    KahanComplex acc;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        std::int64_t N = tab.entry(i).norm;
        if (N > max_norm) break;
        int c = ch.eval(tab.generator(i));
        if (c == 0) continue;
        acc.add(static_cast<double>(c) * cpow(static_cast<double>(N), -s));
    }
    LEvaluation out;
    out.s = s;
    out.value = acc.value();
    out.method = LEvaluation::Method::direct_series;
    out.truncation_norm = max_norm;
    double sigma = s.real();
    out.est_error = kPi * std::pow(static_cast<double>(max_norm), 1.0 - sigma) / (sigma - 1.0);
    return out;
}

LEvaluation l_value_imprimitive(const GaussianInt& m, std::complex<double> s) {
    if (m.is_zero()) throw std::domain_error("l_value_imprimitive: zero twist");
    GaussianInt mm = m;
    const GaussianInt one_plus_i{bigint(1), bigint(1)};
    int e = 0;
    while (!is_odd(mm)) {
        mm = divexact(mm, one_plus_i);
        ++e;
    }
    auto [u, n] = normalize_primary(mm);
    Psi j;
    if (u % 2 == 0 && e % 2 == 0) j = Psi::one;
    else if (u % 2 != 0 && e % 2 == 0) j = Psi::i;
    else if (u % 2 == 0) j = Psi::one_plus_i;
    else j = Psi::i_times_one_plus_i;

    QuadraticCharacter ch = primitive_inducing(n, j);
    LEvaluation out = l_value(ch, s);
    cplx corr = 1.0;
    PrimaryFactorization f = factor(n);
    for (const auto& [p, ee] : f.factors) {
        if (ee % 2 != 0) continue;  // odd-exponent primes stay in the kernel
        corr *= 1.0 - static_cast<double>(ch.eval(p)) * cpow(p.norm().convert_to<double>(), -s);
    }
    if (is_odd(ch.modulus))
        corr *= 1.0 - static_cast<double>(ch.eval(one_plus_i)) * cpow(2.0, -s);
    out.value *= corr;
    out.method = LEvaluation::Method::euler_removed;
    out.est_error *= std::abs(corr) + 1.0;
    return out;
}

std::complex<double> root_number(const QuadraticCharacter& ch) {
    if (!ch.primitive) throw std::domain_error("root_number: character must be primitive");
    if (ch.is_trivial()) return {1.0, 0.0};
    double Nq = ch.modulus.norm().convert_to<double>();
    return gauss_sum_primitive_char(ch) / std::sqrt(Nq);
}

double verify_poisson(const GaussianInt64& n, double y) {
    if (!is_primary(n)) throw std::domain_error("verify_poisson: n must be primary");
    if (is_perfect_square(to_big(n))) throw std::domain_error("verify_poisson: n must not be a square");
    if (y < 0.05 || y > 20.0) throw std::domain_error("verify_poisson: y outside the supported range");
    int j = classify_type(n);
    double N2n = 4.0 * static_cast<double>(n.norm());

    const double cut = 43.0;
    // left side: element sum of chi-tilde with the Gaussian-type weight
    std::int64_t Mm = static_cast<std::int64_t>(std::ceil(cut / (kTwoPi * y)));
    KahanSum lhs;
    for (const auto& m : enumerate_primary(Mm)) {
        int c = quad_symbol(m, n);
        if (c == 0) continue;
        if (j == 2) c *= psi2_eval(m);
        lhs.add(c * std::exp(-kTwoPi * y * static_cast<double>(m.norm())));
    }

    // right side: Gauss-sum dual over all nonzero ideals
    double cexp = kPi / (2.0 * y * N2n);
    std::int64_t Mk = static_cast<std::int64_t>(std::ceil(cut / cexp));
    const IdealTable& tab = shared_ideal_table(Mk);
    PrimaryFactorization fb = factor(to_big(n));
    std::vector<std::pair<GaussianInt64, int>> fac;
    for (const auto& [p, e] : fb.factors) fac.emplace_back(to_small(p), e);
    int si = symbol_of_i(n);
    KahanSum rhs;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        std::int64_t N = tab.entry(i).norm;
        if (N > Mk) break;
        const GaussianInt64& k = tab.generator(i);
        int p1 = (((k.im % 2) + 2) % 2) == 0 ? 1 : -1;
        int p2 = (((k.re + j - 1) % 2) + 2) % 2 == 0 ? 1 : -1;
        if (p1 + p2 == 0) continue;
        double g = si * (p1 + p2) * gauss_sum_fast64(k, fac);
        if (g == 0.0) continue;
        rhs.add(g * std::exp(-cexp * static_cast<double>(N)));
    }
    double left = 4.0 * lhs.value();
    double right = 4.0 * rhs.value() / (2.0 * y * N2n);
    return std::abs(left - right);
}

Prop24Check verify_prop24(const GaussianInt64& n, std::complex<double> s, std::int64_t k_cut) {
    if (!is_primary(n)) throw std::domain_error("verify_prop24: n must be primary");
    if (is_perfect_square(to_big(n))) throw std::domain_error("verify_prop24: n must not be a square");
    if (s.real() >= 0.0) throw std::domain_error("verify_prop24: needs Re(s) < 0");
    int j = classify_type(n);
    double N2n = 4.0 * static_cast<double>(n.norm());

    const GaussianInt two_i{bigint(0), bigint(2)};  // (1+i)^2
    LEvaluation lhs = l_value_imprimitive(two_i * to_big(n), s);

    PrimaryFactorization fb = factor(to_big(n));
    std::vector<std::pair<GaussianInt64, int>> fac;
    for (const auto& [p, e] : fb.factors) fac.emplace_back(to_small(p), e);
    int si = symbol_of_i(n);
    const IdealTable& tab = shared_ideal_table(k_cut);
    KahanComplex S;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        std::int64_t N = tab.entry(i).norm;
        if (N > k_cut) break;
        const GaussianInt64& k = tab.generator(i);
        int p1 = (((k.im % 2) + 2) % 2) == 0 ? 1 : -1;
        int p2 = (((k.re + j - 1) % 2) + 2) % 2 == 0 ? 1 : -1;
        if (p1 + p2 == 0) continue;
        double g = si * (p1 + p2) * gauss_sum_fast64(k, fac);
        if (g == 0.0) continue;
        S.add(g * cpow(static_cast<double>(N), s - 1.0));
    }
    cplx pref = cpow(N2n, -s) * cpow(kPi, 2.0 * s - 1.0) * complex_gamma(1.0 - s) /
                (4.0 * complex_gamma(s));
    cplx rhs = pref * 4.0 * S.value();

    double sigma = s.real();
    double gbound = 2.0 * static_cast<double>(n.norm());
    double tail = std::abs(pref) * 4.0 * (kPi / 4.0) * gbound *
                  std::pow(static_cast<double>(k_cut), sigma) / (-sigma);
    Prop24Check out;
    out.lhs = lhs.value;
    out.rhs = rhs;
    out.residual = std::abs(lhs.value - rhs);
    out.tail_estimate = tail + lhs.est_error;
    return out;
}

}  // namespace qhl
