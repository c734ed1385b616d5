#include "qhl/weights.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <stdexcept>

namespace qhl {

namespace {

// Mellin integrand against an extra log^k t for the k-th derivative
std::complex<double> mellin_impl(const WeightFunction& wf, std::complex<double> s, int log_power) {
    if (s.real() <= wf.strip_min + 1e-9)
        throw std::domain_error("mellin: Re(s) outside the convergence strip of " + wf.id);
    auto f = [&](double t) -> std::complex<double> {
        double v = wf.eval(t);
        if (v == 0.0) return {0.0, 0.0};
        double lt = std::log(t);
        std::complex<double> r = v * std::exp((s - 1.0) * lt);
        for (int k = 0; k < log_power; ++k) r *= lt;
        return r;
    };
    boost::math::quadrature::tanh_sinh<double> inner;
    std::complex<double> total = inner.integrate(f, 0.0, 1.0);
    if (wf.support_end < 0.0) {
        boost::math::quadrature::exp_sinh<double> outer;
        total += outer.integrate([&](double u) { return f(1.0 + u); });
    } else if (wf.support_end > 1.0) {
        total += inner.integrate(f, 1.0, wf.support_end);
    }
    return total;
}

}  // namespace

std::complex<double> WeightFunction::mellin(std::complex<double> s) const {
    return mellin_impl(*this, s, 0);
}

std::complex<double> WeightFunction::mellin_deriv(std::complex<double> s) const {
    return mellin_impl(*this, s, 1);
}

double WeightFunction::support_cutoff(double floor) const {
    if (support_end > 0.0) return support_end;
    // the weights here are unimodal with max O(1); scan for the peak, then
    // bisect the first crossing below floor * max
    double wmax = 0.0;
    for (double t = 1.0 / 64; t <= 64.0; t *= 1.0905077326652577)  // 2^(1/8)
        wmax = std::max(wmax, eval(t));
    double thresh = floor * wmax;
    double lo = 1.0, hi = 2.0;
    while (eval(hi) >= thresh) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw std::runtime_error("support_cutoff: weight decays too slowly");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (eval(mid) >= thresh ? lo : hi) = mid;
    }
    return hi;
}

WeightFunction WeightFunction::exp_decay() {
    WeightFunction wf;
    wf.id = "exp_decay";
    wf.w = [](double t) { return std::exp(-t); };
    wf.strip_min = 0.0;
    return wf;
}

WeightFunction WeightFunction::exp_both() {
    WeightFunction wf;
    wf.id = "exp_both";
    wf.w = [](double t) { return std::exp(-t - 1.0 / t); };
    wf.strip_min = -1e9;  // entire
    return wf;
}

WeightFunction WeightFunction::bump() {
    WeightFunction wf;
    wf.id = "bump";
    wf.w = [](double t) {
        if (t <= 0.0 || t >= 1.0) return 0.0;
        return std::exp(-1.0 / (t * (1.0 - t)));
    };
    wf.strip_min = -1e9;
    wf.support_end = 1.0;
    return wf;
}

WeightFunction WeightFunction::custom(std::string name, std::function<double(double)> f,
                                      double strip_min, double support_end) {
    WeightFunction wf;
    wf.id = std::move(name);
    wf.w = std::move(f);
    wf.strip_min = strip_min;
    wf.support_end = support_end;
    return wf;
}

WeightFunction WeightFunction::by_name(const std::string& name) {
    if (name == "exp_decay") return exp_decay();
    if (name == "exp_both") return exp_both();
    if (name == "bump") return bump();
    throw std::domain_error("unknown weight: " + name);
}

}  // namespace qhl
