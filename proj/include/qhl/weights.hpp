#ifndef QHL_WEIGHTS_HPP
#define QHL_WEIGHTS_HPP

#include <complex>
#include <functional>
#include <string>

namespace qhl {

// smooth nonnegative test weight w on (0, infinity) with a numeric Mellin
// transform; the moment sums weight each twist by w(N(n)/X)
struct WeightFunction {
    std::string id;
    std::function<double(double)> w;
    double strip_min = 0.0;       // Mellin converges for Re(s) > strip_min
    double support_end = -1.0;    // exact upper support end, < 0 if unbounded

    double eval(double t) const { return t > 0.0 ? w(t) : 0.0; }

    // w-hat(s) = int_0^inf w(t) t^(s-1) dt
    std::complex<double> mellin(std::complex<double> s) const;

    // d/ds of the Mellin transform (integrates against log t)
    std::complex<double> mellin_deriv(std::complex<double> s) const;

    // smallest T with w(t) < floor * max(w) for all t > T
    double support_cutoff(double floor = 1e-12) const;

    static WeightFunction exp_decay();   // e^(-t), w-hat = Gamma
    static WeightFunction exp_both();    // e^(-t-1/t), decays at both ends
    static WeightFunction bump();        // exp(-1/(t(1-t))) on (0,1)
    static WeightFunction custom(std::string name, std::function<double(double)> f,
                                 double strip_min = -1e9, double support_end = -1.0);
    static WeightFunction by_name(const std::string& name);
};

}  // namespace qhl

#endif
