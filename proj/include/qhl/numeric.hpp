#ifndef QHL_NUMERIC_HPP
#define QHL_NUMERIC_HPP

#include <complex>

namespace qhl {

// Kahan compensated accumulator
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanComplex {
    KahanSum re;
    KahanSum im;

    void add(const std::complex<double>& z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

}  // namespace qhl

#endif
