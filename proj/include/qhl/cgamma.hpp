#ifndef QHL_CGAMMA_HPP
#define QHL_CGAMMA_HPP

#include <complex>

namespace qhl {

// Gamma(s) on |s| <= ~50, relative accuracy better than 1e-12; throws at
// the poles s = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> s);

// upper incomplete Gamma(s, x) for x > 0 and complex s (nonpositive
// integer s included)
std::complex<double> upper_gamma(std::complex<double> s, double x);

}  // namespace qhl

#endif
