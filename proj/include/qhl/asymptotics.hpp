#ifndef QHL_ASYMPTOTICS_HPP
#define QHL_ASYMPTOTICS_HPP

#include "qhl/weights.hpp"

#include <complex>
#include <cstdint>

namespace qhl {

using cplx = std::complex<double>;

struct MainTermBreakdown {
    cplx term1;                  // X w-hat(1) residue term
    cplx term2;                  // X^(1-alpha) w-hat(1-alpha) term
    double exponent1 = 1.0;      // growth exponents in X of the two terms
    double exponent2 = 1.0;
    double error_exponent_bound = 0.5;

    cplx total() const { return term1 + term2; }
};

// P(z) = prod over primes (1 + 1/((N^(z-1/2)-1)(N+1))), all primes by
// default.  Accelerated by pulling out zeta of z+1/2 so the truncated
// factors converge at rate N^(-min(Re z + 3/2, 2 Re z)).
cplx P_eval(cplx z, bool include_even_prime = true, std::int64_t max_norm = 300000);

// pi zeta2(1+2a) / (8 zeta2(1+a+b)), the constant in front of the odd
// Euler product below (zeta2 = zeta with the even Euler factor removed)
cplx euler_ratio_prefactor(cplx alpha, cplx beta);

// prod over odd primes of 1 + (N^(a-b)-1)/(N^(1+a-b)(N^(1+a+b)-1)),
// without the prefactor
cplx euler_ratio_product(cplx alpha, cplx beta, std::int64_t max_norm = 200000);

// main terms of the shifted first-moment ratio average over primary
// squarefree twists, as a function of the scale X and the shifts
MainTermBreakdown main_term_ratios(double X, cplx alpha, cplx beta, const WeightFunction& w);

// main terms of the shifted first moment at the central point
MainTermBreakdown main_term_first_moment(double X, cplx alpha, const WeightFunction& w);

// the linear polynomial Q evaluated at log X, defined by the alpha -> 0
// limit of main_term_first_moment / X.  The simple poles of the two terms
// sit in the odd part of the Laurent expansion, so the symmetric average
// (F(a0) + F(-a0))/2 cancels them; Richardson extrapolation in a0^2
// removes the next correction.  Throws if the extrapolation is unstable.
// a0 is the larger of the two probe offsets.
double q_poly(double X, const WeightFunction& w, double a0 = 1e-3);

}  // namespace qhl

#endif
