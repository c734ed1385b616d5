#ifndef QHL_MOMENTS_HPP
#define QHL_MOMENTS_HPP

#include "qhl/weights.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace qhl {

using cplx = std::complex<double>;

struct MomentReport {
    double X = 0.0;
    cplx alpha;
    std::optional<cplx> beta;
    cplx lhs;
    cplx term1;
    cplx term2;
    cplx residual;  // lhs - term1 - term2
    double runtime_s = 0.0;
    std::int64_t n_count = 0;
    std::int64_t flagged = 0;  // near-zero denominators (ratio sums only)
};

// sum over primary n of L(1/2+alpha, chi_{(1+i)^2 n}) w(N(n)/X).  The
// twist enumeration is truncated where w falls below 1e-12 of its max.
// Thread count only affects scheduling; the reduction order is fixed, so
// the result is bit-identical for any thread count.
cplx first_moment_lhs(double X, cplx alpha, const WeightFunction& w, int threads = 1,
                      std::int64_t* n_count = nullptr);

// same sum with summand L(1/2+alpha, chi)/L(1/2+beta, chi).  Twists whose
// denominator has |L| < 1e-6 are excluded and counted in *flagged.
cplx ratios_lhs(double X, cplx alpha, cplx beta, const WeightFunction& w, int threads = 1,
                std::int64_t* n_count = nullptr, std::int64_t* flagged = nullptr);

// sum over primary squarefree m with N(m) <= X of |L(s, chi-tilde_m)|^2
double second_moment_lhs(double X, cplx s, int threads = 1);

// slow cross-check of first_moment_lhs: Euler-criterion symbols, direct
// residue-sum Gauss sums, no shared tables, asymmetric theta split
cplx first_moment_lhs_slow(double X, cplx alpha, const WeightFunction& w);

struct DoubleDirichletCheck {
    cplx valA;   // sum over n of L(w, chi_{(1+i)^2 n}) / N(n)^s
    cplx valB;   // sum over m of L(s, chi-tilde_m) / N(m)^w
    double estA;  // truncation estimates for the dropped tails
    double estB;
};

// both truncated orderings of the double Dirichlet series; they agree up
// to the truncation tails.  Requires Re(s), Re(w) > 3/2.
DoubleDirichletCheck double_dirichlet_A(cplx s, cplx w_param, std::int64_t cutoff);

// least-squares slope of log|residual| against log X, with r^2
std::pair<double, double> exponent_fit(const std::vector<MomentReport>& reports);

// full experiment rows: lhs, the main terms, residual, timing
MomentReport run_first_moment(double X, cplx alpha, const WeightFunction& w, int threads = 1,
                              double max_X = 10000.0, bool force = false);
MomentReport run_ratios(double X, cplx alpha, cplx beta, const WeightFunction& w, int threads = 1,
                        double max_X = 10000.0, bool force = false);

}  // namespace qhl

#endif
