#ifndef QHL_LFUNCTIONS_HPP
#define QHL_LFUNCTIONS_HPP

#include "qhl/characters.hpp"
#include "qhl/gint.hpp"

#include <complex>
#include <cstdint>

namespace qhl {

class IdealTable;

// read-only ideal enumeration shared by the L-value and verification
// paths; grows on demand and is then immutable
const IdealTable& shared_ideal_table(std::int64_t min_norm);

struct LEvaluation {
    enum class Method { direct_series, afe, euler_removed };

    std::complex<double> s;
    std::complex<double> value;
    Method method = Method::afe;
    std::int64_t truncation_norm = 0;
    double est_error = 0.0;
};

// Dedekind zeta of Q(i) away from s = 1, by the symmetric theta split
std::complex<double> zeta_K(std::complex<double> s);

// zeta_K with the Euler factor at the even prime removed
std::complex<double> zeta_K2(std::complex<double> s);

// completed Lambda(s, ch) = (4 N(q))^(s/2) (2pi)^(-s) Gamma(s) L(s, ch)
// for a primitive nontrivial ch.  split_scale skews the theta split point
// so that the functional equation can be tested non-trivially.
std::complex<double> completed_lambda(const QuadraticCharacter& ch, std::complex<double> s,
                                      double split_scale = 1.0);

// L(s, ch) for primitive ch; trivial ch delegates to zeta_K
LEvaluation l_value(const QuadraticCharacter& ch, std::complex<double> s);

// sharply truncated Dirichlet series, Re(s) > 1; cross-check oracle
LEvaluation l_value_direct(const QuadraticCharacter& ch, std::complex<double> s,
                           std::int64_t max_norm = 200000);

// L(s, chi_m) for a general twist m = i^u (1+i)^e n: evaluate the
// primitive inducing character and restore the dropped Euler factors.
// The series convention is a sum over odd ideals.
LEvaluation l_value_imprimitive(const GaussianInt& m, std::complex<double> s);

// W(ch) = g(1, ch) N(q)^(-1/2)
std::complex<double> root_number(const QuadraticCharacter& ch);

// |LHS - RHS| of the theta identity for chi-tilde_n at split point y
double verify_poisson(const GaussianInt64& n, double y);

struct Prop24Check {
    double residual;
    double tail_estimate;
    std::complex<double> lhs;
    std::complex<double> rhs;
};

// compares L(s, chi-tilde_n) against the truncated Gauss-sum series of
// its functional equation; Re(s) < 0 so the k-sum converges
Prop24Check verify_prop24(const GaussianInt64& n, std::complex<double> s, std::int64_t k_cut);

}  // namespace qhl

#endif
