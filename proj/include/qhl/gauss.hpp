#ifndef QHL_GAUSS_HPP
#define QHL_GAUSS_HPP

#include "qhl/characters.hpp"
#include "qhl/gint.hpp"

#include <complex>
#include <vector>

namespace qhl {

// additive character exp(2 pi i Im z)
std::complex<double> e_tilde(std::complex<double> z);

// canonical residues mod q: the fixed points of the divmod reduction
struct ResidueSystem {
    GaussianInt64 modulus;
    std::vector<GaussianInt64> representatives;
};

// cached; norm cap 10^6
const ResidueSystem& residue_system(const GaussianInt64& q);

// g(r,n) = sum_x (x/n) e_tilde(rx/n) by direct summation; the oracle.
// n odd primary, N(n) <= 10^6.
std::complex<double> gauss_sum_direct(const GaussianInt64& r, const GaussianInt64& n);

// coeff * sqrt(radicand), both exact integers.  Every g(r,n) with primary
// n is real of this shape: the closed prime-power values are integers or
// integer multiples of N(pi)^(1/2).
struct ExactGaussSum {
    bigint coeff = 0;
    bigint radicand = 1;

    bool is_zero() const { return coeff == 0; }
    double value() const;
};

// closed-form evaluation via the prime-power table and multiplicativity
ExactGaussSum gauss_sum_fast(const GaussianInt& r, const GaussianInt& n);

// g(r, psi_j * (./c)) = (i/c) ((-1)^Im(r) + (-1)^(Re(r)+j-1)) g(r,c),
// j in {1,2}
double gauss_sum_twisted(const GaussianInt& r, int j, const GaussianInt& c);

// g(r,n) given the prime-power factorization of n up front; the hot path
// for k-sums where n is fixed and r sweeps many values
double gauss_sum_fast64(const GaussianInt64& r,
                        const std::vector<std::pair<GaussianInt64, int>>& n_factors);

// oracle for the twisted sum: direct summation over residues mod 2c
std::complex<double> gauss_sum_twisted_direct(const GaussianInt64& r, int j, const GaussianInt64& c);

// direct-summation g(r, ch) over residues mod the character's modulus
std::complex<double> gauss_sum_character_direct(const GaussianInt64& r, const QuadraticCharacter& ch);

// g(1, ch) for a primitive character, composed from the even-part sum and
// the exact odd-kernel value via g(r, x1*x2) = x1(q2) x2(q1) g(r,x1) g(r,x2)
std::complex<double> gauss_sum_primitive_char(const QuadraticCharacter& ch);

}  // namespace qhl

#endif
