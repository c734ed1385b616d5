#ifndef QHL_CHARACTERS_HPP
#define QHL_CHARACTERS_HPP

#include "qhl/gint.hpp"

#include <string>

namespace qhl {

// Quadratic residue symbol (a/n) for odd n, slow path: factor n and apply
// the Euler criterion a^((N(p)-1)/2) mod p at each prime.  Oracle for
// quad_symbol.
int quad_symbol_naive(const GaussianInt& a, const GaussianInt& n);

// Fast symbol via reciprocity between primary elements plus the
// supplementary laws for i and 1+i.  Agrees with quad_symbol_naive
// everywhere; n must be odd and nonzero.
int quad_symbol(const GaussianInt& a, const GaussianInt& n);
int quad_symbol(const GaussianInt64& a, const GaussianInt64& n);

// (i/n) and ((1+i)/n) for odd n by the closed-form supplementary laws
int symbol_of_i(const GaussianInt& n);
int symbol_of_one_plus_i(const GaussianInt& n);
int symbol_of_i(const GaussianInt64& n);
int symbol_of_one_plus_i(const GaussianInt64& n);

// the character of twist m evaluated at odd a: (m/a)
int chi_m(const GaussianInt& m, const GaussianInt& a);

// index j of the unit-modulus twist family {1, i, 1+i, i(1+i)}
enum class Psi { one, i, one_plus_i, i_times_one_plus_i };

std::string psi_name(Psi j);
Psi psi_from_name(const std::string& name);

// psi_j(a) = (j/a) for odd a; trivially 1 for j = 1
int psi_eval(Psi j, const GaussianInt& a);
int psi_eval(Psi j, const GaussianInt64& a);

// the order-two character mod 2: -1 exactly on a == i mod 2
int psi2_eval(const GaussianInt& a);
int psi2_eval(const GaussianInt64& a);

// A primitive real character: (./kernel) times an even-part twist.  kernel
// is primary squarefree; the even part is determined by psi, has_psi2.
struct QuadraticCharacter {
    GaussianInt kernel;
    Psi psi = Psi::one;
    bool has_psi2 = false;
    GaussianInt modulus;
    bool primitive = true;
    GaussianInt twist_label;

    bool is_trivial() const { return kernel.is_one() && psi == Psi::one && !has_psi2; }
    bigint conductor_norm() const { return modulus.norm(); }

    // {-1, 0, 1}; zero exactly on arguments not coprime to the modulus
    int eval(const GaussianInt& a) const;
    int eval(const GaussianInt64& a) const;
};

// The primitive character inducing chi_n * psi_j for primary n, per the
// c1 type: type 1 gives (./c1)*psi_j with modulus c1, 4c1, (1+i)^5 c1,
// (1+i)^5 c1; type 2 gives psi_j*psi_2*(./c1) with modulus 2c1, 4c1,
// (1+i)^5 c1, (1+i)^5 c1 (j = 1, i, 1+i, i(1+i) in order).
QuadraticCharacter primitive_inducing(const GaussianInt& n, Psi j);

// chi-tilde_n = psi_type(n) * (./n), the modulus-2n character driving the
// Poisson and Gauss-sum functional equation identities
int chi_tilde_eval(const GaussianInt& n, const GaussianInt& m);

}  // namespace qhl

#endif
