#ifndef QHL_VERIFY_HPP
#define QHL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qhl {

// One verification property.  detail carries the measured numbers; the
// renderer below never includes runtime_s, so rendered output is a pure
// function of (seed, thread count) and can be byte-compared across runs.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double runtime_s = 0.0;
};

using CheckList = std::vector<CheckResult>;

// fixed 12-significant-digit formatting used by every text surface
std::string fmt12(double x);
std::string fmt12c(double re, double im);

std::string render_checks(const CheckList& checks);
bool all_pass(const CheckList& checks);

// reciprocity over all coprime primary pairs up to norm 10^3 plus 10^4
// seeded random pairs up to norm 10^6
CheckResult check_reciprocity(std::uint64_t seed);

// closed-form symbols at i and 1+i against the Euler-criterion oracle,
// all primary primes up to norm 10^4
CheckResult check_supplementary();

// closed-form Gauss sums against direct residue sums for all primary n
// up to norm 2000, five r values each, with coverage counters for the
// five prime-power cases; plus the twisted sums up to norm 500
CheckResult check_gauss_closed_form(std::uint64_t seed);

// |W(ch)| = 1 for every primitive character with squarefree kernel of
// norm at most 5000
CheckResult check_root_numbers();

// completed functional equation at 100 seeded (character, s) points with
// skewed theta split so the identity is non-trivial
CheckResult check_functional_equation(std::uint64_t seed);

// truncated Gauss-sum reflection series: residual below the tail
// estimate at k_cut = 10^4 and at least halved at 2 * 10^4
CheckResult check_reflection_series(std::uint64_t seed);

// theta transformation identity at 50 seeded (n, y) points
CheckResult check_theta_identity(std::uint64_t seed);

// zeta against the raw lattice oracle, the residue at s = 1, and the
// gamma-zeta reflection identity at 20 seeded shifts
CheckResult check_zeta_values(std::uint64_t seed);

// cheap structural identities of the main-term formulas
CheckList checks_asymptotics();

// suite names: symbols, gauss, lfunc, poisson, prop24, asymptotics, all
CheckList run_suite(const std::string& suite, std::uint64_t seed);
std::vector<std::string> suite_names();

}  // namespace qhl

#endif
