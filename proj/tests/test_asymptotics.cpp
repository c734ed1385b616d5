#include "qhl/asymptotics.hpp"
#include "qhl/lfunctions.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qhl;

TEST_CASE("correction product frozen value and structure") {
    CHECK(P_eval(cplx(1.55, 0.0)).real() == doctest::Approx(1.46236259092047).epsilon(1e-10));
    // removing the even factor divides out exactly that factor
    cplx z{1.8, 0.2};
    cplx full = P_eval(z, true);
    cplx odd = P_eval(z, false);
    cplx even_factor = 1.0 + 1.0 / ((std::pow(cplx(2.0), z - 0.5) - 1.0) * 3.0);
    CHECK(std::abs(full / odd - even_factor) < 1e-12);
    CHECK_THROWS(P_eval(cplx(0.4, 0.0)));
}

TEST_CASE("euler ratio frozen value and equal-shift degeneration") {
    CHECK(euler_ratio_product(cplx(0.25, 0.0), cplx(0.3, 0.0)).real() ==
          doctest::Approx(0.995692503168956).epsilon(1e-10));
    CHECK(std::abs(euler_ratio_product(cplx(0.2, 0.0), cplx(0.2, 0.0)) - 1.0) < 1e-15);
    // prefactor reduces to pi/8 at alpha = beta
    CHECK(std::abs(euler_ratio_prefactor(cplx(0.2, 0.0), cplx(0.2, 0.0)) -
                   std::numbers::pi / 8.0) < 1e-14);
}

TEST_CASE("main terms scale as stated") {
    WeightFunction w = WeightFunction::exp_both();
    cplx a{0.25, 0.0}, b{0.3, 0.0};
    MainTermBreakdown m1 = main_term_ratios(1000.0, a, b, w);
    MainTermBreakdown m2 = main_term_ratios(2000.0, a, b, w);
    CHECK(std::abs(m2.term1 / m1.term1 - 2.0) < 1e-12);
    CHECK(std::abs(m2.term2 / m1.term2 - std::pow(2.0, 1.0 - a.real())) < 1e-12);
    CHECK(m1.error_exponent_bound == doctest::Approx(0.5));
    CHECK_THROWS(main_term_ratios(1000.0, cplx(0.6, 0.0), b, w));
    CHECK_THROWS(main_term_first_moment(1000.0, cplx(-0.1, 0.0), w));
}

TEST_CASE("secondary term degenerates to the first-moment form") {
    WeightFunction w = WeightFunction::exp_both();
    cplx a{0.15, 0.0};
    cplx t2r = main_term_ratios(500.0, a, cplx(30.0, 0.0), w).term2;
    cplx t2f = main_term_first_moment(500.0, a, w).term2;
    CHECK(std::abs(t2r - t2f) < 1e-6 * std::abs(t2f));
}

TEST_CASE("central polynomial is linear in log X and weight-consistent") {
    WeightFunction w = WeightFunction::exp_both();
    double q1 = q_poly(1000.0, w);
    double q2 = q_poly(2000.0, w);
    double q4 = q_poly(4000.0, w);
    CHECK(q1 == doctest::Approx(0.14624650219521).epsilon(1e-9));
    CHECK(std::abs(q4 - 2.0 * q2 + q1) < 1e-9);
    // halving the probe offset leaves the extrapolation fixed
    CHECK(q_poly(1000.0, w, 5e-4) == doctest::Approx(q1).epsilon(1e-8));
}
