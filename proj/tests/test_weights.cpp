#include "qhl/weights.hpp"
#include "qhl/cgamma.hpp"

#include <doctest.h>

#include <cmath>

using namespace qhl;

TEST_CASE("exponential weight transform is the gamma function") {
    WeightFunction w = WeightFunction::exp_decay();
    for (std::complex<double> s : {std::complex<double>{1.0, 0.0}, {0.5, 0.0}, {2.0, 1.5},
                                   {0.3, -0.7}}) {
        std::complex<double> g = complex_gamma(s);
        CHECK(std::abs(w.mellin(s) - g) < 1e-12 * std::abs(g));
    }
}

TEST_CASE("transform derivative matches a finite difference") {
    WeightFunction w = WeightFunction::exp_both();
    std::complex<double> s{1.0, 0.0};
    double h = 1e-5;
    std::complex<double> fd = (w.mellin(s + h) - w.mellin(s - h)) / (2.0 * h);
    CHECK(std::abs(w.mellin_deriv(s) - fd) < 1e-8);
}

TEST_CASE("frozen transform and support values") {
    WeightFunction wb = WeightFunction::exp_both();
    CHECK(wb.mellin({1.0, 0.0}).real() == doctest::Approx(0.279731763633045).epsilon(1e-12));
    CHECK(wb.support_cutoff(1e-12) == doctest::Approx(29.597234175092).epsilon(1e-9));
    CHECK(WeightFunction::exp_decay().support_cutoff(1e-12) ==
          doctest::Approx(27.6466461159286).epsilon(1e-9));
}

TEST_CASE("bump weight is compactly supported") {
    WeightFunction w = WeightFunction::bump();
    CHECK(w.eval(0.5) > 0.0);
    CHECK(w.eval(1.0) == 0.0);
    CHECK(w.eval(1.5) == 0.0);
    CHECK(w.eval(0.0) == 0.0);
    CHECK(w.support_cutoff(1e-12) <= 1.0);
    // transform of a compactly supported weight is entire; sanity at s=1
    CHECK(w.mellin({1.0, 0.0}).real() > 0.0);
}

TEST_CASE("name lookup") {
    CHECK(WeightFunction::by_name("exp_decay").id == "exp_decay");
    CHECK(WeightFunction::by_name("exp_both").id == "exp_both");
    CHECK(WeightFunction::by_name("bump").id == "bump");
    CHECK_THROWS(WeightFunction::by_name("nope"));
}

TEST_CASE("transform strip is enforced") {
    WeightFunction w = WeightFunction::exp_decay();
    CHECK_THROWS(w.mellin({-0.2, 0.0}));
}
