#include "qhl/gauss.hpp"
#include "qhl/tables.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qhl;

TEST_CASE("additive character spot values") {
    CHECK(e_tilde({0.0, 0.5}).real() == doctest::Approx(-1.0));
    CHECK(std::abs(e_tilde({0.5, 0.0}) - std::complex<double>(1.0, 0.0)) < 1e-15);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int t = 0; t < 100; ++t)
        CHECK(std::abs(e_tilde({u(rng), u(rng)})) == doctest::Approx(1.0));
}

TEST_CASE("residue systems have the right size and are incongruent") {
    for (auto q : {GaussianInt64{3, 0}, GaussianInt64{1, 4}, GaussianInt64{4, 0}}) {
        const ResidueSystem& rs = residue_system(q);
        CHECK(static_cast<std::int64_t>(rs.representatives.size()) == q.norm());
        for (std::size_t i = 0; i < rs.representatives.size(); ++i)
            for (std::size_t j = i + 1; j < rs.representatives.size(); ++j)
                CHECK(!divides(q, rs.representatives[i] - rs.representatives[j]));
    }
}

TEST_CASE("prime Gauss sum reference value") {
    // g(1, p) for the norm-5 prime -1+2i is -sqrt(5)
    ExactGaussSum g = gauss_sum_fast(GaussianInt{bigint(1)}, GaussianInt{bigint(-1), bigint(2)});
    CHECK(g.coeff == -1);
    CHECK(g.radicand == 5);
    CHECK(g.value() == doctest::Approx(-std::sqrt(5.0)));
}

TEST_CASE("closed form matches direct summation") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::int64_t> d(-15, 15);
    for (const auto& n : enumerate_primary(600)) {
        GaussianInt64 r{d(rng), d(rng)};
        double fast = gauss_sum_fast(to_big(r), to_big(n)).value();
        std::complex<double> direct = gauss_sum_direct(r, n);
        CHECK(std::abs(std::complex<double>(fast, 0.0) - direct) <
              1e-9 * std::max(1.0, std::abs(fast)));
    }
}

TEST_CASE("fixed-factorization path matches the exact path") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<std::int64_t> d(-40, 40);
    for (const auto& n : enumerate_primary(800)) {
        PrimaryFactorization fb = factor(to_big(n));
        std::vector<std::pair<GaussianInt64, int>> fac;
        for (const auto& [p, e] : fb.factors) fac.emplace_back(to_small(p), e);
        GaussianInt64 r{d(rng), d(rng)};
        if (r.is_zero()) continue;
        CHECK(gauss_sum_fast64(r, fac) ==
              doctest::Approx(gauss_sum_fast(to_big(r), to_big(n)).value()).epsilon(1e-12));
    }
}

TEST_CASE("twisted sum identity against direct summation") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::int64_t> d(-9, 9);
    for (const auto& c : enumerate_primary(200)) {
        for (int j = 1; j <= 2; ++j) {
            GaussianInt64 r{d(rng), d(rng)};
            if (r.is_zero()) r = {1, 0};
            double fast = gauss_sum_twisted(to_big(r), j, to_big(c));
            std::complex<double> direct = gauss_sum_twisted_direct(r, j, c);
            CHECK(std::abs(std::complex<double>(fast, 0.0) - direct) < 1e-9);
        }
    }
}

TEST_CASE("primitive character Gauss sum matches direct summation") {
    const Psi all[4] = {Psi::one, Psi::i, Psi::one_plus_i, Psi::i_times_one_plus_i};
    for (const auto& n : enumerate_primary(80)) {
        if (!is_squarefree(to_big(n))) continue;
        for (Psi j : all) {
            QuadraticCharacter ch = primitive_inducing(to_big(n), j);
            if (ch.is_trivial()) continue;
            std::complex<double> fast = gauss_sum_primitive_char(ch);
            std::complex<double> direct = gauss_sum_character_direct(GaussianInt64{1, 0}, ch);
            CHECK(std::abs(fast - direct) < 1e-8 * std::max(1.0, std::abs(fast)));
        }
    }
}
