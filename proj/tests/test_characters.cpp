#include "qhl/characters.hpp"
#include "qhl/tables.hpp"

#include <doctest.h>

#include <random>

using namespace qhl;

namespace {
GaussianInt64 rand_primary(std::mt19937_64& rng, std::int64_t max_norm) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm)));
    std::uniform_int_distribution<std::int64_t> d(-r, r);
    for (;;) {
        GaussianInt64 z{d(rng), d(rng)};
        if (z.is_zero() || !is_odd(z) || z.norm() > max_norm) continue;
        return normalize_primary(z).second;
    }
}
}  // namespace

TEST_CASE("symbol reference values") {
    GaussianInt n{bigint(3), bigint(2)};
    CHECK(quad_symbol(GaussianInt{bigint(0), bigint(1)}, n) == -1);
    CHECK(quad_symbol(GaussianInt{bigint(1), bigint(1)}, n) == -1);
    CHECK(quad_symbol(GaussianInt{bigint(1), bigint(0)}, n) == 1);
    // (a^2/n) = 1 whenever a is coprime to n
    CHECK(quad_symbol(GaussianInt{bigint(0), bigint(1)} * GaussianInt{bigint(0), bigint(1)}, n) == 1);
}

TEST_CASE("fast symbol agrees with the Euler-criterion oracle") {
    std::mt19937_64 rng(19);
    for (int t = 0; t < 300; ++t) {
        GaussianInt64 n = rand_primary(rng, 3000);
        std::uniform_int_distribution<std::int64_t> d(-50, 50);
        GaussianInt64 a{d(rng), d(rng)};
        if (a.is_zero()) continue;
        CHECK(quad_symbol(a, n) == quad_symbol_naive(to_big(a), to_big(n)));
    }
}

TEST_CASE("symbol is completely multiplicative in the top argument") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> d(-60, 60);
    for (int t = 0; t < 500; ++t) {
        GaussianInt64 n = rand_primary(rng, 4000);
        GaussianInt64 a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(quad_symbol(a * b, n) == quad_symbol(a, n) * quad_symbol(b, n));
    }
}

TEST_CASE("supplementary law spot values") {
    GaussianInt64 n1{1, 4};   // type 1
    GaussianInt64 n2{3, 2};   // type 2
    CHECK(symbol_of_i(n1) == 1);
    CHECK(symbol_of_i(n2) == -1);
    CHECK(symbol_of_one_plus_i(n2) == -1);
}

TEST_CASE("primitive inducing character moduli") {
    GaussianInt n1{bigint(1), bigint(4)};  // type 1 prime kernel
    QuadraticCharacter c1 = primitive_inducing(n1, Psi::one);
    CHECK(c1.modulus == n1);
    CHECK(c1.primitive);
    QuadraticCharacter c2 = primitive_inducing(n1, Psi::i);
    CHECK(c2.modulus.norm() == 16 * n1.norm());
    QuadraticCharacter c3 = primitive_inducing(n1, Psi::one_plus_i);
    CHECK(c3.modulus.norm() == 32 * n1.norm());

    GaussianInt n2{bigint(3), bigint(2)};  // type 2 kernel
    QuadraticCharacter c4 = primitive_inducing(n2, Psi::one);
    CHECK(c4.modulus.norm() == 4 * n2.norm());
    CHECK(c4.has_psi2);
}

TEST_CASE("character vanishes exactly off the coprime residues") {
    QuadraticCharacter ch = primitive_inducing(GaussianInt{bigint(3), bigint(2)}, Psi::i);
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> d(-40, 40);
    for (int t = 0; t < 300; ++t) {
        GaussianInt64 a{d(rng), d(rng)};
        if (a.is_zero()) continue;
        int v = ch.eval(a);
        bool cop = coprime(to_big(a), ch.modulus);
        CHECK((v == 0) == !cop);
        if (v != 0) CHECK((v == 1 || v == -1));
    }
}

TEST_CASE("paired twist evaluation is symmetric") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        GaussianInt64 n = rand_primary(rng, 2000);
        GaussianInt64 m = rand_primary(rng, 2000);
        if (!coprime(n, m)) continue;
        CHECK(chi_tilde_eval(to_big(n), to_big(m)) == chi_tilde_eval(to_big(m), to_big(n)));
    }
}
