#include "qhl/gint.hpp"
#include "qhl/tables.hpp"

#include <doctest.h>

#include <random>

using namespace qhl;

TEST_CASE("division with nearest rounding") {
    GaussianInt a{bigint(7), bigint(2)}, b{bigint(3), bigint(0)};
    auto [q, r] = divmod(a, b);
    CHECK(q == GaussianInt{bigint(2), bigint(1)});
    CHECK(r == GaussianInt{bigint(1), bigint(-1)});
    CHECK(a == q * b + r);
    CHECK(2 * r.norm() <= b.norm());
}

TEST_CASE("divmod remainder bound holds on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> d(-500, 500);
    for (int t = 0; t < 2000; ++t) {
        GaussianInt64 a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(2 * r.norm() <= b.norm());
    }
}

TEST_CASE("primary classification and normalization") {
    GaussianInt64 n{3, 2};
    CHECK(is_primary(n));
    CHECK(classify_type(n) == 2);
    CHECK(classify_type(GaussianInt64{1, 0}) == 1);
    CHECK(classify_type(GaussianInt64{-3, 0}) == 1);
    // every odd element has exactly one primary associate
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-200, 200);
    for (int t = 0; t < 1000; ++t) {
        GaussianInt64 z{d(rng), d(rng)};
        if (z.is_zero() || !is_odd(z)) continue;
        auto [k, m] = normalize_primary(z);
        CHECK(is_primary(m));
        CHECK(m.mul_i(k) == z);
        int primary_associates = 0;
        for (int j = 0; j < 4; ++j)
            if (is_primary(z.mul_i(j))) ++primary_associates;
        CHECK(primary_associates == 1);
    }
}

TEST_CASE("gcd is a common divisor in canonical form") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::int64_t> d(-300, 300);
    for (int t = 0; t < 1000; ++t) {
        GaussianInt64 a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (a.is_zero() || b.is_zero()) continue;
        GaussianInt64 g = gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        GaussianInt64 odd = g;
        const GaussianInt64 opi{1, 1};
        while (!is_odd(odd)) odd = divexact(odd, opi);
        CHECK(is_primary(odd));
    }
}

TEST_CASE("parse and format round-trip") {
    for (const char* s : {"1", "-1", "i", "-i", "3+2i", "-5-2i", "17i", "1+i", "-1+2i"}) {
        GaussianInt z = parse_gint(s);
        CHECK(parse_gint(format_gint(z)) == z);
    }
    CHECK(parse_gint("3+2i") == GaussianInt{bigint(3), bigint(2)});
    CHECK_THROWS(parse_gint("abc"));
}

TEST_CASE("primary enumeration is sorted and complete") {
    auto els = enumerate_primary(500);
    for (std::size_t i = 0; i < els.size(); ++i) {
        CHECK(is_primary(els[i]));
        CHECK(els[i].norm() <= 500);
        if (i > 0) CHECK(els[i - 1] < els[i]);
    }
    // count against a direct scan of the coordinate box
    std::int64_t count = 0;
    for (std::int64_t a = -23; a <= 23; ++a)
        for (std::int64_t b = -23; b <= 23; ++b) {
            GaussianInt64 z{a, b};
            if (!z.is_zero() && z.norm() <= 500 && is_primary(z)) ++count;
        }
    CHECK(count == static_cast<std::int64_t>(els.size()));
}

TEST_CASE("factorization reassembles") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    for (int t = 0; t < 200; ++t) {
        GaussianInt64 z{d(rng), d(rng)};
        if (z.is_zero()) continue;
        PrimaryFactorization f = factor(to_big(z));
        CHECK(to_small(f.reassemble()) == z);
    }
}
