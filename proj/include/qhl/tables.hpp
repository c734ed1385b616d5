#ifndef QHL_TABLES_HPP
#define QHL_TABLES_HPP

#include "qhl/gint.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qhl {

// rational primes <= limit
const std::vector<std::int64_t>& rational_primes(std::int64_t limit);

// some x with x^2 == -1 mod p, for p == 1 mod 4
std::int64_t sqrt_minus_one(std::int64_t p);

// i^unit_exp * (1+i)^two_exp * prod factors  (factors primary primes,
// sorted by (norm, re), exponents positive)
struct PrimaryFactorization {
    int unit_exp = 0;
    int two_exp = 0;
    std::vector<std::pair<GaussianInt, int>> factors;

    GaussianInt reassemble() const;
};

// exact factorization by trial division over the rational norm
PrimaryFactorization factor(const GaussianInt& n);

bool is_prime_norm(std::int64_t norm);  // norm of a prime element of Z[i]?

int mobius(const GaussianInt& n);                // primary n
bool is_squarefree(const GaussianInt& n);        // primary n
bigint euler_phi(const GaussianInt& n);          // primary n
// c = c1 * c2^2 with c1 primary squarefree, c2 primary
std::pair<GaussianInt, GaussianInt> squarefree_decompose(const GaussianInt& c);

// every primary n with N(n) <= max_norm, ordered by (N, re, im)
std::vector<GaussianInt64> enumerate_primary(std::int64_t max_norm);

// primary primes with norm <= max_norm, ordered by (N, re, im)
std::vector<GaussianInt64> primary_primes(std::int64_t max_norm);

// All nonzero ideals of norm <= max_norm with canonical generators
// i^0 (1+i)^e * primary, ordered by norm, with smallest-prime-factor links
// so a completely multiplicative function can be tabulated in one linear
// pass (see eval_multiplicative).
class IdealTable {
  public:
    struct Entry {
        std::int64_t norm;
        std::int32_t spf;  // index of the smallest prime ideal dividing this one; == own index for primes, -1 for (1)
        std::int32_t cof;  // index of this/spf
    };

    explicit IdealTable(std::int64_t max_norm);

    std::int64_t max_norm() const { return max_norm_; }
    std::size_t size() const { return entries_.size(); }
    const Entry& entry(std::size_t i) const { return entries_[i]; }
    const GaussianInt64& generator(std::size_t i) const { return gens_[i]; }
    const std::vector<std::int32_t>& prime_indices() const { return prime_idx_; }

    // values[i] = prod over prime-power structure of prime_value(...);
    // prime_value receives the prime's canonical generator.
    template <typename F>
    void eval_multiplicative(F&& prime_value, std::vector<signed char>& values) const {
        values.resize(entries_.size());
        values[0] = 1;
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            const Entry& e = entries_[i];
            if (e.spf == static_cast<std::int32_t>(i))
                values[i] = prime_value(gens_[i]);
            else
                values[i] = static_cast<signed char>(values[e.spf] * values[e.cof]);
        }
    }

  private:
    std::int64_t max_norm_;
    std::vector<Entry> entries_;
    std::vector<GaussianInt64> gens_;
    std::vector<std::int32_t> prime_idx_;
};

// Primary elements with norm <= max_norm plus factorization links and the
// squarefree kernel data the moment sums need per twist.
class PrimaryTable {
  public:
    explicit PrimaryTable(std::int64_t max_norm);

    std::size_t size() const { return list_.size(); }
    const GaussianInt64& element(std::size_t i) const { return list_[i]; }
    std::int64_t norm(std::size_t i) const { return norms_[i]; }

    // squarefree kernel c1 of element i (primary), via the spf links
    GaussianInt64 kernel(std::size_t i) const;
    bool is_squarefree(std::size_t i) const;
    // distinct primary prime factors of element i
    std::vector<GaussianInt64> prime_factors(std::size_t i) const;

    std::int32_t index_of(const GaussianInt64& n) const;  // -1 if absent

  private:
    std::int64_t max_norm_;
    std::vector<GaussianInt64> list_;
    std::vector<std::int64_t> norms_;
    std::vector<std::int32_t> spf_;  // index into list_ of smallest primary prime factor; self for primes, -1 for 1
    std::vector<std::int32_t> cof_;
    std::unordered_map<GaussianInt64, std::int32_t, GIntHash> index_;
};

}  // namespace qhl

#endif
