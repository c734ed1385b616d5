#include "qhl/tables.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace qhl {

namespace {

std::vector<std::int64_t> sieve_primes(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (comp[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (std::int64_t m = p * p; m <= limit; m += p) comp[static_cast<std::size_t>(m)] = true;
    }
    return out;
}

std::mutex g_prime_mutex;
std::vector<std::int64_t> g_primes;
std::int64_t g_prime_limit = 0;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

const std::vector<std::int64_t>& rational_primes(std::int64_t limit) {
    std::lock_guard<std::mutex> lk(g_prime_mutex);
    if (limit > g_prime_limit) {
        g_prime_limit = std::max(limit, 2 * g_prime_limit);
        g_primes = sieve_primes(g_prime_limit);
    }
    return g_primes;
}

std::int64_t sqrt_minus_one(std::int64_t p) {
    if (p % 4 != 1) throw std::domain_error("sqrt_minus_one: p must be 1 mod 4");
    for (std::int64_t a = 2; a < p; ++a) {
        // a is a nonresidue iff a^((p-1)/2) == -1
        std::int64_t half = powmod(a, (p - 1) / 2, p);
        if (half == p - 1) {
            std::int64_t x = powmod(a, (p - 1) / 4, p);
            return x;
        }
    }
    throw std::logic_error("sqrt_minus_one: no nonresidue found");
}

GaussianInt PrimaryFactorization::reassemble() const {
    GaussianInt r{bigint(1), bigint(0)};
    r = r.mul_i(unit_exp);
    const GaussianInt one_plus_i{bigint(1), bigint(1)};
    for (int k = 0; k < two_exp; ++k) r = r * one_plus_i;
    for (const auto& [p, e] : factors)
        for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

bool is_prime_norm(std::int64_t norm) {
    if (norm < 2) return false;
    if (norm == 2) return true;
    // norm of an odd prime element: a rational prime p == 1 mod 4, or p^2
    // with p == 3 mod 4
    auto is_p = [](std::int64_t v) {
        if (v < 2) return false;
        for (std::int64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    if (norm % 4 == 1 && is_p(norm)) return true;
    std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(norm))));
    for (std::int64_t s = std::max<std::int64_t>(r - 1, 0); s <= r + 1; ++s)
        if (s * s == norm) return s % 4 == 3 && is_p(s);
    return false;
}

PrimaryFactorization factor(const GaussianInt& n) {
    if (n.is_zero()) throw std::domain_error("factor: zero input");
    bigint big_norm = n.norm();
    if (big_norm > bigint("4000000000000000"))
        throw std::domain_error("factor: norm exceeds the trial-division cap");
    std::int64_t N = static_cast<std::int64_t>(big_norm);

    PrimaryFactorization out;
    GaussianInt m = n;
    const GaussianInt one_plus_i{bigint(1), bigint(1)};
    while (!is_odd(m)) {
        m = divexact(m, one_plus_i);
        ++out.two_exp;
        N /= 2;
    }

    auto divide_out = [&m](const GaussianInt& p) {
        int e = 0;
        for (;;) {
            auto [q, r] = divmod(m, p);
            if (!r.is_zero()) break;
            m = q;
            ++e;
        }
        return e;
    };

    for (std::int64_t p = 3; p * p <= N; p += 2) {
        if (N % p != 0) continue;
        if (p % 4 == 3) {
            GaussianInt pi{bigint(-p), bigint(0)};  // the primary associate of p
            int e = divide_out(pi);
            if (e > 0) out.factors.emplace_back(pi, e);
            while (N % p == 0) N /= p;
        } else {
            std::int64_t x = sqrt_minus_one(p);
            GaussianInt pi = to_big(gcd(GaussianInt64{p, 0}, GaussianInt64{x, 1}));
            pi = normalize_primary(pi).second;
            GaussianInt pibar = normalize_primary(pi.conj()).second;
            int e1 = divide_out(pi);
            if (e1 > 0) out.factors.emplace_back(pi, e1);
            int e2 = divide_out(pibar);
            if (e2 > 0) out.factors.emplace_back(pibar, e2);
            while (N % p == 0) N /= p;
        }
    }
    if (N > 1) {
        // residual rational prime
        std::int64_t p = N;
        if (p % 4 == 1) {
            std::int64_t x = sqrt_minus_one(p);
            GaussianInt pi = to_big(gcd(GaussianInt64{p, 0}, GaussianInt64{x, 1}));
            pi = normalize_primary(pi).second;
            GaussianInt pibar = normalize_primary(pi.conj()).second;
            int e1 = divide_out(pi);
            if (e1 > 0) out.factors.emplace_back(pi, e1);
            int e2 = divide_out(pibar);
            if (e2 > 0) out.factors.emplace_back(pibar, e2);
        } else {
            // p == 3 mod 4 would contribute norm p^2; a residual single power
            // can only appear if p is a square... it is not, so p | N(m) means
            // p^2 | N(m) unless p == 1 mod 4.  Handle the inert square case.
            GaussianInt pi{bigint(-p), bigint(0)};
            int e = divide_out(pi);
            if (e > 0) out.factors.emplace_back(pi, e);
        }
    }
    if (!m.is_unit()) {
        // inert primes whose square exceeded the trial bound
        bigint rem = m.norm();
        std::int64_t p = static_cast<std::int64_t>(boost::multiprecision::sqrt(rem));
        GaussianInt pi{bigint(-p), bigint(0)};
        int e = divide_out(pi);
        if (e > 0) out.factors.emplace_back(pi, e);
    }
    if (!m.is_unit()) throw std::logic_error("factor: incomplete factorization");
    for (int k = 0; k < 4; ++k) {
        if (m == GaussianInt{bigint(1), bigint(0)}.mul_i(k)) out.unit_exp = k;
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

int mobius(const GaussianInt& n) {
    if (!is_primary(n)) throw std::domain_error("mobius: input must be primary");
    PrimaryFactorization f = factor(n);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

bool is_squarefree(const GaussianInt& n) { return mobius(n) != 0; }

bigint euler_phi(const GaussianInt& n) {
    if (!is_primary(n)) throw std::domain_error("euler_phi: input must be primary");
    PrimaryFactorization f = factor(n);
    bigint phi = 1;
    for (const auto& [p, e] : f.factors) {
        bigint np = p.norm();
        bigint pk = 1;
        for (int k = 0; k < e - 1; ++k) pk *= np;
        phi *= pk * (np - 1);
    }
    return phi;
}

std::pair<GaussianInt, GaussianInt> squarefree_decompose(const GaussianInt& c) {
    if (!is_primary(c)) throw std::domain_error("squarefree_decompose: input must be primary");
    PrimaryFactorization f = factor(c);
    GaussianInt c1{bigint(1), bigint(0)}, c2{bigint(1), bigint(0)};
    for (const auto& [p, e] : f.factors) {
        if (e % 2 == 1) c1 = c1 * p;
        for (int k = 0; k < e / 2; ++k) c2 = c2 * p;
    }
    return {c1, c2};
}

std::vector<GaussianInt64> enumerate_primary(std::int64_t max_norm) {
    std::vector<GaussianInt64> out;
    if (max_norm < 1) return out;
    std::int64_t amax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm))) + 1;
    while (amax * amax > max_norm) --amax;
    for (std::int64_t a = -amax; a <= amax; ++a) {
        if (((a % 2) + 2) % 2 == 0) continue;
        std::int64_t ra = ((a % 4) + 4) % 4;
        std::int64_t need_b = (ra == 1) ? 0 : 2;
        std::int64_t bmax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(max_norm - a * a))) + 1;
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
            if (((b % 4) + 4) % 4 != need_b) continue;
            if (a * a + b * b <= max_norm) out.push_back(GaussianInt64{a, b});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GaussianInt64> primary_primes(std::int64_t max_norm) {
    std::vector<GaussianInt64> out;
    const auto& ps = rational_primes(max_norm);
    for (std::int64_t p : ps) {
        if (p > max_norm) break;
        if (p == 2) continue;
        if (p % 4 == 1) {
            std::int64_t x = sqrt_minus_one(p);
            GaussianInt64 pi = gcd(GaussianInt64{p, 0}, GaussianInt64{x, 1});
            pi = normalize_primary(pi).second;
            GaussianInt64 pibar = normalize_primary(pi.conj()).second;
            out.push_back(pi);
            out.push_back(pibar);
        } else if (p * p <= max_norm) {
            out.push_back(GaussianInt64{-p, 0});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

IdealTable::IdealTable(std::int64_t max_norm) : max_norm_(max_norm) {
    // canonical generators: (1+i)^e * primary
    std::vector<GaussianInt64> primaries = enumerate_primary(max_norm);
    const GaussianInt64 one_plus_i{1, 1};
    for (const auto& p : primaries) {
        GaussianInt64 g = p;
        while (g.norm() <= max_norm) {
            gens_.push_back(g);
            g = g * one_plus_i;
        }
    }
    std::sort(gens_.begin(), gens_.end());
    entries_.resize(gens_.size());
    std::unordered_map<GaussianInt64, std::int32_t, GIntHash> index;
    index.reserve(gens_.size() * 2);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        entries_[i].norm = gens_[i].norm();
        entries_[i].spf = -1;
        entries_[i].cof = -1;
        index.emplace(gens_[i], static_cast<std::int32_t>(i));
    }

    // prime ideals in norm order: (1+i) first, then the odd primes
    std::vector<GaussianInt64> primes;
    primes.push_back(one_plus_i);
    for (const auto& p : primary_primes(max_norm)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());

    for (const auto& pr : primes) {
        std::int32_t pr_idx = index.at(pr);
        std::int64_t pn = pr.norm();
        for (std::size_t j = 0; j < gens_.size(); ++j) {
            if (entries_[j].norm > max_norm / pn) break;
            GaussianInt64 prod = pr * gens_[j];
            // canonicalize the odd part to primary
            if (is_odd(prod)) prod = normalize_primary(prod).second;
            else {
                // strip (1+i)-powers, normalize, re-multiply
                GaussianInt64 odd = prod;
                int e = 0;
                while (!is_odd(odd)) { odd = divexact(odd, one_plus_i); ++e; }
                odd = normalize_primary(odd).second;
                prod = odd;
                for (int k = 0; k < e; ++k) prod = prod * one_plus_i;
            }
            auto it = index.find(prod);
            std::int32_t pidx = it->second;
            if (entries_[pidx].spf == -1 && pidx != 0) {
                entries_[pidx].spf = pr_idx;
                entries_[pidx].cof = static_cast<std::int32_t>(j);
            }
        }
    }
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].spf == static_cast<std::int32_t>(i)) prime_idx_.push_back(static_cast<std::int32_t>(i));
    }
}

PrimaryTable::PrimaryTable(std::int64_t max_norm) : max_norm_(max_norm) {
    list_ = enumerate_primary(max_norm);
    norms_.resize(list_.size());
    spf_.assign(list_.size(), -1);
    cof_.assign(list_.size(), -1);
    index_.reserve(list_.size() * 2);
    for (std::size_t i = 0; i < list_.size(); ++i) {
        norms_[i] = list_[i].norm();
        index_.emplace(list_[i], static_cast<std::int32_t>(i));
    }
    std::vector<GaussianInt64> primes = primary_primes(max_norm);
    for (const auto& pr : primes) {
        std::int32_t pr_idx = index_.at(pr);
        std::int64_t pn = pr.norm();
        for (std::size_t j = 0; j < list_.size(); ++j) {
            if (norms_[j] > max_norm / pn) break;
            GaussianInt64 prod = normalize_primary(pr * list_[j]).second;
            std::int32_t pidx = index_.at(prod);
            if (spf_[pidx] == -1 && pidx != 0) {
                spf_[pidx] = pr_idx;
                cof_[pidx] = static_cast<std::int32_t>(j);
            }
        }
    }
}

GaussianInt64 PrimaryTable::kernel(std::size_t i) const {
    // product of primes with odd exponent
    std::vector<std::pair<std::int32_t, int>> expo;
    std::int32_t cur = static_cast<std::int32_t>(i);
    while (cur != 0 && spf_[cur] != -1) {
        std::int32_t p = spf_[cur];
        bool found = false;
        for (auto& [pi, e] : expo)
            if (pi == p) { ++e; found = true; break; }
        if (!found) expo.emplace_back(p, 1);
        cur = (cur == p) ? 0 : cof_[cur];
    }
    GaussianInt64 k{1, 0};
    for (auto& [pi, e] : expo)
        if (e % 2 == 1) k = normalize_primary(k * list_[pi]).second;
    return k;
}

bool PrimaryTable::is_squarefree(std::size_t i) const {
    std::vector<std::int32_t> seen;
    std::int32_t cur = static_cast<std::int32_t>(i);
    while (cur != 0 && spf_[cur] != -1) {
        std::int32_t p = spf_[cur];
        for (auto s : seen)
            if (s == p) return false;
        seen.push_back(p);
        cur = (cur == p) ? 0 : cof_[cur];
    }
    return true;
}

std::vector<GaussianInt64> PrimaryTable::prime_factors(std::size_t i) const {
    std::vector<GaussianInt64> out;
    std::int32_t cur = static_cast<std::int32_t>(i);
    while (cur != 0 && spf_[cur] != -1) {
        std::int32_t p = spf_[cur];
        bool seen = false;
        for (const auto& s : out)
            if (s == list_[p]) { seen = true; break; }
        if (!seen) out.push_back(list_[p]);
        cur = (cur == p) ? 0 : cof_[cur];
    }
    return out;
}

std::int32_t PrimaryTable::index_of(const GaussianInt64& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace qhl
