#include "qhl/moments.hpp"

#include "qhl/asymptotics.hpp"
#include "qhl/cgamma.hpp"
#include "qhl/characters.hpp"
#include "qhl/gauss.hpp"
#include "qhl/lfunctions.hpp"
#include "qhl/numeric.hpp"
#include "qhl/tables.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qhl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCut = 40.0;
constexpr double kWeightFloor = 1e-12;
constexpr double kDenomFloor = 1e-6;

cplx cpow(double x, cplx s) { return std::exp(s * std::log(x)); }

// Gamma(s, x) tabulated on a log-spaced grid with cubic interpolation;
// falls back to the direct evaluation outside the grid
struct GammaGrid {
    cplx s;
    double u0 = 0.0, du = 1.0;
    std::vector<cplx> v;

    void build(cplx s_, double xmin, double xmax) {
        s = s_;
        u0 = std::log(xmin);
        double u1 = std::log(xmax);
        int n = std::max(2048, static_cast<int>((u1 - u0) / 0.00125) + 4);
        du = (u1 - u0) / (n - 1);
        v.resize(n);
        for (int i = 0; i < n; ++i) v[i] = upper_gamma(s, std::exp(u0 + du * i));
    }

    cplx at(double x) const {
        double t = (std::log(x) - u0) / du;
        int i = static_cast<int>(std::floor(t));
        if (i < 1 || i + 2 >= static_cast<int>(v.size())) return upper_gamma(s, x);
        double f = t - i;
        double a = f + 1.0, b = f, c = f - 1.0, d = f - 2.0;
        return (-(b * c * d) / 6.0) * v[i - 1] + ((a * c * d) / 2.0) * v[i] +
               (-(a * b * d) / 2.0) * v[i + 1] + ((a * b * c) / 6.0) * v[i + 2];
    }
};

// batch evaluator for L(s, chi_m) at fixed s values across many twists m.
// Equivalent to l_value_imprimitive but with per-run power tables, a
// shared incomplete-gamma grid, and one multiplicative coefficient fill
// per twist.
class TwistEvaluator {
  public:
    TwistEvaluator(std::vector<cplx> s_list, std::int64_t max_odd_twist_norm)
        : max_conductor_(32.0 * static_cast<double>(max_odd_twist_norm)),
          kmax_(static_cast<std::int64_t>(std::ceil(kCut * std::sqrt(max_conductor_) / kPi))),
          tab_(kmax_) {
        norms_.reserve(tab_.size());
        for (std::size_t i = 0; i < tab_.size(); ++i) norms_.push_back(tab_.entry(i).norm);
        double xmin = 0.9 * kPi / std::sqrt(max_conductor_);
        double xmax = kCut + 2.0;
        for (cplx s : s_list) {
            Channel ch;
            ch.s = s;
            ch.denom = cpow(kTwoPi, -s) * complex_gamma(s);
            ch.pow1.resize(kmax_ + 1);
            ch.pow2.resize(kmax_ + 1);
            for (std::int64_t j = 1; j <= kmax_; ++j) {
                ch.pow1[j] = cpow(kTwoPi * static_cast<double>(j), -s);
                ch.pow2[j] = cpow(kTwoPi * static_cast<double>(j), s - 1.0);
            }
            ch.g1.build(s, xmin, xmax);
            ch.g2.build(1.0 - s, xmin, xmax);
            zeta_K(s);  // pre-grow the shared table used by the trivial-twist path
            channels_.push_back(std::move(ch));
        }
    }

    std::size_t channel_count() const { return channels_.size(); }

    struct Scratch {
        std::vector<signed char> vals;
    };

    // out[k] = L(s_k, chi_m) for the general nonzero twist m
    void eval_all(const GaussianInt& m, Scratch& sc, cplx* out) const {
        GaussianInt mm = m;
        const GaussianInt one_plus_i{bigint(1), bigint(1)};
        int e = 0;
        while (!is_odd(mm)) {
            mm = divexact(mm, one_plus_i);
            ++e;
        }
        auto [u, n] = normalize_primary(mm);
        Psi j;
        if (u % 2 == 0 && e % 2 == 0) j = Psi::one;
        else if (u % 2 != 0 && e % 2 == 0) j = Psi::i;
        else if (u % 2 == 0) j = Psi::one_plus_i;
        else j = Psi::i_times_one_plus_i;
        QuadraticCharacter ch = primitive_inducing(n, j);

        // Euler factors dropped by passing to the inducing character
        PrimaryFactorization f = factor(n);
        for (std::size_t k = 0; k < channels_.size(); ++k) {
            cplx corr = 1.0;
            for (const auto& [p, ee] : f.factors) {
                if (ee % 2 != 0) continue;
                corr *= 1.0 - static_cast<double>(ch.eval(p)) *
                                  cpow(p.norm().convert_to<double>(), -channels_[k].s);
            }
            if (is_odd(ch.modulus))
                corr *= 1.0 - static_cast<double>(ch.eval(one_plus_i)) * cpow(2.0, -channels_[k].s);
            out[k] = corr;
        }
        if (ch.is_trivial()) {
            for (std::size_t k = 0; k < channels_.size(); ++k) out[k] *= zeta_K(channels_[k].s);
            return;
        }

        double Nq = ch.modulus.norm().convert_to<double>();
        if (Nq > max_conductor_) throw std::logic_error("TwistEvaluator: conductor exceeds the sizing bound");
        std::int64_t M = static_cast<std::int64_t>(std::ceil(kCut * std::sqrt(Nq) / kPi));
        std::size_t end = std::upper_bound(norms_.begin(), norms_.end(), M) - norms_.begin();

        sc.vals.resize(end);
        sc.vals[0] = 1;
        for (std::size_t i = 1; i < end; ++i) {
            const IdealTable::Entry& en = tab_.entry(i);
            if (en.spf == static_cast<std::int32_t>(i))
                sc.vals[i] = static_cast<signed char>(ch.eval(tab_.generator(i)));
            else
                sc.vals[i] = static_cast<signed char>(sc.vals[en.spf] * sc.vals[en.cof]);
        }

        cplx g1 = gauss_sum_primitive_char(ch);
        double y0 = 1.0 / (2.0 * std::sqrt(Nq));
        for (std::size_t k = 0; k < channels_.size(); ++k) {
            const Channel& cch = channels_[k];
            KahanComplex S1, S2;
            for (std::size_t i = 0; i < end; ++i) {
                int c = sc.vals[i];
                if (c == 0) continue;
                std::int64_t N = norms_[i];
                double x = kTwoPi * static_cast<double>(N) * y0;
                double dc = static_cast<double>(c);
                S1.add(dc * cch.pow1[N] * cch.g1.at(x));
                S2.add(dc * cch.pow2[N] * cch.g2.at(x));
            }
            cplx pref = g1 / (2.0 * Nq) * cpow(4.0 * Nq, 1.0 - cch.s);
            out[k] *= (S1.value() + pref * S2.value()) / cch.denom;
        }
    }

  private:
    struct Channel {
        cplx s;
        cplx denom;
        std::vector<cplx> pow1;
        std::vector<cplx> pow2;
        GammaGrid g1;
        GammaGrid g2;
    };

    double max_conductor_;
    std::int64_t kmax_;
    IdealTable tab_;
    std::vector<std::int64_t> norms_;
    std::vector<Channel> channels_;
};

// static-free parallel map; fn(index, thread_id) must be pure in its
// effect on index-owned slots so scheduling cannot change results
template <typename F>
void parallel_for(std::size_t count, int threads, F&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 8;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (;;) {
                std::size_t base = next.fetch_add(kChunk);
                if (base >= count) break;
                std::size_t hi = std::min(base + kChunk, count);
                for (std::size_t i = base; i < hi; ++i) fn(i, t);
            }
        });
    for (auto& th : pool) th.join();
}

cplx ordered_sum(const std::vector<cplx>& contrib) {
    KahanComplex acc;
    for (const cplx& c : contrib) acc.add(c);
    return acc.value();
}

const GaussianInt kTwoI{bigint(0), bigint(2)};  // (1+i)^2

}  // namespace

cplx first_moment_lhs(double X, cplx alpha, const WeightFunction& w, int threads,
                      std::int64_t* n_count) {
    if (X <= 0.0) throw std::domain_error("first_moment_lhs: X must be positive");
    std::int64_t cut = static_cast<std::int64_t>(X * w.support_cutoff(kWeightFloor));
    std::vector<GaussianInt64> list = enumerate_primary(std::max<std::int64_t>(cut, 1));
    TwistEvaluator ev({0.5 + alpha}, std::max<std::int64_t>(cut, 1));
    std::vector<cplx> contrib(list.size());
    std::vector<TwistEvaluator::Scratch> scratch(std::max(1, threads));
    parallel_for(list.size(), threads, [&](std::size_t i, int tid) {
        double wt = w.eval(static_cast<double>(list[i].norm()) / X);
        if (wt == 0.0) {
            contrib[i] = 0.0;
            return;
        }
        cplx L;
        ev.eval_all(kTwoI * to_big(list[i]), scratch[tid], &L);
        contrib[i] = wt * L;
    });
    if (n_count) *n_count = static_cast<std::int64_t>(list.size());
    return ordered_sum(contrib);
}

cplx ratios_lhs(double X, cplx alpha, cplx beta, const WeightFunction& w, int threads,
                std::int64_t* n_count, std::int64_t* flagged) {
    if (X <= 0.0) throw std::domain_error("ratios_lhs: X must be positive");
    std::int64_t cut = static_cast<std::int64_t>(X * w.support_cutoff(kWeightFloor));
    std::vector<GaussianInt64> list = enumerate_primary(std::max<std::int64_t>(cut, 1));
    TwistEvaluator ev({0.5 + alpha, 0.5 + beta}, std::max<std::int64_t>(cut, 1));
    std::vector<cplx> contrib(list.size());
    std::vector<unsigned char> flag(list.size(), 0);
    std::vector<TwistEvaluator::Scratch> scratch(std::max(1, threads));
    parallel_for(list.size(), threads, [&](std::size_t i, int tid) {
        double wt = w.eval(static_cast<double>(list[i].norm()) / X);
        if (wt == 0.0) {
            contrib[i] = 0.0;
            return;
        }
        cplx L[2];
        ev.eval_all(kTwoI * to_big(list[i]), scratch[tid], L);
        if (std::abs(L[1]) < kDenomFloor) {
            contrib[i] = 0.0;
            flag[i] = 1;
            return;
        }
        contrib[i] = wt * L[0] / L[1];
    });
    if (n_count) *n_count = static_cast<std::int64_t>(list.size());
    if (flagged) {
        std::int64_t nf = 0;
        for (unsigned char f : flag) nf += f;
        *flagged = nf;
    }
    return ordered_sum(contrib);
}

double second_moment_lhs(double X, cplx s, int threads) {
    if (X < 1.0) throw std::domain_error("second_moment_lhs: X must be >= 1");
    if (s.real() < 0.5 || std::abs(s - 1.0) < 1e-6)
        throw std::domain_error("second_moment_lhs: s outside the supported range");
    std::int64_t cut = static_cast<std::int64_t>(X);
    std::vector<GaussianInt64> list;
    for (const auto& n : enumerate_primary(cut))
        if (is_squarefree(to_big(n))) list.push_back(n);
    TwistEvaluator ev({s}, cut);
    std::vector<cplx> contrib(list.size());
    std::vector<TwistEvaluator::Scratch> scratch(std::max(1, threads));
    parallel_for(list.size(), threads, [&](std::size_t i, int tid) {
        cplx L;
        ev.eval_all(to_big(list[i]), scratch[tid], &L);
        contrib[i] = std::norm(L);
    });
    KahanSum acc;
    for (const cplx& c : contrib) acc.add(c.real());
    return acc.value();
}

namespace {

// slow-path machinery: everything evaluated from first principles

int naive_char_eval(const QuadraticCharacter& ch, const GaussianInt& a) {
    if (!coprime(a, ch.modulus)) return 0;
    int v = ch.kernel.is_one() ? 1 : quad_symbol_naive(a, ch.kernel);
    if (v == 0) return 0;
    v *= psi_eval(ch.psi, a);
    if (ch.has_psi2) v *= psi2_eval(a);
    return v;
}

cplx naive_gauss_sum(const QuadraticCharacter& ch) {
    GaussianInt64 q = to_small(ch.modulus);
    if (q.norm() == 1) return {1.0, 0.0};
    std::int64_t N = q.norm();
    GaussianInt64 qbar = q.conj();
    KahanComplex acc;
    for (const auto& x : residue_system(q).representatives) {
        int c = naive_char_eval(ch, to_big(x));
        if (c == 0) continue;
        GaussianInt64 p = x * qbar;
        std::int64_t t = ((p.im % N) + N) % N;
        double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(N);
        acc.add(static_cast<double>(c) * cplx{std::cos(ang), std::sin(ang)});
    }
    return acc.value();
}

// L(s, ch) for primitive nontrivial ch by the theta split at an
// off-center point, with all character values from the Euler criterion
cplx slow_l_primitive(const QuadraticCharacter& ch, cplx s) {
    double Nq = ch.modulus.norm().convert_to<double>();
    const double scale = 1.3;
    double y0 = scale / (2.0 * std::sqrt(Nq));
    double y0p = 1.0 / (4.0 * Nq * y0);
    std::int64_t M1 = static_cast<std::int64_t>(std::ceil(kCut / (kTwoPi * y0)));
    std::int64_t M2 = static_cast<std::int64_t>(std::ceil(kCut / (kTwoPi * y0p)));
    // canonical ideal generators (1+i)^e * primary, enumerated directly
    std::int64_t M = std::max(M1, M2);
    std::vector<GaussianInt64> gens{GaussianInt64{1, 0}};
    const GaussianInt64 opi{1, 1};
    for (GaussianInt64 pw = opi; pw.norm() <= M; pw = pw * opi) gens.push_back(pw);
    for (const auto& n : enumerate_primary(M)) {
        if (n.norm() < 2) continue;
        for (GaussianInt64 pw{1, 0}; pw.norm() * n.norm() <= M; pw = pw * opi)
            gens.push_back(pw * n);
    }
    std::sort(gens.begin(), gens.end(), [](const GaussianInt64& a, const GaussianInt64& b) {
        if (a.norm() != b.norm()) return a.norm() < b.norm();
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    KahanComplex S1, S2;
    for (const auto& g : gens) {
        int c = naive_char_eval(ch, to_big(g));
        if (c == 0) continue;
        double dc = static_cast<double>(c);
        double dN = static_cast<double>(g.norm());
        if (g.norm() <= M1) S1.add(dc * cpow(kTwoPi * dN, -s) * upper_gamma(s, kTwoPi * dN * y0));
        if (g.norm() <= M2)
            S2.add(dc * cpow(kTwoPi * dN, s - 1.0) * upper_gamma(1.0 - s, kTwoPi * dN * y0p));
    }
    cplx pref = naive_gauss_sum(ch) / (2.0 * Nq) * cpow(4.0 * Nq, 1.0 - s);
    return (S1.value() + pref * S2.value()) / (cpow(kTwoPi, -s) * complex_gamma(s));
}

}  // namespace

cplx first_moment_lhs_slow(double X, cplx alpha, const WeightFunction& w) {
    if (X <= 0.0) throw std::domain_error("first_moment_lhs_slow: X must be positive");
    cplx s = 0.5 + alpha;
    std::int64_t cut = static_cast<std::int64_t>(X * w.support_cutoff(kWeightFloor));
    const GaussianInt one_plus_i{bigint(1), bigint(1)};
    KahanComplex acc;
    for (const auto& nn : enumerate_primary(std::max<std::int64_t>(cut, 1))) {
        double wt = w.eval(static_cast<double>(nn.norm()) / X);
        if (wt == 0.0) continue;
        GaussianInt n = to_big(nn);
        // (1+i)^2 n = 2i n strips to n exactly, so the psi slot is trivial
        QuadraticCharacter ch = primitive_inducing(n, Psi::one);
        cplx L = ch.is_trivial() ? zeta_K(s) : slow_l_primitive(ch, s);
        for (const auto& [p, ee] : factor(n).factors) {
            if (ee % 2 != 0) continue;
            L *= 1.0 - static_cast<double>(naive_char_eval(ch, p)) *
                           cpow(p.norm().convert_to<double>(), -s);
        }
        if (is_odd(ch.modulus))
            L *= 1.0 - static_cast<double>(naive_char_eval(ch, one_plus_i)) * cpow(2.0, -s);
        acc.add(wt * L);
    }
    return acc.value();
}

DoubleDirichletCheck double_dirichlet_A(cplx s, cplx w_param, std::int64_t cutoff) {
    if (s.real() <= 1.5 || w_param.real() <= 1.5)
        throw std::domain_error("double_dirichlet_A: needs Re(s), Re(w) > 3/2");
    if (cutoff < 2) throw std::domain_error("double_dirichlet_A: cutoff too small");
    std::vector<GaussianInt64> list = enumerate_primary(cutoff);
    double dc = static_cast<double>(cutoff);

    // first ordering: outer sum over n, inner L by the canonical
    // reciprocity-normalized evaluator
    TwistEvaluator ev({w_param}, cutoff);
    TwistEvaluator::Scratch sc;
    KahanComplex A;
    double lmaxA = 0.0;
    for (const auto& n : list) {
        cplx L;
        ev.eval_all(kTwoI * to_big(n), sc, &L);
        A.add(L * cpow(static_cast<double>(n.norm()), -s));
        lmaxA = std::max(lmaxA, std::abs(L));
    }

    // second ordering: outer sum over m, inner series straight from the
    // twisted-symbol definition (argument on top, no reciprocity), odd
    // ideals up to an inner cutoff that scales with the outer one
    std::int64_t inner = 8 * cutoff;
    IdealTable itab(inner);
    std::vector<signed char> vals;
    std::vector<cplx> npow(itab.size());
    for (std::size_t i = 0; i < itab.size(); ++i)
        npow[i] = cpow(static_cast<double>(itab.entry(i).norm), -s);
    KahanComplex B;
    KahanSum wsum;
    for (const auto& m : list) {
        bool type2 = classify_type(m) == 2;
        vals.resize(itab.size());
        vals[0] = 1;
        for (std::size_t i = 1; i < itab.size(); ++i) {
            const IdealTable::Entry& en = itab.entry(i);
            if (en.spf == static_cast<std::int32_t>(i)) {
                const GaussianInt64& g = itab.generator(i);
                int v = is_odd(g) ? quad_symbol(g, m) : 0;
                if (v != 0 && type2) v *= psi2_eval(g);
                vals[i] = static_cast<signed char>(v);
            } else {
                vals[i] = static_cast<signed char>(vals[en.spf] * vals[en.cof]);
            }
        }
        KahanComplex Lser;
        for (std::size_t i = 0; i < itab.size(); ++i)
            if (vals[i] != 0) Lser.add(static_cast<double>(vals[i]) * npow[i]);
        B.add(Lser.value() * cpow(static_cast<double>(m.norm()), -w_param));
        wsum.add(std::pow(static_cast<double>(m.norm()), -w_param.real()));
    }

    DoubleDirichletCheck out;
    out.valA = A.value();
    out.valB = B.value();
    // estA: outer tail of the n-sum (ideal density pi/8 for primary
    // elements); estB: the same outer tail plus the inner-series tail
    double outer_tail = (kPi / 8.0) * std::pow(dc, 1.0 - s.real()) / (s.real() - 1.0);
    double inner_tail = (kPi / 4.0) * std::pow(static_cast<double>(inner), 1.0 - s.real()) /
                        (s.real() - 1.0) * wsum.value();
    out.estA = lmaxA * outer_tail;
    out.estB = lmaxA * outer_tail + inner_tail;
    return out;
}

std::pair<double, double> exponent_fit(const std::vector<MomentReport>& reports) {
    if (reports.size() < 2) throw std::domain_error("exponent_fit: needs at least 2 reports");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    double n = static_cast<double>(reports.size());
    for (const auto& r : reports) {
        double x = std::log(r.X);
        double y = std::log(std::max(std::abs(r.residual), 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
    }
    double cov = sxy - sx * sy / n;
    double vx = sxx - sx * sx / n;
    double vy = syy - sy * sy / n;
    double slope = cov / vx;
    double r2 = vy > 0.0 ? cov * cov / (vx * vy) : 1.0;
    return {slope, r2};
}

MomentReport run_first_moment(double X, cplx alpha, const WeightFunction& w, int threads,
                              double max_X, bool force) {
    if (X > max_X && !force) throw std::domain_error("run_first_moment: X exceeds the cap");
    MomentReport r;
    r.X = X;
    r.alpha = alpha;
    auto t0 = std::chrono::steady_clock::now();
    r.lhs = first_moment_lhs(X, alpha, w, threads, &r.n_count);
    MainTermBreakdown mt = main_term_first_moment(X, alpha, w);
    r.term1 = mt.term1;
    r.term2 = mt.term2;
    r.residual = r.lhs - r.term1 - r.term2;
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

MomentReport run_ratios(double X, cplx alpha, cplx beta, const WeightFunction& w, int threads,
                        double max_X, bool force) {
    if (X > max_X && !force) throw std::domain_error("run_ratios: X exceeds the cap");
    MomentReport r;
    r.X = X;
    r.alpha = alpha;
    r.beta = beta;
    auto t0 = std::chrono::steady_clock::now();
    r.lhs = ratios_lhs(X, alpha, beta, w, threads, &r.n_count, &r.flagged);
    MainTermBreakdown mt = main_term_ratios(X, alpha, beta, w);
    r.term1 = mt.term1;
    r.term2 = mt.term2;
    r.residual = r.lhs - r.term1 - r.term2;
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace qhl
