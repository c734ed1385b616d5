#include "qhl/experiments.hpp"

#include "qhl/asymptotics.hpp"
#include "qhl/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace qhl {

namespace {

const std::vector<double> kGrid = {1000.0, 2000.0, 4000.0, 8000.0};

std::string shift_str(cplx z) { return fmt12c(z.real(), z.imag()); }

std::string row_text(const MomentReport& r) {
    std::string s = "X=" + fmt12(r.X);
    s += " lhs=" + shift_str(r.lhs);
    s += " term1=" + shift_str(r.term1);
    s += " term2=" + shift_str(r.term2);
    s += " abs_residual=" + fmt12(std::abs(r.residual));
    s += " rel_residual=" + fmt12(std::abs(r.residual) / std::abs(r.term1));
    s += " n_count=" + std::to_string(r.n_count);
    if (r.beta) s += " flagged=" + std::to_string(r.flagged);
    return s + "\n";
}

void finish_grid(ExperimentResult& out) {
    auto [slope, r2] = exponent_fit(out.rows);
    out.slope = slope;
    out.r2 = r2;
    out.plot_csv = "X,abs_residual\n";
    for (const auto& r : out.rows)
        out.plot_csv += fmt12(r.X) + "," + fmt12(std::abs(r.residual)) + "\n";
}

}  // namespace

ExperimentResult experiment_thm12(int threads, cplx alpha, double max_x, bool force,
                                  double exponent_bound) {
    ExperimentResult out;
    out.name = "thm12";
    WeightFunction w = WeightFunction::exp_both();
    out.text = "experiment thm12: shifted first moment, alpha=" + shift_str(alpha) +
               " weight=exp_both\n";
    bool monotone = true;
    double prev = 0.0;
    for (std::size_t i = 0; i < kGrid.size(); ++i) {
        MomentReport r = run_first_moment(kGrid[i], alpha, w, threads, max_x, force);
        double rel = std::abs(r.residual) / std::abs(r.term1);
        if (i > 0 && rel >= prev) monotone = false;
        prev = rel;
        out.text += row_text(r);
        out.rows.push_back(std::move(r));
    }
    finish_grid(out);
    out.ok = monotone && out.slope <= exponent_bound;
    out.text += "exponent_fit: slope=" + fmt12(out.slope) + " r2=" + fmt12(out.r2) + "\n";
    out.text += std::string("monotone_rel_residual=") + (monotone ? "yes" : "no") +
                " slope_bound=" + fmt12(exponent_bound) + " status=" + (out.ok ? "ok" : "FAIL") +
                "\n";
    return out;
}

ExperimentResult experiment_thm11(int threads, cplx alpha, cplx beta, double max_x, bool force,
                                  double exponent_bound) {
    ExperimentResult out;
    out.name = "thm11";
    WeightFunction w = WeightFunction::exp_both();
    out.text = "experiment thm11: ratio average, alpha=" + shift_str(alpha) +
               " beta=" + shift_str(beta) + " weight=exp_both\n";
    std::int64_t flagged = 0;
    for (double X : kGrid) {
        MomentReport r = run_ratios(X, alpha, beta, w, threads, max_x, force);
        flagged += r.flagged;
        out.text += row_text(r);
        out.rows.push_back(std::move(r));
    }
    finish_grid(out);
    out.ok = out.slope <= exponent_bound && flagged == 0;
    out.text += "exponent_fit: slope=" + fmt12(out.slope) + " r2=" + fmt12(out.r2) + "\n";
    out.text += "flagged_total=" + std::to_string(flagged) + " slope_bound=" +
                fmt12(exponent_bound) + " status=" + (out.ok ? "ok" : "FAIL") + "\n";
    return out;
}

ExperimentResult experiment_cor13(int threads, double X, double max_x, bool force) {
    if (X > max_x && !force) throw std::domain_error("experiment cor13: X exceeds the configured cap");
    ExperimentResult out;
    out.name = "cor13";
    WeightFunction w = WeightFunction::exp_both();
    double q1 = q_poly(X, w, 1e-3);
    double q2 = q_poly(X, w, 5e-4);
    double qdev = std::abs(q1 - q2) / std::abs(q1);
    cplx lhs = first_moment_lhs(X, cplx(0.0, 0.0), w, threads);
    double ratio = lhs.real() / (X * q1);
    out.ok = std::abs(ratio - 1.0) <= 0.05 && qdev <= 5e-4;
    out.text = "experiment cor13: central-value average vs X * q_poly, weight=exp_both\n";
    out.text += "X=" + fmt12(X) + " lhs=" + fmt12(lhs.real()) + " q_poly=" + fmt12(q1) +
                " q_poly_half_offset=" + fmt12(q2) + "\n";
    out.text += "ratio=" + fmt12(ratio) + " extrapolation_rel_dev=" + fmt12(qdev) +
                " status=" + (out.ok ? "ok" : "FAIL") + "\n";
    out.plot_csv = "X,abs_residual\n" + fmt12(X) + "," + fmt12(std::abs(lhs.real() - X * q1)) + "\n";
    MomentReport r;
    r.X = X;
    r.lhs = lhs;
    r.term1 = X * q1;
    r.residual = lhs - cplx(X * q1, 0.0);
    out.rows.push_back(r);
    return out;
}

ExperimentResult run_experiment(const std::string& name, int threads, double max_x, bool force) {
    if (name == "thm12") return experiment_thm12(threads, cplx(0.1, 0.0), max_x, force);
    if (name == "thm11")
        return experiment_thm11(threads, cplx(0.25, 0.0), cplx(0.3, 0.0), max_x, force);
    if (name == "cor13") return experiment_cor13(threads, 8000.0, max_x, force);
    throw std::invalid_argument("unknown experiment: " + name);
}

std::vector<std::string> experiment_names() { return {"thm11", "thm12", "cor13"}; }

}  // namespace qhl
