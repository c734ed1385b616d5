#ifndef QHL_EXPERIMENTS_HPP
#define QHL_EXPERIMENTS_HPP

#include "qhl/moments.hpp"

#include <string>
#include <vector>

namespace qhl {

// One desk-scale X-grid experiment.  text is a deterministic rendering
// (12 significant digits, no timing) suitable for byte comparison across
// runs and thread counts; timings live only in the rows' runtime_s.
struct ExperimentResult {
    std::string name;
    std::vector<MomentReport> rows;
    double slope = 0.0;
    double r2 = 0.0;
    bool ok = true;
    std::string text;
    std::string plot_csv;  // X, |residual| rows
};

// shifted first moment at alpha over the standard grid; passes when the
// relative residual decreases monotonically and the fitted exponent stays
// at or below exponent_bound
ExperimentResult experiment_thm12(int threads, cplx alpha = cplx(0.1, 0.0),
                                  double max_x = 10000.0, bool force = false,
                                  double exponent_bound = 0.75);

// ratio average at (alpha, beta) over the same grid; additionally requires
// zero flagged near-zero denominators
ExperimentResult experiment_thm11(int threads, cplx alpha = cplx(0.25, 0.0),
                                  cplx beta = cplx(0.3, 0.0), double max_x = 10000.0,
                                  bool force = false, double exponent_bound = 0.75);

// central-value average against X times the extrapolated linear
// polynomial in log X; checks the 5% ratio window and the stability of
// the extrapolation under halving the probe offset
ExperimentResult experiment_cor13(int threads, double X = 8000.0, double max_x = 10000.0,
                                  bool force = false);

ExperimentResult run_experiment(const std::string& name, int threads, double max_x, bool force);
std::vector<std::string> experiment_names();

}  // namespace qhl

#endif
