// command-line front end: exact symbols and Gauss sums, L-values, the
// main-term formulas, the moment experiments, and the verification suites
#include "qhl/asymptotics.hpp"
#include "qhl/characters.hpp"
#include "qhl/experiments.hpp"
#include "qhl/gauss.hpp"
#include "qhl/gint.hpp"
#include "qhl/lfunctions.hpp"
#include "qhl/moments.hpp"
#include "qhl/verify.hpp"
#include "qhl/weights.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace qhl;

namespace {

// Global run configuration.  Every flag has a QHL_-prefixed environment
// override (e.g. QHL_THREADS); flags win over the environment.
struct RunConfig {
    std::string subcommand;
    int precision = 15;  // working-precision contract, not display width
    int threads = 1;
    std::uint64_t seed = 12345;
    std::string output;
    std::string format = "text";  // text | json | csv
    std::int64_t max_norm = 1000000;
    double max_x = 10000.0;
    bool force = false;
};

// "re" or "re,im"
cplx parse_shift(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
    return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::string shift_str(cplx z) { return fmt12c(z.real(), z.imag()); }

json shift_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

struct RunOutput {
    std::string text;       // printed to stdout
    json data;              // --format json payload
    std::string csv;        // --format csv payload (empty if not tabular)
    int exit_code = 0;
};

void write_manifest(const RunConfig& cfg, const std::vector<std::string>& args, double runtime_s) {
    json m;
    m["subcommand"] = cfg.subcommand;
    m["args"] = args;
    m["config"] = {{"precision", cfg.precision}, {"threads", cfg.threads},
                   {"seed", cfg.seed},           {"format", cfg.format},
                   {"max_norm", cfg.max_norm},   {"max_x", cfg.max_x},
                   {"force", cfg.force},         {"output", cfg.output}};
    m["versions"] = {{"artifact", "1.0.0"}, {"compiler", __VERSION__}};
    m["runtime_s"] = runtime_s;
    std::string path = cfg.output.empty() ? "qhl-manifest.json" : cfg.output + ".manifest.json";
    std::ofstream f(path);
    f << m.dump(2) << "\n";
}

void emit(const RunConfig& cfg, const RunOutput& out) {
    std::fputs(out.text.c_str(), stdout);
    if (cfg.output.empty()) return;
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.output);
    if (cfg.format == "json") f << out.data.dump(2) << "\n";
    else if (cfg.format == "csv") f << (out.csv.empty() ? out.text : out.csv);
    else f << out.text;
}

json report_row_json(const MomentReport& r) {
    json j;
    j["X"] = r.X;
    j["alpha"] = shift_json(r.alpha);
    if (r.beta) j["beta"] = shift_json(*r.beta);
    j["lhs"] = shift_json(r.lhs);
    j["term1"] = shift_json(r.term1);
    j["term2"] = shift_json(r.term2);
    j["abs_residual"] = std::abs(r.residual);
    j["runtime_s"] = r.runtime_s;
    j["n_count"] = r.n_count;
    j["flagged"] = r.flagged;
    return j;
}

// CSV rows for the moment/ratios subcommands, one line per MomentReport
std::string report_csv_header() {
    return "X,alpha_re,alpha_im,beta_re,beta_im,lhs_re,lhs_im,term1_re,term1_im,"
           "term2_re,term2_im,abs_residual,runtime_s,n_count,flagged\n";
}

std::string report_csv_row(const MomentReport& r) {
    cplx b = r.beta.value_or(cplx(0.0, 0.0));
    std::string s = fmt12(r.X);
    for (double v : {r.alpha.real(), r.alpha.imag(), b.real(), b.imag(), r.lhs.real(),
                     r.lhs.imag(), r.term1.real(), r.term1.imag(), r.term2.real(),
                     r.term2.imag(), std::abs(r.residual), r.runtime_s})
        s += "," + fmt12(v);
    s += "," + std::to_string(r.n_count) + "," + std::to_string(r.flagged) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"quadratic Hecke character and L-function toolkit for Q(i)"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    app.add_option("--precision", cfg.precision, "working precision digits (double gives 15-17)")
        ->envname("QHL_PRECISION")->check(CLI::Range(15, 17));
    app.add_option("--threads", cfg.threads, "worker threads for the moment sums")
        ->envname("QHL_THREADS")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for every randomized suite; no time seeding")
        ->envname("QHL_SEED");
    app.add_option("--output", cfg.output, "write results to this file (format per --format)")
        ->envname("QHL_OUTPUT");
    app.add_option("--format", cfg.format, "output file format")
        ->envname("QHL_FORMAT")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-norm", cfg.max_norm, "cap on norms in direct summations")
        ->envname("QHL_MAX_NORM")->check(CLI::PositiveNumber);
    app.add_option("--max-x", cfg.max_x, "cap on the moment scale X")
        ->envname("QHL_MAX_X")->check(CLI::PositiveNumber);
    app.add_flag("--force", cfg.force, "override the X cap")->envname("QHL_FORCE");

    // symbol
    std::string arg_a, arg_n, arg_r, arg_m, arg_suite = "all", arg_exp;
    auto* c_symbol = app.add_subcommand("symbol", "quadratic residue symbol (a/n), n odd");
    c_symbol->add_option("a", arg_a)->required();
    c_symbol->add_option("n", arg_n)->required();

    // gauss
    bool gauss_check = false;
    auto* c_gauss = app.add_subcommand("gauss", "Gauss sum g(r,n) in closed form, n primary");
    c_gauss->add_option("r", arg_r)->required();
    c_gauss->add_option("n", arg_n)->required();
    c_gauss->add_flag("--check", gauss_check, "cross-check against the direct residue sum");

    // lvalue
    double s_re = 0.5, s_im = 0.0;
    auto* c_lvalue = app.add_subcommand("lvalue", "L(s, chi_m) for a twist m");
    c_lvalue->add_option("m", arg_m)->required();
    c_lvalue->add_option("s_re", s_re)->required();
    c_lvalue->add_option("s_im", s_im);

    // zeta
    auto* c_zeta = app.add_subcommand("zeta", "Dedekind zeta of Q(i)");
    c_zeta->add_option("s_re", s_re)->required();
    c_zeta->add_option("s_im", s_im);

    // mainterm
    double mt_x = 1000.0;
    std::string mt_alpha = "0.1", mt_beta, weight_name = "exp_both";
    auto* c_mainterm = app.add_subcommand("mainterm", "main-term formulas at scale X");
    c_mainterm->add_option("--x", mt_x)->required();
    c_mainterm->add_option("--alpha", mt_alpha, "shift, re or re,im")->envname("QHL_ALPHA");
    c_mainterm->add_option("--beta", mt_beta, "second shift (ratio formula when set)")
        ->envname("QHL_BETA");
    c_mainterm->add_option("--weight", weight_name)->envname("QHL_WEIGHT")
        ->check(CLI::IsMember({"exp_decay", "exp_both", "bump"}));

    // moment / ratios
    std::vector<double> x_grid;
    double exponent_bound = 0.75;
    auto* c_moment = app.add_subcommand("moment", "first-moment brute-force sum vs main terms");
    auto* c_ratios = app.add_subcommand("ratios", "ratio-average brute-force sum vs main terms");
    for (auto* c : {c_moment, c_ratios}) {
        c->add_option("--x", mt_x, "single scale X");
        c->add_option("--x-grid", x_grid, "comma-separated X grid")->delimiter(',');
        c->add_option("--alpha", mt_alpha)->envname("QHL_ALPHA");
        c->add_option("--weight", weight_name)->envname("QHL_WEIGHT")
            ->check(CLI::IsMember({"exp_decay", "exp_both", "bump"}));
        c->add_option("--exponent-bound", exponent_bound,
                      "nonzero exit if the fitted exponent exceeds this");
    }
    c_ratios->add_option("--beta", mt_beta)->envname("QHL_BETA");

    // mds
    std::string mds_s = "2", mds_w = "2";
    std::int64_t mds_cutoff = 2000;
    auto* c_mds = app.add_subcommand("mds", "double Dirichlet series symmetry check");
    c_mds->add_option("--s", mds_s)->envname("QHL_MDS_S");
    c_mds->add_option("--w", mds_w)->envname("QHL_MDS_W");
    c_mds->add_option("--cutoff", mds_cutoff)->check(CLI::PositiveNumber);

    // verify / report
    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", arg_suite)->check(CLI::IsMember(suite_names()));
    auto* c_report = app.add_subcommand("report", "run an X-grid experiment");
    c_report->add_option("experiment", arg_exp)->required()
        ->check(CLI::IsMember(experiment_names()));

    CLI11_PARSE(app, argc, argv);

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    auto t0 = std::chrono::steady_clock::now();
    RunOutput out;
    try {
        if (c_symbol->parsed()) {
            cfg.subcommand = "symbol";
            GaussianInt a = parse_gint(arg_a), n = parse_gint(arg_n);
            int v = quad_symbol(a, n);
            out.text = "symbol(" + format_gint(a) + ", " + format_gint(n) + ") = " +
                       std::to_string(v) + "\n";
            out.data = {{"a", format_gint(a)}, {"n", format_gint(n)}, {"symbol", v}};
        } else if (c_gauss->parsed()) {
            cfg.subcommand = "gauss";
            GaussianInt r = parse_gint(arg_r), n = parse_gint(arg_n);
            ExactGaussSum g = gauss_sum_fast(r, n);
            out.text = "g(" + format_gint(r) + ", " + format_gint(n) + ") = " + g.coeff.str() +
                       " * sqrt(" + g.radicand.str() + ") = " + fmt12(g.value()) + "\n";
            out.data = {{"r", format_gint(r)},       {"n", format_gint(n)},
                        {"coeff", g.coeff.str()},    {"radicand", g.radicand.str()},
                        {"value", g.value()}};
            if (gauss_check) {
                if (n.norm() > cfg.max_norm)
                    throw std::domain_error("gauss --check: N(n) exceeds --max-norm");
                std::complex<double> d = gauss_sum_direct(to_small(mod(r, n)), to_small(n));
                double dev = std::abs(std::complex<double>(g.value(), 0.0) - d);
                out.text += "direct = " + fmt12c(d.real(), d.imag()) + " abs_dev=" + fmt12(dev) +
                            "\n";
                out.data["direct_abs_dev"] = dev;
                if (dev > 1e-9 * std::max(1.0, std::abs(g.value()))) out.exit_code = 1;
            }
        } else if (c_lvalue->parsed()) {
            cfg.subcommand = "lvalue";
            GaussianInt m = parse_gint(arg_m);
            LEvaluation ev = l_value_imprimitive(m, {s_re, s_im});
            out.text = "L(" + shift_str({s_re, s_im}) + ", chi_" + format_gint(m) + ") = " +
                       shift_str(ev.value) + "\n";
            out.text += "truncation_norm=" + std::to_string(ev.truncation_norm) +
                        " est_error=" + fmt12(ev.est_error) + "\n";
            out.data = {{"m", format_gint(m)},
                        {"s", shift_json({s_re, s_im})},
                        {"value", shift_json(ev.value)},
                        {"truncation_norm", ev.truncation_norm},
                        {"est_error", ev.est_error}};
        } else if (c_zeta->parsed()) {
            cfg.subcommand = "zeta";
            std::complex<double> v = zeta_K({s_re, s_im});
            out.text = "zeta(" + shift_str({s_re, s_im}) + ") = " + shift_str(v) + "\n";
            out.data = {{"s", shift_json({s_re, s_im})}, {"value", shift_json(v)}};
        } else if (c_mainterm->parsed()) {
            cfg.subcommand = "mainterm";
            WeightFunction w = WeightFunction::by_name(weight_name);
            cplx alpha = parse_shift(mt_alpha);
            MainTermBreakdown b = mt_beta.empty()
                                      ? main_term_first_moment(mt_x, alpha, w)
                                      : main_term_ratios(mt_x, alpha, parse_shift(mt_beta), w);
            out.text = "term1 = " + shift_str(b.term1) + " (X^" + fmt12(b.exponent1) + ")\n";
            out.text += "term2 = " + shift_str(b.term2) + " (X^" + fmt12(b.exponent2) + ")\n";
            out.text += "total = " + shift_str(b.total()) +
                        " error_exponent_bound=" + fmt12(b.error_exponent_bound) + "\n";
            out.data = {{"X", mt_x},
                        {"alpha", shift_json(alpha)},
                        {"weight", weight_name},
                        {"term1", shift_json(b.term1)},
                        {"term2", shift_json(b.term2)},
                        {"total", shift_json(b.total())},
                        {"exponent1", b.exponent1},
                        {"exponent2", b.exponent2},
                        {"error_exponent_bound", b.error_exponent_bound}};
            if (!mt_beta.empty()) out.data["beta"] = shift_json(parse_shift(mt_beta));
        } else if (c_moment->parsed() || c_ratios->parsed()) {
            bool is_ratio = c_ratios->parsed();
            cfg.subcommand = is_ratio ? "ratios" : "moment";
            WeightFunction w = WeightFunction::by_name(weight_name);
            cplx alpha = parse_shift(mt_alpha);
            std::optional<cplx> beta;
            if (is_ratio) beta = parse_shift(mt_beta.empty() ? "0.3" : mt_beta);
            if (x_grid.empty()) x_grid.push_back(mt_x);
            std::vector<MomentReport> rows;
            out.csv = report_csv_header();
            out.data = json::array();
            for (double X : x_grid) {
                MomentReport r = is_ratio
                                     ? run_ratios(X, alpha, *beta, w, cfg.threads, cfg.max_x,
                                                  cfg.force)
                                     : run_first_moment(X, alpha, w, cfg.threads, cfg.max_x,
                                                        cfg.force);
                out.text += "X=" + fmt12(r.X) + " lhs=" + shift_str(r.lhs) +
                            " term1=" + shift_str(r.term1) + " term2=" + shift_str(r.term2) +
                            " abs_residual=" + fmt12(std::abs(r.residual)) +
                            " n_count=" + std::to_string(r.n_count) +
                            (is_ratio ? " flagged=" + std::to_string(r.flagged) : "") +
                            " runtime_s=" + fmt12(r.runtime_s) + "\n";
                out.csv += report_csv_row(r);
                out.data.push_back(report_row_json(r));
                rows.push_back(std::move(r));
            }
            if (rows.size() >= 4) {
                auto [slope, r2] = exponent_fit(rows);
                out.text += "exponent_fit: slope=" + fmt12(slope) + " r2=" + fmt12(r2) + "\n";
                out.data = {{"rows", out.data}, {"slope", slope}, {"r2", r2}};
                if (slope > exponent_bound) out.exit_code = 1;
            }
        } else if (c_mds->parsed()) {
            cfg.subcommand = "mds";
            DoubleDirichletCheck c = double_dirichlet_A(parse_shift(mds_s), parse_shift(mds_w),
                                                        mds_cutoff);
            double diff = std::abs(c.valA - c.valB);
            out.text = "valA = " + shift_str(c.valA) + "\nvalB = " + shift_str(c.valB) + "\n";
            out.text += "abs_diff=" + fmt12(diff) + " estA=" + fmt12(c.estA) +
                        " estB=" + fmt12(c.estB) + "\n";
            out.data = {{"s", shift_json(parse_shift(mds_s))},
                        {"w", shift_json(parse_shift(mds_w))},
                        {"cutoff", mds_cutoff},
                        {"valA", shift_json(c.valA)},
                        {"valB", shift_json(c.valB)},
                        {"abs_diff", diff},
                        {"estA", c.estA},
                        {"estB", c.estB}};
            if (diff > c.estA + c.estB) out.exit_code = 1;
        } else if (c_verify->parsed()) {
            cfg.subcommand = "verify";
            CheckList checks = run_suite(arg_suite, cfg.seed);
            out.text = render_checks(checks);
            out.data = json::array();
            for (const auto& c : checks)
                out.data.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail},
                                    {"runtime_s", c.runtime_s}});
            if (!all_pass(checks)) out.exit_code = 1;
        } else if (c_report->parsed()) {
            cfg.subcommand = "report";
            ExperimentResult r = run_experiment(arg_exp, cfg.threads, cfg.max_x, cfg.force);
            out.text = r.text;
            out.csv = r.plot_csv;
            out.data = json::array();
            for (const auto& row : r.rows) out.data.push_back(report_row_json(row));
            out.data = {{"experiment", r.name}, {"rows", out.data}, {"slope", r.slope},
                        {"r2", r.r2},           {"ok", r.ok}};
            if (!r.ok) out.exit_code = 1;
        }
        emit(cfg, out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        write_manifest(cfg, raw_args,
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return 2;
    }
    write_manifest(cfg, raw_args,
                   std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return out.exit_code;
}
