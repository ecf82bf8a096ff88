// gnsharp command-line front end.
//
// Subcommands: constant, table, verify, sharpness, sweep-lambda,
// quadrature-check.  Exit codes: 0 all checks passed, 1 a check failed
// (reports are still written), 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gnsharp/gnsharp.hpp"

using json = nlohmann::ordered_json;
using namespace gnsharp;

namespace {

// Fixed-point with the requested number of significant digits, zero padded
// (0.5 prints as 0.500000000000000 at 15 digits).
std::string significant(double value, int digits) {
    int integer_digits = 1;
    if (value != 0.0) {
        integer_digits = static_cast<int>(std::floor(std::log10(std::abs(value)))) + 1;
    }
    const int decimals = std::max(0, digits - integer_digits);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
    return buffer;
}

std::string full(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    out << text;
}

json report_to_json(const InequalityReport& r) {
    json j;
    j["inequality_id"] = to_string(r.id);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["ratio"] = r.ratio;
    j["constant_used"] = r.constant_used;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["degenerate"] = r.degenerate;
    if (r.grid.has_value()) {
        j["grid"] = {{"n", r.grid->n()},
                     {"points_per_axis", r.grid->points_per_axis()},
                     {"box_length", r.grid->box_length()}};
    } else {
        j["grid"] = "exact";
    }
    j["n"] = r.n;
    j["s"] = r.s;
    j["library_version"] = library_version;
    return j;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports,
                           const std::vector<std::string>& contexts) {
    std::string csv =
        "inequality_id,n,s,N,L,lhs,rhs,ratio,constant_used,tolerance,passed,degenerate,"
        "context,library_version\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const InequalityReport& r = reports[i];
        csv += to_string(r.id);
        csv += ',' + std::to_string(r.n) + ',' + full(r.s);
        if (r.grid.has_value()) {
            csv += ',' + std::to_string(r.grid->points_per_axis()) + ',' +
                   full(r.grid->box_length());
        } else {
            csv += ",exact,exact";
        }
        csv += ',' + full(r.lhs) + ',' + full(r.rhs) + ',' + full(r.ratio) + ',' +
               full(r.constant_used) + ',' + full(r.tolerance);
        csv += r.passed ? ",true" : ",false";
        csv += r.degenerate ? ",true" : ",false";
        csv += ',' + contexts[i] + ',' + library_version + '\n';
    }
    return csv;
}

struct VerifyOptions {
    int n = 1;
    double s = 1.0;
    std::string function = "gaussian";
    int points = 0;  // 0 -> dimension default
    double length = 60.0;
    double tolerance = 1e-9;
    int seeds = 1;
    std::uint64_t seed_base = 0;
    double gauss_width = 0.5;
    double amplitude = 1.0;
    std::string out;
    std::string format = "json";
    std::string dump_function;
};

GridSpec make_grid(int n, int points, double length) {
    return GridSpec(n, points > 0 ? points : (n == 3 ? 64 : 256), length);
}

int run_verify(const VerifyOptions& opt) {
    const SobolevIndex idx(opt.n, opt.s);
    const GridSpec g = make_grid(opt.n, opt.points, opt.length);

    std::vector<GridFunction> corpus;
    std::vector<std::string> labels;
    if (opt.function == "gaussian") {
        corpus.push_back(gaussian(g, opt.gauss_width));
        labels.push_back("gaussian");
    } else if (opt.function == "extremizer") {
        corpus.push_back(
            inverse_transform(bessel_potential_spectrum(ExtremizerSpec(idx, opt.amplitude), g)));
        labels.push_back("extremizer");
    } else if (opt.function == "random") {
        for (int i = 0; i < opt.seeds; ++i) {
            const std::uint64_t seed = opt.seed_base + static_cast<std::uint64_t>(i);
            corpus.push_back(random_band_limited(g, seed, default_cutoff(g), default_decay(g)));
            labels.push_back("random:" + std::to_string(seed));
        }
    } else {
        throw CLI::ValidationError("--function must be gaussian, extremizer or random");
    }

    if (!opt.dump_function.empty()) {
        save_grid_function(opt.dump_function, corpus.front(), ArrayFormat::binary);
    }

    std::vector<InequalityReport> reports;
    std::vector<std::string> contexts;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const SpectralField f = forward_transform(corpus[i]);
        const NormBundle nb = norms(corpus[i], f, opt.s);
        reports.push_back(l1_bound_check(corpus[i], f, opt.tolerance));
        reports.back().s = opt.s;  // the bound itself does not involve s
        reports.push_back(check_embedding(nb, g, idx, opt.tolerance));
        reports.push_back(check_interpolation(nb, g, idx, opt.tolerance));
        if (nb.l2 > 0.0 && nb.hs_semi > 0.0) {
            reports.push_back(check_young(nb.l2, nb.hs_semi, idx));
        }
        for (std::size_t k = contexts.size(); k < reports.size(); ++k) {
            contexts.push_back(labels[i]);
        }
    }

    if (opt.format == "csv") {
        write_output(reports_to_csv(reports, contexts), opt.out);
    } else {
        json all = json::array();
        for (std::size_t i = 0; i < reports.size(); ++i) {
            json j = report_to_json(reports[i]);
            j["function"] = contexts[i];
            all.push_back(std::move(j));
        }
        write_output(all.dump(2) + "\n", opt.out);
    }

    for (const InequalityReport& r : reports) {
        if (!r.passed) {
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp supnorm constants for Sobolev functions: compute the closed-form "
                 "constants, construct the extremizers and verify every inequality numerically"};
    app.require_subcommand(1);

    // constant ---------------------------------------------------------------
    auto* cmd_constant = app.add_subcommand("constant", "Print one constant to 15 digits");
    int co_n = 1;
    double co_s = 1.0;
    std::string co_kind = "gn";
    cmd_constant->add_option("--n", co_n, "Spatial dimension")->required();
    cmd_constant->add_option("--s", co_s, "Regularity order, s > n/2")->required();
    cmd_constant->add_option("--kind", co_kind, "gn | embedding | young")
        ->check(CLI::IsMember({"gn", "embedding", "young"}));

    // table ------------------------------------------------------------------
    auto* cmd_table = app.add_subcommand("table", "Emit a CSV table of constants");
    std::vector<int> ta_n;
    std::vector<double> ta_s;
    std::string ta_out;
    cmd_table->add_option("--n", ta_n, "Dimensions (comma separated)")
        ->required()
        ->delimiter(',');
    cmd_table->add_option("--s", ta_s, "Orders (comma separated)")->required()->delimiter(',');
    cmd_table->add_option("--out", ta_out, "Output path (default stdout)");

    // verify -----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "Run the inequality checks on a function");
    VerifyOptions vo;
    cmd_verify->add_option("--n", vo.n, "Spatial dimension (1..3)")->required();
    cmd_verify->add_option("--s", vo.s, "Regularity order, s > n/2")->required();
    cmd_verify->add_option("--function", vo.function, "gaussian | extremizer | random")
        ->check(CLI::IsMember({"gaussian", "extremizer", "random"}));
    cmd_verify->add_option("--N", vo.points, "Points per axis (power of two)");
    cmd_verify->add_option("--L", vo.length, "Box side length");
    cmd_verify->add_option("--tol", vo.tolerance, "Pass/fail tolerance on the ratio");
    cmd_verify->add_option("--seeds", vo.seeds, "Number of random seeds")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", vo.seed_base, "First seed of the corpus");
    cmd_verify->add_option("--a", vo.gauss_width, "Gaussian width parameter");
    cmd_verify->add_option("--c", vo.amplitude, "Extremizer amplitude");
    cmd_verify->add_option("--out", vo.out, "Output path (default stdout)");
    cmd_verify->add_option("--format", vo.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_verify->add_option("--dump-function", vo.dump_function,
                           "Also write the (first) function in the grid array format");

    // sharpness ----------------------------------------------------------------
    auto* cmd_sharp = app.add_subcommand("sharpness", "Extremizer sharpness ratio");
    int sh_n = 1;
    double sh_s = 1.0;
    std::string sh_method = "exact";
    int sh_points = 0;
    double sh_length = 60.0;
    double sh_tol = -1.0;
    cmd_sharp->add_option("--n", sh_n, "Spatial dimension")->required();
    cmd_sharp->add_option("--s", sh_s, "Regularity order, s > n/2")->required();
    cmd_sharp->add_option("--method", sh_method, "grid | exact")
        ->check(CLI::IsMember({"grid", "exact"}));
    cmd_sharp->add_option("--N", sh_points, "Points per axis (grid method)");
    cmd_sharp->add_option("--L", sh_length, "Box side length (grid method)");
    cmd_sharp->add_option("--tol", sh_tol, "|ratio-1| tolerance (default 1e-9 exact, 1e-4 grid)");

    // sweep-lambda --------------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep-lambda", "Sample the scaling objective");
    int sw_n = 1;
    double sw_s = 1.0;
    std::string sw_function = "gaussian";
    int sw_points_grid = 0;
    double sw_length = 60.0;
    int sw_samples = 128;
    std::uint64_t sw_seed = 0;
    double sw_width = 0.5;
    std::string sw_out;
    cmd_sweep->add_option("--n", sw_n, "Spatial dimension (1..3)")->required();
    cmd_sweep->add_option("--s", sw_s, "Regularity order, s > n/2")->required();
    cmd_sweep->add_option("--function", sw_function, "gaussian | extremizer | random")
        ->check(CLI::IsMember({"gaussian", "extremizer", "random"}));
    cmd_sweep->add_option("--points", sw_samples, "Number of lambda samples (>= 16)");
    cmd_sweep->add_option("--N", sw_points_grid, "Points per axis");
    cmd_sweep->add_option("--L", sw_length, "Box side length");
    cmd_sweep->add_option("--seed", sw_seed, "Seed for the random function");
    cmd_sweep->add_option("--a", sw_width, "Gaussian width parameter");
    cmd_sweep->add_option("--out", sw_out, "Output path (default stdout)");

    // quadrature-check -----------------------------------------------------------
    auto* cmd_quad = app.add_subcommand("quadrature-check",
                                        "Lorentzian mass: quadrature vs closed form");
    int qc_n = 1;
    double qc_s = 1.0;
    double qc_tol = 1e-8;
    cmd_quad->add_option("--n", qc_n, "Spatial dimension")->required();
    cmd_quad->add_option("--s", qc_s, "Regularity order, s > n/2")->required();
    cmd_quad->add_option("--tol", qc_tol, "Relative agreement tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_constant->parsed()) {
            const SobolevIndex idx(co_n, co_s);
            double value = 0.0;
            if (co_kind == "gn") {
                value = gn_constant(idx);
            } else if (co_kind == "embedding") {
                value = embedding_constant(idx);
            } else {
                value = young_factor(idx);
            }
            std::cout << significant(value, 15) << "\n";
            return 0;
        }

        if (cmd_table->parsed()) {
            std::string csv = "n,s,K_gn,C_embedding,young_factor\n";
            for (int n : ta_n) {
                for (double s : ta_s) {
                    const SobolevIndex idx(n, s);
                    csv += std::to_string(n) + ',' + full(s) + ',' + full(gn_constant(idx)) +
                           ',' + full(embedding_constant(idx)) + ',' + full(young_factor(idx)) +
                           '\n';
                }
            }
            write_output(csv, ta_out);
            return 0;
        }

        if (cmd_verify->parsed()) {
            return run_verify(vo);
        }

        if (cmd_sharp->parsed()) {
            const SobolevIndex idx(sh_n, sh_s);
            double ratio = 0.0;
            double tol = sh_tol;
            if (sh_method == "exact") {
                ratio = sharpness_ratio(idx, SharpnessMethod::exact);
                if (tol < 0.0) tol = 1e-9;
            } else {
                const GridSpec g = make_grid(sh_n, sh_points, sh_length);
                ratio = sharpness_ratio(idx, SharpnessMethod::grid, g);
                if (tol < 0.0) tol = 1e-4;
            }
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%.9f", ratio);
            std::cout << buffer << "\n";
            return std::abs(ratio - 1.0) <= tol ? 0 : 1;
        }

        if (cmd_sweep->parsed()) {
            const SobolevIndex idx(sw_n, sw_s);
            const GridSpec g = make_grid(sw_n, sw_points_grid, sw_length);
            ScalingSweepResult sweep;
            if (sw_function == "gaussian") {
                sweep = lambda_sweep(gaussian(g, sw_width), idx, sw_samples);
            } else if (sw_function == "extremizer") {
                const NormBundle nb = extremizer_norms_exact(ExtremizerSpec(idx, 1.0));
                sweep = lambda_sweep(nb.l2, nb.hs_semi, idx, sw_samples);
            } else {
                sweep = lambda_sweep(
                    random_band_limited(g, sw_seed, default_cutoff(g), default_decay(g)), idx,
                    sw_samples);
            }
            json j;
            j["n"] = sw_n;
            j["s"] = sw_s;
            j["degenerate"] = sweep.degenerate;
            j["lambda_star"] = sweep.lambda_star;
            j["argmin_sampled"] = sweep.argmin_sampled;
            j["min_value_closed_form"] = sweep.min_value_closed_form;
            j["lambdas"] = sweep.lambdas;
            j["objective"] = sweep.objective;
            j["library_version"] = library_version;
            write_output(j.dump(2) + "\n", sw_out);
            return 0;
        }

        if (cmd_quad->parsed()) {
            const SobolevIndex idx(qc_n, qc_s);
            const LorentzianMass m = lorentzian_mass(idx);
            const double rel = std::abs(m.quadrature - m.closed_form) / m.closed_form;
            std::printf("quadrature  %.17g\nclosed form %.17g\nrel diff    %.3e\n", m.quadrature,
                        m.closed_form, rel);
            return rel <= qc_tol ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
