#include <complex>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using bicalo::cli::JobConfig;
using bicalo::cli::Method;

bool parse_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return false;
    try {
        lo = std::stod(text.substr(0, colon));
        hi = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_dims(const std::string& text, int& nr, int& nt) {
    const auto x = text.find('x');
    if (x == std::string::npos) return false;
    try {
        nr = std::stoi(text.substr(0, x));
        nt = std::stoi(text.substr(x + 1));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

// Shared flag block; every value lands in cfg on callback.
void add_common_options(CLI::App* cmd, JobConfig& cfg) {
    cmd->add_option_function<std::string>(
           "--f", [&cfg](const std::string& v) { cfg.expression = v; },
           "holomorphic expression in tau, e.g. \"tau^2\"")
        ->required();
    cmd->add_option_function<std::string>(
           "--r",
           [&cfg](const std::string& v) {
               if (!parse_range(v, cfg.domain.r_min, cfg.domain.r_max))
                   throw CLI::ValidationError("--r", "expected <min>:<max>");
           },
           "radial range <min>:<max>");
    cmd->add_option_function<std::string>(
           "--theta",
           [&cfg](const std::string& v) {
               if (!parse_range(v, cfg.domain.theta_min, cfg.domain.theta_max))
                   throw CLI::ValidationError("--theta", "expected <min>:<max>");
           },
           "angular range <min>:<max> in radians; the upper bound is exclusive");
    cmd->add_option_function<std::string>(
           "--n",
           [&cfg](const std::string& v) {
               if (!parse_dims(v, cfg.domain.n_r, cfg.domain.n_theta))
                   throw CLI::ValidationError("--n", "expected <nr>x<ntheta>");
           },
           "grid size <nr>x<ntheta>");
    std::map<std::string, Method> methods{
        {"bianchi", Method::bianchi}, {"small", Method::small}, {"both", Method::both}};
    cmd->add_option_function<std::string>(
           "--method",
           [&cfg, methods](const std::string& v) {
               const auto it = methods.find(v);
               if (it == methods.end())
                   throw CLI::ValidationError("--method", "expected bianchi|small|both");
               cfg.method = it->second;
           },
           "construction route (default bianchi)");
    cmd->add_option_function<double>(
        "--tol-h", [&cfg](double v) { cfg.tolerances.h_mean_curvature = v; },
        "tolerance for max |H_hyp - 1|");
    cmd->add_option_function<double>(
        "--tol-equiv", [&cfg](double v) { cfg.tol_equivalence = v; },
        "tolerance for the bianchi/small pointwise deviation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CMC-1 surfaces in the upper half-space model from holomorphic data"};
    app.require_subcommand(1);

    JobConfig gen_cfg;  // full annulus, matches the gallery scale
    CLI::App* generate = app.add_subcommand("generate", "sample a surface and export OBJ + CSV");
    add_common_options(generate, gen_cfg);
    generate->add_option("--out", gen_cfg.out_path, "OBJ output path (CSV lands beside it)");

    JobConfig ver_cfg;
    // Certification patch: fine enough that every check resolves below the
    // default tolerances for well-behaved f.
    ver_cfg.domain = {0.9, 1.4, 0.2, 0.6, 1024, 1024};
    CLI::App* verify = app.add_subcommand("verify", "run the geometric checks, write a JSON report");
    add_common_options(verify, ver_cfg);
    verify->add_option("--report", ver_cfg.report_path, "JSON report path");

    std::string gallery_dir = ".";
    CLI::App* gallery = app.add_subcommand("gallery", "emit the built-in example catalog");
    gallery->add_option("--out", gallery_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (generate->parsed()) return bicalo::cli::run_generate(gen_cfg, std::cout, std::cerr);
    if (verify->parsed()) return bicalo::cli::run_verify(ver_cfg, std::cout, std::cerr);
    return bicalo::cli::run_gallery(gallery_dir, std::cout, std::cerr);
}
