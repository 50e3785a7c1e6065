#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvlab/report.hpp"
#include "curvlab/verify.hpp"

// curvlab: construct or load a model and verify every identity it should
// satisfy; run the property suites; sweep (kappa, mu) grids.
//
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage/parse error.

namespace {

int write_output(const curvlab::json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

bool parse_range(const std::string& text, double& lo, double& hi) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) return false;
    try {
        std::size_t used = 0;
        const std::string a = text.substr(0, pos), b = text.substr(pos + 2);
        lo = std::stod(a, &used);
        if (used != a.size()) return false;
        hi = std::stod(b, &used);
        if (used != b.size()) return false;
    } catch (...) {
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvlab: numerical curvature engine for almost contact model spaces"};
    app.require_subcommand(1);

    // model
    std::string model_spec, model_out;
    double model_tol = 1e-9;
    CLI::App* cmd_model = app.add_subcommand(
        "model", "verify a single model (catalog spec or model file path)");
    cmd_model->add_option("spec", model_spec,
                          "g-lambda:n:lambda | milnor:c1:c2:c3 | sphere:n | "
                          "contact-km:n:kappa:mu | cosym-km:n:kappa:mu | <file>")
        ->required();
    cmd_model->add_option("--tol", model_tol, "residual tolerance");
    cmd_model->add_option("--out", model_out, "write report JSON to file (default: stdout)");

    // verify
    std::string suite = "all", verify_out;
    double verify_tol = 1e-9;
    unsigned long long seed = 7;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a property suite");
    cmd_verify->add_option("--suite", suite, "all | sasakian | contact-km | cosym-km | lie-oracle");
    cmd_verify->add_option("--tol", verify_tol, "residual tolerance");
    cmd_verify->add_option("--seed", seed, "seed for randomized profiles");
    cmd_verify->add_option("--out", verify_out, "write summary JSON to file (default: stdout)");

    // sweep
    std::string family_name, kappa_range, mu_range, sweep_out;
    int sweep_n = 1, sweep_steps = 50;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "evaluate a (kappa, mu) parameter grid");
    cmd_sweep->add_option("--family", family_name, "contact | cosym")->required();
    cmd_sweep->add_option("--n", sweep_n, "half-dimension n (dim = 2n+1)")->required();
    cmd_sweep->add_option("--kappa", kappa_range, "range A..B")->required();
    cmd_sweep->add_option("--mu", mu_range, "range C..D")->required();
    cmd_sweep->add_option("--steps", sweep_steps, "grid points per axis");
    cmd_sweep->add_option("--out", sweep_out, "write sweep JSON to file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_model) {
            bool pass = false;
            const curvlab::json rep = curvlab::model_report(model_spec, model_tol, pass);
            const int wr = write_output(rep, model_out);
            if (wr != 0) return wr;
            return pass ? 0 : 1;
        }
        if (*cmd_verify) {
            bool pass = false;
            const curvlab::json summary = curvlab::run_verify(suite, verify_tol, seed, pass);
            const int wr = write_output(summary, verify_out);
            if (wr != 0) return wr;
            return pass ? 0 : 1;
        }
        if (*cmd_sweep) {
            curvlab::Family family;
            if (family_name == "contact")
                family = curvlab::Family::contact;
            else if (family_name == "cosym" || family_name == "almost-cosymplectic")
                family = curvlab::Family::almost_cosymplectic;
            else {
                std::cerr << "error: unknown family '" << family_name << "'\n";
                return 2;
            }
            double k0, k1, m0, m1;
            if (!parse_range(kappa_range, k0, k1) || !parse_range(mu_range, m0, m1)) {
                std::cerr << "error: ranges must have the form A..B\n";
                return 2;
            }
            const curvlab::json sweep =
                curvlab::run_sweep(family, sweep_n, k0, k1, m0, m1, sweep_steps);
            return write_output(sweep, sweep_out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
