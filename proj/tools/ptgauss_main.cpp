// Experiment runner: equilibrium sweeps over (alpha, P), closed forms checked
// against quadrature and Monte Carlo, results persisted as CSV and plot data.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptgauss/errors.hpp"
#include "ptgauss/sweep.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kValidation = 1,
    kVerification = 2,
    kIo = 3,
};

int run(const ptgauss::SweepConfig& cfg, bool verify, const ptgauss::VerificationOptions& opts) {
    if (verify) {
        const auto checks = ptgauss::run_verification(cfg, opts);
        const std::string path = ptgauss::write_verification_output(cfg, checks);
        std::ostringstream text;
        ptgauss::write_verification_report(checks, text);
        std::cout << text.str() << "report: " << path << "\n";
        if (!ptgauss::all_pass(checks)) {
            for (const auto& c : checks)
                if (!c.pass) std::cerr << "verification failed: " << c.name << "\n";
            return kVerification;
        }
        return kOk;
    }

    const auto records = ptgauss::run_sweep(cfg);
    const std::string csv = ptgauss::write_sweep_outputs(cfg, records);
    const double worst = ptgauss::max_rel_err_quad(records);
    std::cout << records.size() << " sweep rows -> " << csv << " (worst quadrature rel err "
              << worst << ")\n";
    if (worst > 1.0e-5) {
        std::cerr << "sweep quadrature tolerance exceeded: " << worst << " > 1e-5\n";
        return kVerification;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral distortion sweeps for the Gaussian test channel"};

    std::string config_path;
    std::string out_dir;
    uint64_t seed = 0;
    long long samples = 0;
    bool no_mc = false;
    bool verify = false;
    double corrupt_normalizer = 0.0;

    app.add_option("--config", config_path, "key=value config file");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    auto* seed_opt = app.add_option("--seed", seed, "Monte Carlo master seed (overrides config)");
    auto* samples_opt = app.add_option("--samples", samples, "Monte Carlo samples (overrides config)");
    app.add_flag("--no-mc", no_mc, "skip Monte Carlo columns");
    app.add_flag("--verify", verify, "run the oracle verification suite instead of the sweep");
    app.add_option("--corrupt-normalizer", corrupt_normalizer)->group(""); // test hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }

    try {
        ptgauss::SweepConfig cfg;
        if (!config_path.empty()) cfg = ptgauss::load_config_file(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (*seed_opt) cfg.mc_seed = seed;
        if (*samples_opt) cfg.mc_samples = samples;
        if (no_mc) cfg.mc_enabled = false;
        ptgauss::validate(cfg);

        ptgauss::VerificationOptions opts;
        opts.corrupt_normalizer = corrupt_normalizer;
        return run(cfg, verify, opts);
    } catch (const ptgauss::validation_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kValidation;
    } catch (const ptgauss::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const ptgauss::verification_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kVerification;
    } catch (const ptgauss::numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kVerification;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerification;
    }
}
