#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ptgauss/config.hpp"
#include "ptgauss/equilibrium.hpp"
#include "ptgauss/mc.hpp"

namespace ptgauss {

struct ResultRecord {
    double alpha;
    double p;
    double sigma_s2;
    double sigma_n2;
    double k1_star;
    double decoder_a;
    double d_closed;
    double d_quad;
    std::optional<double> d_mc;
    std::optional<double> mc_stderr;
    double rel_err_quad;
};

// Equilibrium solve per (alpha, P) in config order; P = 0 is the degenerate
// no-information point (zero encoder/decoder, distorted prior variance).
std::vector<ResultRecord> run_sweep(const SweepConfig& cfg);

// Largest |d_quad - d_closed| / d_closed over the records.
double max_rel_err_quad(const std::vector<ResultRecord>& records);

// Header exactly:
// alpha,p,sigma_s2,sigma_n2,k1_star,decoder_a,d_closed,d_quad,d_mc,mc_stderr,rel_err_quad
// Floats at 17 significant digits; d_mc/mc_stderr left empty when absent.
void write_sweep_csv(const std::vector<ResultRecord>& records, std::ostream& out);

// Gnuplot-style blocks, one per alpha in descending order:
// `# alpha=<v>` then `P D` rows, blocks blank-line separated.
void write_power_curves(const std::vector<ResultRecord>& records, std::ostream& out);

struct CheckResult {
    std::string name;
    bool pass;
    double metric;    // measured value the check gates on
    double tolerance; // bound it is compared against
};

struct VerificationOptions {
    // Test hook: scales the closed-form normalizer inside the
    // alpha_normalizer check to prove the failure path fires.
    double corrupt_normalizer = 0.0;
};

// Full oracle suite: discretization convergence, normalizer k-independence,
// encoder/decoder optimality grids, sweep quadrature agreement, and Monte
// Carlo agreement (direct everywhere; cross-estimator gate restricted to
// alphas with finite importance-weight variance, alpha > 1/2).
std::vector<CheckResult> run_verification(const SweepConfig& cfg, const VerificationOptions& opts = {});

void write_verification_report(const std::vector<CheckResult>& checks, std::ostream& out);

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

// File-writing front ends; create output_dir if needed, io_error on failure.
std::string write_sweep_outputs(const SweepConfig& cfg, const std::vector<ResultRecord>& records);
std::string write_verification_output(const SweepConfig& cfg, const std::vector<CheckResult>& checks);

} // namespace ptgauss
