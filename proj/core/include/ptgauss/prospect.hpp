#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ptgauss/gaussian.hpp"
#include "ptgauss/value.hpp"
#include "ptgauss/weight.hpp"

namespace ptgauss {

// A density discretized onto the lattice {z/n : z integer}; the atom at z
// carries the interval mass of [z/n, (z+1)/n) and stands for outcome z/n.
struct DiscreteProspect {
    int n;
    std::vector<std::pair<int64_t, double>> atoms; // (z, mass), z strictly increasing

    double total_mass() const {
        double s = 0.0;
        for (const auto& [z, m] : atoms) s += m;
        return s;
    }
};

// Lattice masses from CDF differences, keeping every z with z/n inside
// mean +/- trunc_sigmas standard deviations. trunc_sigmas >= 6 so the
// retained mass is 1 within 1e-8.
DiscreteProspect discretize(const GaussianDensity& p, int n, double trunc_sigmas);

// Sum of w(p_i) * values[i]; values are already v-transformed outcomes.
double discrete_pt_unnormalized(const std::vector<double>& probs, const std::vector<double>& values,
                                const WeightFunction& w);

// Weight-normalized utility: sum w(p_z) v(z/n, reference) / sum w(p_z).
double discrete_pt_karmarkar(const DiscreteProspect& prospect, const ValueFunction& v,
                             const WeightFunction& w, double reference = 0.0);

// Continuous-limit utility: integral p^alpha v / integral p^alpha. For a
// Gaussian p the alpha-th power renormalizes to N(mean, variance/alpha), so
// this is an expectation under the tilted density, done by Gauss-Hermite.
double continuous_pt(const GaussianDensity& p, const ValueFunction& v, double alpha,
                     double reference = 0.0, int nodes = 64);

// Same functional evaluated by adaptive trapezoid on the ratio form, with no
// reuse of the tilted closed form; cross-check path.
double continuous_pt_trapezoid(const GaussianDensity& p, const ValueFunction& v, double alpha,
                               double reference = 0.0, double rel_tol = 1.0e-10);

// |PT(p_n) - PT(p)| for each n in n_list.
std::vector<std::pair<int, double>> convergence_study(const GaussianDensity& p, const ValueFunction& v,
                                                      const WeightFunction& w,
                                                      const std::vector<int>& n_list,
                                                      double trunc_sigmas = 10.0);

} // namespace ptgauss
