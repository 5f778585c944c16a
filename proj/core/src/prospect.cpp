#include "ptgauss/prospect.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptgauss/errors.hpp"
#include "ptgauss/quadrature.hpp"

namespace ptgauss {

DiscreteProspect discretize(const GaussianDensity& p, int n, double trunc_sigmas) {
    if (n < 1) throw std::invalid_argument("discretize: need n >= 1, got " + std::to_string(n));
    if (!(trunc_sigmas >= 6.0))
        throw std::invalid_argument("discretize: need trunc_sigmas >= 6, got " + std::to_string(trunc_sigmas));

    const double lo = p.mean() - trunc_sigmas * p.std_dev();
    const double hi = p.mean() + trunc_sigmas * p.std_dev();
    const auto z_lo = static_cast<int64_t>(std::ceil(lo * n));
    const auto z_hi = static_cast<int64_t>(std::floor(hi * n));

    DiscreteProspect out;
    out.n = n;
    out.atoms.reserve(static_cast<size_t>(z_hi - z_lo + 1));
    for (int64_t z = z_lo; z <= z_hi; ++z) {
        const double a = static_cast<double>(z) / n;
        const double b = static_cast<double>(z + 1) / n;
        out.atoms.emplace_back(z, p.interval_mass(a, b));
    }
    return out;
}

double discrete_pt_unnormalized(const std::vector<double>& probs, const std::vector<double>& values,
                                const WeightFunction& w) {
    if (probs.size() != values.size())
        throw std::invalid_argument("discrete_pt_unnormalized: probs and values differ in length");
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) acc += w(probs[i]) * values[i];
    return acc;
}

double discrete_pt_karmarkar(const DiscreteProspect& prospect, const ValueFunction& v,
                             const WeightFunction& w, double reference) {
    double num = 0.0;
    double den = 0.0;
    for (const auto& [z, mass] : prospect.atoms) {
        const double wz = w(mass);
        den += wz;
        num += wz * v(static_cast<double>(z) / prospect.n, reference);
    }
    if (den < 1.0e-300)
        throw numerical_error("discrete_pt_karmarkar: weight mass degenerated to " + std::to_string(den));
    return num / den;
}

double continuous_pt(const GaussianDensity& p, const ValueFunction& v, double alpha,
                     double reference, int nodes) {
    check_alpha(alpha, "continuous_pt");
    const GaussianDensity tilted = p.alpha_tilt(alpha);
    return gauss_hermite_expectation(tilted.mean(), tilted.variance(),
                                     [&](double x) { return v(x, reference); }, nodes);
}

double continuous_pt_trapezoid(const GaussianDensity& p, const ValueFunction& v, double alpha,
                               double reference, double rel_tol) {
    check_alpha(alpha, "continuous_pt_trapezoid");
    const double half_width = 10.0 * p.std_dev() * std::max(1.0, 1.0 / std::sqrt(alpha));
    const double a = p.mean() - half_width;
    const double b = p.mean() + half_width;
    const double num = adaptive_trapezoid(
        [&](double x) { return std::exp(alpha * p.log_pdf(x)) * v(x, reference); }, a, b, rel_tol);
    const double den = adaptive_trapezoid(
        [&](double x) { return std::exp(alpha * p.log_pdf(x)); }, a, b, rel_tol);
    return num / den;
}

std::vector<std::pair<int, double>> convergence_study(const GaussianDensity& p, const ValueFunction& v,
                                                      const WeightFunction& w,
                                                      const std::vector<int>& n_list,
                                                      double trunc_sigmas) {
    if (n_list.empty()) throw std::invalid_argument("convergence_study: n_list must be nonempty");
    const double limit = continuous_pt(p, v, w.alpha());
    std::vector<std::pair<int, double>> out;
    out.reserve(n_list.size());
    for (const int n : n_list) {
        const DiscreteProspect prospect = discretize(p, n, trunc_sigmas);
        out.emplace_back(n, std::abs(discrete_pt_karmarkar(prospect, v, w) - limit));
    }
    return out;
}

} // namespace ptgauss
