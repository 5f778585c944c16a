#include "ptgauss/weight.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptgauss/errors.hpp"

namespace ptgauss {

WeightFunction WeightFunction::karmarkar_power(double alpha) {
    check_alpha(alpha, "karmarkar_power");
    return WeightFunction(Kind::karmarkar_power, alpha, 1.0);
}

WeightFunction WeightFunction::power_tail(double alpha, double k) {
    check_alpha(alpha, "power_tail");
    if (!(k > 0.0)) throw std::domain_error("power_tail: k must be positive, got " + std::to_string(k));
    return WeightFunction(Kind::power_tail, alpha, k);
}

double WeightFunction::operator()(double p) const {
    if (!(p >= 0.0) || p > 1.0)
        throw std::domain_error("WeightFunction: p must lie in [0, 1], got " + std::to_string(p));

    switch (kind_) {
        case Kind::karmarkar_power: {
            if (p == 0.0) return 0.0;
            if (p == 1.0) return 1.0;
            const double num = std::pow(p, alpha_);
            return num / (num + std::pow(1.0 - p, alpha_));
        }
        case Kind::power_tail:
            return std::min(1.0, k_ * std::pow(p, alpha_));
    }
    throw std::logic_error("WeightFunction: unknown kind");
}

TailFit tail_exponent(const WeightFunction& w, const std::vector<double>& eps_grid) {
    if (eps_grid.size() < 3)
        throw std::invalid_argument("tail_exponent: need at least 3 grid points, got " +
                                    std::to_string(eps_grid.size()));
    for (size_t i = 0; i < eps_grid.size(); ++i) {
        const double e = eps_grid[i];
        if (!(e > 0.0) || e > 0.1)
            throw std::invalid_argument("tail_exponent: grid points must lie in (0, 0.1]");
        if (i > 0 && !(e < eps_grid[i - 1]))
            throw std::invalid_argument("tail_exponent: grid must be sorted strictly decreasing");
    }

    const size_t n = eps_grid.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const double e : eps_grid) {
        const double lx = std::log(e);
        const double ly = std::log(w(e));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / n;
    return TailFit{slope, std::exp(intercept)};
}

} // namespace ptgauss
