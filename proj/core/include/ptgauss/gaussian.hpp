#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptgauss/errors.hpp"

namespace ptgauss {

class GaussianDensity {
  public:
    GaussianDensity(double mean, double variance) : mean_(mean), variance_(variance) {
        if (!(variance > 0.0))
            throw std::domain_error("GaussianDensity: variance must be positive, got " + std::to_string(variance));
    }

    double mean() const { return mean_; }
    double variance() const { return variance_; }
    double std_dev() const { return std::sqrt(variance_); }

    double log_pdf(double x) const {
        const double d = x - mean_;
        return -0.5 * d * d / variance_ - 0.5 * std::log(2.0 * kPi * variance_);
    }

    double pdf(double x) const { return std::exp(log_pdf(x)); }

    double cdf(double x) const {
        return 0.5 * std::erfc(-(x - mean_) / (std_dev() * kSqrt2));
    }

    // P(lo < X <= hi), evaluated through erfc on whichever tail is further out
    // so that +/-10 sigma intervals keep relative accuracy instead of
    // cancelling to zero.
    double interval_mass(double lo, double hi) const {
        if (!(lo <= hi)) throw std::invalid_argument("interval_mass: need lo <= hi");
        const double s = std_dev() * kSqrt2;
        const double zl = (lo - mean_) / s;
        const double zh = (hi - mean_) / s;
        if (zl >= 0.0) return 0.5 * (std::erfc(zl) - std::erfc(zh));
        if (zh <= 0.0) return 0.5 * (std::erfc(-zh) - std::erfc(-zl));
        return 0.5 * (std::erf(zh) - std::erf(zl));
    }

    // Renormalized alpha-th power: same mean, variance divided by alpha.
    GaussianDensity alpha_tilt(double alpha) const {
        check_alpha(alpha, "alpha_tilt");
        return GaussianDensity(mean_, variance_ / alpha);
    }

  private:
    static constexpr double kPi = 3.14159265358979323846264338328;
    static constexpr double kSqrt2 = 1.41421356237309504880168872421;

    double mean_;
    double variance_;
};

} // namespace ptgauss
