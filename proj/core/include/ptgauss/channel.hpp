#pragma once

#include "ptgauss/gaussian.hpp"

namespace ptgauss {

// Scalar source S ~ N(0, sigma_s2).
class SourceModel {
  public:
    explicit SourceModel(double sigma_s2) : sigma_s2_(sigma_s2) {
        if (!(sigma_s2 > 0.0))
            throw std::domain_error("SourceModel: sigma_s2 must be positive, got " + std::to_string(sigma_s2));
    }
    double sigma_s2() const { return sigma_s2_; }
    GaussianDensity prior() const { return GaussianDensity(0.0, sigma_s2_); }

  private:
    double sigma_s2_;
};

// Additive noise N ~ N(0, sigma_n2), R = U + N.
class ChannelModel {
  public:
    explicit ChannelModel(double sigma_n2) : sigma_n2_(sigma_n2) {
        if (!(sigma_n2 > 0.0))
            throw std::domain_error("ChannelModel: sigma_n2 must be positive, got " + std::to_string(sigma_n2));
    }
    double sigma_n2() const { return sigma_n2_; }

  private:
    double sigma_n2_;
};

// Transmit map U = k1*S + k0.
struct LinearEncoder {
    double k0 = 0.0;
    double k1 = 1.0;
};

struct PowerBudget {
    explicit PowerBudget(double p_in) : p(p_in) {
        if (!(p_in >= 0.0))
            throw std::domain_error("PowerBudget: p must be nonnegative, got " + std::to_string(p_in));
    }
    double p;
};

inline double encode(const LinearEncoder& enc, double s) { return enc.k1 * s + enc.k0; }

// E[U^2] = k1^2 sigma_s2 + k0^2 for the zero-mean source.
inline double encoder_power(const LinearEncoder& enc, const SourceModel& src) {
    return enc.k1 * enc.k1 * src.sigma_s2() + enc.k0 * enc.k0;
}

// Received-signal variance k1^2 sigma_s2 + sigma_n2; never zero.
inline double received_variance(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc) {
    return enc.k1 * enc.k1 * src.sigma_s2() + ch.sigma_n2();
}

// S | R=r for the exact joint; degenerates to the prior when k1 = 0.
GaussianDensity posterior(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc, double r);

// Same mean as posterior, variance divided by alpha.
GaussianDensity distorted_posterior(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    double alpha, double r);

// Law of R = k1*S + k0 + N.
GaussianDensity marginal(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc);

// Same mean as marginal, variance divided by alpha.
GaussianDensity distorted_marginal(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                   double alpha);

// Closed form of the joint-density power integral:
// integral integral p(s,r)^alpha ds dr = (1/alpha) * (2 pi sigma_s sigma_n)^(1-alpha),
// independent of k0 and k1.
double alpha_normalizer(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc, double alpha);

// log p(s, r) evaluated through the bivariate covariance quadratic form
// (not the prior-times-likelihood factorization), so quadrature built on it
// is an independent route to the same joint.
double joint_log_pdf(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                     double s, double r);

} // namespace ptgauss
