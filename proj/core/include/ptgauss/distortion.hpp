#pragma once

#include <string>

#include "ptgauss/channel.hpp"
#include "ptgauss/value.hpp"

namespace ptgauss {

// One side of the game: weighting exponent plus outcome valuation.
class AgentProfile {
  public:
    AgentProfile(double alpha, ValueFunction value) : alpha_(alpha), value_(std::move(value)) {
        check_alpha(alpha_, "AgentProfile");
    }
    double alpha() const { return alpha_; }
    const ValueFunction& value() const { return value_; }

  private:
    double alpha_;
    ValueFunction value_;
};

// Affine estimate S_hat = a*R + b.
struct LinearDecoder {
    double a = 0.0;
    double b = 0.0;
};

inline double decode(const LinearDecoder& dec, double r) { return dec.a * r + dec.b; }

struct QuadratureSpec {
    QuadratureSpec(int nodes_in, double trunc_sigmas_in) : nodes(nodes_in), trunc_sigmas(trunc_sigmas_in) {
        if (nodes < 16)
            throw std::domain_error("QuadratureSpec: need nodes >= 16, got " + std::to_string(nodes));
        if (!(trunc_sigmas >= 8.0))
            throw std::domain_error("QuadratureSpec: need trunc_sigmas >= 8, got " + std::to_string(trunc_sigmas));
    }
    QuadratureSpec() : QuadratureSpec(96, 10.0) {}

    int nodes;
    double trunc_sigmas;
};

// Weighted error integral from the raw joint density:
//   integral p(s,r)^alpha v(s, a*r+b) / integral p(s,r)^alpha
// by tensor Gauss-Legendre on a sheared grid, refined once by node doubling;
// disagreement beyond 1e-6 relative raises numerical_error.
double distortion_quadrature(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                             const LinearDecoder& dec, const AgentProfile& agent, const QuadratureSpec& quad);

// Same value through the tilted closed-form densities: outer expectation over
// the distorted received law, inner over the distorted posterior, each by
// Gauss-Hermite. Exact for squared error.
double distortion_distorted_expectation(const SourceModel& src, const ChannelModel& ch,
                                        const LinearEncoder& enc, const LinearDecoder& dec,
                                        const AgentProfile& agent, const QuadratureSpec& quad);

// Closed form for squared error and an arbitrary affine decoder:
//   (1/alpha) [sigma_s2 - 2 a k1 sigma_s2 + a^2 (k1^2 sigma_s2 + sigma_n2)] + (a k0 + b)^2.
double distortion_closed(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                         const LinearDecoder& dec, double alpha);

// Distortion at the best-response decoder for encoder (0, k1):
//   (1/alpha) sigma_s2 sigma_n2 / (k1^2 sigma_s2 + sigma_n2).
// Squared error only; custom value functions have no closed form here.
double distortion_closed_best_response(const SourceModel& src, const ChannelModel& ch, double k1,
                                       const AgentProfile& agent);

// D_T / D_R = alpha_r / alpha_t, independent of k1; cross-checked against the
// ratio of the two closed forms.
double distortion_ratio(const SourceModel& src, const ChannelModel& ch, double k1,
                        double alpha_t, double alpha_r);

// Numerical evaluation of the joint-power integral behind alpha_normalizer,
// same sheared-grid route as distortion_quadrature.
double joint_alpha_mass_quadrature(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                   double alpha, const QuadratureSpec& quad);

} // namespace ptgauss
