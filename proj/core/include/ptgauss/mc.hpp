#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ptgauss/distortion.hpp"
#include "ptgauss/rng.hpp"

namespace ptgauss {

struct McConfig {
    McConfig(long long samples_in, uint64_t seed_in) : samples(samples_in), seed(seed_in) {
        if (samples < 1000)
            throw std::domain_error("McConfig: need samples >= 1000 for reportable standard errors, got " +
                                    std::to_string(samples));
    }

    long long samples;
    uint64_t seed;
};

struct McEstimate {
    double value = 0.0;
    double std_err = 0.0;
    long long samples = 0;
};

// Draws from the tilted joint: R from the distorted received law, then S
// from the distorted posterior at that r. Deterministic given the seed.
class DistortedJointSampler {
  public:
    DistortedJointSampler(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                          double alpha, uint64_t seed);

    std::pair<double, double> next(); // (s, r)

  private:
    double r_mean_, r_sd_;
    double post_gain_, post_sd_; // posterior mean = post_gain_ * (r - k0), fixed sd
    double k0_;
    Xoshiro256pp rng_;
};

// Mean of v(s, dec(r)) over the distorted sample; std_err = sample std / sqrt(n).
McEstimate mc_distortion(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                         const LinearDecoder& dec, const AgentProfile& agent, const McConfig& cfg);

// Secondary estimator: samples from the undistorted joint, self-normalized
// weights p(s,r)^(alpha-1); std_err by the delta method. Heavy-tailed for
// alpha <= 1/2 (weight tail index 1/(1-alpha)), where the standard error
// bound degrades; see the verification notes.
McEstimate mc_distortion_importance(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    const LinearDecoder& dec, const AgentProfile& agent, const McConfig& cfg);

// First `count` pairs of the distorted stream, for law checks.
std::vector<std::pair<double, double>> sample_distorted(const SourceModel& src, const ChannelModel& ch,
                                                        const LinearEncoder& enc, double alpha,
                                                        const McConfig& cfg, std::size_t count);

} // namespace ptgauss
