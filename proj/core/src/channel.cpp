#include "ptgauss/channel.hpp"

#include <cmath>

#include "ptgauss/errors.hpp"

namespace ptgauss {

namespace {
constexpr double kTwoPi = 6.28318530717958647692528676656;
}

GaussianDensity posterior(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc, double r) {
    const double v = received_variance(src, ch, enc);
    const double mean = enc.k1 * src.sigma_s2() * (r - enc.k0) / v;
    const double variance = src.sigma_s2() * ch.sigma_n2() / v;
    return GaussianDensity(mean, variance);
}

GaussianDensity distorted_posterior(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    double alpha, double r) {
    check_alpha(alpha, "distorted_posterior");
    return posterior(src, ch, enc, r).alpha_tilt(alpha);
}

GaussianDensity marginal(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc) {
    return GaussianDensity(enc.k0, received_variance(src, ch, enc));
}

GaussianDensity distorted_marginal(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                   double alpha) {
    check_alpha(alpha, "distorted_marginal");
    return marginal(src, ch, enc).alpha_tilt(alpha);
}

double alpha_normalizer(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc, double alpha) {
    check_alpha(alpha, "alpha_normalizer");
    (void)enc; // the integral does not depend on (k0, k1)
    const double prod = kTwoPi * std::sqrt(src.sigma_s2() * ch.sigma_n2());
    return std::pow(prod, 1.0 - alpha) / alpha;
}

double joint_log_pdf(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                     double s, double r) {
    // Joint covariance of (S, R): [[ss, k1*ss], [k1*ss, k1^2*ss + nn]],
    // determinant ss*nn; mean (0, k0).
    const double ss = src.sigma_s2();
    const double nn = ch.sigma_n2();
    const double k1 = enc.k1;
    const double det = ss * nn;
    const double ds = s;
    const double dr = r - enc.k0;
    // Inverse covariance times det: [[k1^2*ss + nn, -k1*ss], [-k1*ss, ss]].
    const double quad = ((k1 * k1 * ss + nn) * ds * ds - 2.0 * k1 * ss * ds * dr + ss * dr * dr) / det;
    return -0.5 * quad - std::log(kTwoPi * std::sqrt(det));
}

} // namespace ptgauss
