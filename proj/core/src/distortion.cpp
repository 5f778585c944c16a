#include "ptgauss/distortion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ptgauss/errors.hpp"
#include "ptgauss/quadrature.hpp"

namespace ptgauss {

namespace {

struct ShearedIntegrals {
    double weighted; // integral p^alpha * v
    double mass;     // integral p^alpha
};

// Integrate over (s, t) with r = k1*s + k0 + t; unit Jacobian. The change of
// variables keeps the grid aligned with the density's ridge at large |k1|
// while p(s, r) itself is still evaluated from the covariance form.
ShearedIntegrals sheared_pass(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                              const LinearDecoder& dec, const ValueFunction& v, double alpha,
                              double trunc_sigmas, int nodes, bool with_value) {
    const double s_half = trunc_sigmas * std::sqrt(src.sigma_s2() / alpha);
    const double t_half = trunc_sigmas * std::sqrt(ch.sigma_n2() / alpha);
    const QuadRule srule = gauss_legendre(nodes, -s_half, s_half);
    const QuadRule trule = gauss_legendre(nodes, -t_half, t_half);

    double weighted = 0.0;
    double mass = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double s = srule.x[i];
        double row_w = 0.0;
        double row_m = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const double r = enc.k1 * s + enc.k0 + trule.x[j];
            const double palpha = std::exp(alpha * joint_log_pdf(src, ch, enc, s, r));
            const double contrib = trule.w[j] * palpha;
            row_m += contrib;
            if (with_value) row_w += contrib * v(s, decode(dec, r));
        }
        mass += srule.w[i] * row_m;
        weighted += srule.w[i] * row_w;
    }
    return ShearedIntegrals{weighted, mass};
}

double refine_or_throw(double coarse, double fine, const char* who, int nodes) {
    const double change = std::abs(fine - coarse);
    if (change > 1.0e-6 * std::max(1.0, std::abs(fine))) {
        std::ostringstream msg;
        msg << who << ": node doubling " << nodes << " -> " << 2 * nodes << " still moves the result by "
            << change << " (coarse " << coarse << ", fine " << fine << ")";
        throw numerical_error(msg.str());
    }
    return fine;
}

} // namespace

double distortion_quadrature(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                             const LinearDecoder& dec, const AgentProfile& agent, const QuadratureSpec& quad) {
    const auto coarse = sheared_pass(src, ch, enc, dec, agent.value(), agent.alpha(),
                                     quad.trunc_sigmas, quad.nodes, true);
    const auto fine = sheared_pass(src, ch, enc, dec, agent.value(), agent.alpha(),
                                   quad.trunc_sigmas, 2 * quad.nodes, true);
    return refine_or_throw(coarse.weighted / coarse.mass, fine.weighted / fine.mass,
                           "distortion_quadrature", quad.nodes);
}

double distortion_distorted_expectation(const SourceModel& src, const ChannelModel& ch,
                                        const LinearEncoder& enc, const LinearDecoder& dec,
                                        const AgentProfile& agent, const QuadratureSpec& quad) {
    const GaussianDensity r_law = distorted_marginal(src, ch, enc, agent.alpha());
    // The distorted posterior has an r-independent variance; only its mean
    // moves with r, so one Hermite rule serves every inner expectation.
    const double post_gain = enc.k1 * src.sigma_s2() / received_variance(src, ch, enc);
    const double post_var =
        src.sigma_s2() * ch.sigma_n2() / (agent.alpha() * received_variance(src, ch, enc));

    const auto evaluate = [&](int nodes) {
        const QuadRule rule = gauss_hermite(nodes);
        const double r_scale = std::sqrt(2.0 * r_law.variance());
        const double s_scale = std::sqrt(2.0 * post_var);
        const double pi_norm = 3.14159265358979323846264338328;

        double outer = 0.0;
        for (int i = 0; i < nodes; ++i) {
            const double r = r_law.mean() + r_scale * rule.x[i];
            const double s_mean = post_gain * (r - enc.k0);
            const double s_hat = decode(dec, r);
            double inner = 0.0;
            for (int j = 0; j < nodes; ++j)
                inner += rule.w[j] * agent.value()(s_mean + s_scale * rule.x[j], s_hat);
            outer += rule.w[i] * inner;
        }
        return outer / pi_norm;
    };

    return refine_or_throw(evaluate(quad.nodes), evaluate(2 * quad.nodes),
                           "distortion_distorted_expectation", quad.nodes);
}

double distortion_closed(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                         const LinearDecoder& dec, double alpha) {
    check_alpha(alpha, "distortion_closed");
    const double ss = src.sigma_s2();
    const double v = received_variance(src, ch, enc);
    const double centered = ss - 2.0 * dec.a * enc.k1 * ss + dec.a * dec.a * v;
    const double offset = dec.a * enc.k0 + dec.b;
    return centered / alpha + offset * offset;
}

double distortion_closed_best_response(const SourceModel& src, const ChannelModel& ch, double k1,
                                       const AgentProfile& agent) {
    if (agent.value().kind() != ValueFunction::Kind::squared_error)
        throw std::invalid_argument("distortion_closed_best_response: no closed form for value function '" +
                                    agent.value().id() + "'");
    const double v = k1 * k1 * src.sigma_s2() + ch.sigma_n2();
    return src.sigma_s2() * ch.sigma_n2() / (agent.alpha() * v);
}

double distortion_ratio(const SourceModel& src, const ChannelModel& ch, double k1,
                        double alpha_t, double alpha_r) {
    check_alpha(alpha_t, "distortion_ratio");
    check_alpha(alpha_r, "distortion_ratio");
    const double ratio = alpha_r / alpha_t;
    const AgentProfile tx(alpha_t, ValueFunction::squared_error());
    const AgentProfile rx(alpha_r, ValueFunction::squared_error());
    const double from_closed = distortion_closed_best_response(src, ch, k1, tx) /
                               distortion_closed_best_response(src, ch, k1, rx);
    if (std::abs(from_closed - ratio) > 1.0e-10 * std::max(1.0, std::abs(ratio)))
        throw verification_error("distortion_ratio: closed forms disagree with alpha_r/alpha_t");
    return ratio;
}

double joint_alpha_mass_quadrature(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                   double alpha, const QuadratureSpec& quad) {
    check_alpha(alpha, "joint_alpha_mass_quadrature");
    const LinearDecoder dummy{};
    const ValueFunction v = ValueFunction::squared_error();
    const auto coarse = sheared_pass(src, ch, enc, dummy, v, alpha, quad.trunc_sigmas, quad.nodes, false);
    const auto fine = sheared_pass(src, ch, enc, dummy, v, alpha, quad.trunc_sigmas, 2 * quad.nodes, false);
    return refine_or_throw(coarse.mass, fine.mass, "joint_alpha_mass_quadrature", quad.nodes);
}

} // namespace ptgauss
