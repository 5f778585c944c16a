#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ptgauss/distortion.hpp"

namespace ptgauss {

// Leader-follower instance: transmitter commits to a linear encoder under a
// power cap, receiver best-responds with an affine decoder.
struct GameSpec {
    SourceModel src;
    ChannelModel ch;
    PowerBudget power;
    AgentProfile tx;
    AgentProfile rx;
};

struct EquilibriumResult {
    LinearEncoder encoder;
    LinearDecoder decoder;
    double d_t = 0.0;
    double d_r = 0.0;
    bool verified = false;
    std::string diagnostics;
};

struct EncoderGridPoint {
    double k0;
    double k1;
    double d;
};

struct EncoderOptimalityReport {
    std::vector<EncoderGridPoint> points; // in grid order
    double d_star = 0.0;
    double worst_margin = 0.0; // min over points of d - d_star
    std::size_t argmin_index = 0;
    bool argmin_at_power_corner = false;
    bool pass = false;
};

struct DecoderPerturbation {
    double da;
    double db;
    double excess_closed;
    double excess_quadrature;
};

struct DecoderOptimalityReport {
    std::vector<DecoderPerturbation> points;
    double min_excess_nonzero = 0.0; // over perturbations with (da, db) != (0, 0)
    double max_route_gap = 0.0;      // worst |closed - quadrature| excess disagreement
    bool pass = false;
};

// Conditional-mean coefficients a = k1*sigma_s2 / (k1^2*sigma_s2 + sigma_n2),
// b = -k0*a. Free of the receiver's alpha: tilting preserves the posterior mean.
LinearDecoder best_response_decoder(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    const AgentProfile& rx);

// Closed-form equilibrium: k1 = +sqrt(P / sigma_s2) (nonnegative root by
// convention; the negated pair is payoff-identical), k0 = 0, decoder the best
// response, distortions (1/alpha) sigma_s2 sigma_n2 / (P + sigma_n2).
// P = 0 raises degenerate_game_error.
EquilibriumResult stackelberg_solve(const GameSpec& game);

// stackelberg_solve plus both grid verifications; sets `verified` and fills
// `diagnostics` with the measured margins.
EquilibriumResult stackelberg_solve_verified(const GameSpec& game, const QuadratureSpec& quad);

// 21 k1 values (k0 = 0) on a geometric + uniform hybrid over
// [0.01*k1_star, k1_star]; includes the boundary point exactly.
std::vector<std::pair<double, double>> default_encoder_grid(const GameSpec& game);

// Symmetric k0 sweep at full power: k0 in {-c, -c/2, 0, c/2, c} with
// c = 0.8*sqrt(P), k1 = sqrt((P - k0^2) / sigma_s2).
std::vector<std::pair<double, double>> full_power_k0_grid(const GameSpec& game, int count = 5);

// Every feasible (k0, k1) grid point, decoded by best response and scored by
// the transmitter's distorted-expectation quadrature, must not beat the
// closed form. Throws verification_error if one does by more than 1e-6.
EncoderOptimalityReport verify_encoder_optimality(const GameSpec& game,
                                                  const std::vector<std::pair<double, double>>& grid,
                                                  const QuadratureSpec& quad);

// The receiver's excess distortion for each (da, db) decoder perturbation,
// closed form cross-checked by quadrature. Negative excess beyond -1e-10
// throws verification_error.
DecoderOptimalityReport verify_decoder_optimality(const GameSpec& game, const LinearEncoder& enc,
                                                  const std::vector<std::pair<double, double>>& perturbations,
                                                  const QuadratureSpec& quad);

// The 9 offsets {-radius, 0, +radius}^2.
std::vector<std::pair<double, double>> perturbation_stencil(double radius);

} // namespace ptgauss
