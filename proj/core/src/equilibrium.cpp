#include "ptgauss/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ptgauss/errors.hpp"

namespace ptgauss {

LinearDecoder best_response_decoder(const SourceModel& src, const ChannelModel& ch, const LinearEncoder& enc,
                                    const AgentProfile& rx) {
    if (rx.value().kind() != ValueFunction::Kind::squared_error)
        throw std::invalid_argument("best_response_decoder: closed form requires squared error, got '" +
                                    rx.value().id() + "'");
    const double a = enc.k1 * src.sigma_s2() / received_variance(src, ch, enc);
    return LinearDecoder{a, -enc.k0 * a};
}

EquilibriumResult stackelberg_solve(const GameSpec& game) {
    const double p = game.power.p;
    if (p == 0.0)
        throw degenerate_game_error("stackelberg_solve: zero power budget admits no informative encoding; "
                                    "the receiver falls back to the distorted prior");

    EquilibriumResult out;
    out.encoder = LinearEncoder{0.0, std::sqrt(p / game.src.sigma_s2())};
    out.decoder = best_response_decoder(game.src, game.ch, out.encoder, game.rx);
    const double scale = game.src.sigma_s2() * game.ch.sigma_n2() / (p + game.ch.sigma_n2());
    out.d_t = scale / game.tx.alpha();
    out.d_r = scale / game.rx.alpha();
    return out;
}

EquilibriumResult stackelberg_solve_verified(const GameSpec& game, const QuadratureSpec& quad) {
    EquilibriumResult out = stackelberg_solve(game);
    const auto enc_report = verify_encoder_optimality(game, default_encoder_grid(game), quad);
    const auto dec_report = verify_decoder_optimality(game, out.encoder, perturbation_stencil(0.1), quad);

    std::ostringstream diag;
    diag << "encoder grid: worst margin " << enc_report.worst_margin
         << (enc_report.argmin_at_power_corner ? ", argmin at power corner" : ", argmin OFF the power corner")
         << "; decoder stencil: min nonzero excess " << dec_report.min_excess_nonzero
         << ", route gap " << dec_report.max_route_gap;
    out.diagnostics = diag.str();
    out.verified = enc_report.pass && dec_report.pass;
    return out;
}

std::vector<std::pair<double, double>> default_encoder_grid(const GameSpec& game) {
    const double k1_star = std::sqrt(game.power.p / game.src.sigma_s2());
    std::vector<double> ks;
    ks.reserve(21);
    // 11 uniform points on [0.01, 1] of the boundary value, boundary included
    // exactly, plus 10 geometric half-step points; union has no duplicates.
    for (int i = 0; i <= 10; ++i) ks.push_back(k1_star * (0.01 + 0.99 * i / 10.0));
    for (int j = 1; j <= 10; ++j) ks.push_back(k1_star * 0.01 * std::pow(100.0, (j - 0.5) / 10.0));
    std::sort(ks.begin(), ks.end());

    std::vector<std::pair<double, double>> grid;
    grid.reserve(ks.size());
    for (const double k1 : ks) grid.emplace_back(0.0, k1);
    return grid;
}

std::vector<std::pair<double, double>> full_power_k0_grid(const GameSpec& game, int count) {
    if (count < 1 || count % 2 == 0)
        throw std::invalid_argument("full_power_k0_grid: count must be odd and positive");
    const double c = 0.8 * std::sqrt(game.power.p);
    std::vector<std::pair<double, double>> grid;
    grid.reserve(static_cast<size_t>(count));
    const int half = count / 2;
    for (int i = -half; i <= half; ++i) {
        const double k0 = half == 0 ? 0.0 : c * i / half;
        const double k1 = std::sqrt(std::max(0.0, game.power.p - k0 * k0) / game.src.sigma_s2());
        grid.emplace_back(k0, k1);
    }
    return grid;
}

EncoderOptimalityReport verify_encoder_optimality(const GameSpec& game,
                                                  const std::vector<std::pair<double, double>>& grid,
                                                  const QuadratureSpec& quad) {
    if (grid.empty()) throw std::invalid_argument("verify_encoder_optimality: empty grid");

    EncoderOptimalityReport report;
    report.d_star = distortion_closed_best_response(game.src, game.ch,
                                                    std::sqrt(game.power.p / game.src.sigma_s2()), game.tx);

    double max_k1 = 0.0;
    for (const auto& [k0, k1] : grid) {
        if (encoder_power(LinearEncoder{k0, k1}, game.src) > game.power.p + 1.0e-12)
            throw std::invalid_argument("verify_encoder_optimality: infeasible grid point");
        max_k1 = std::max(max_k1, k1);
    }

    report.points.reserve(grid.size());
    report.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const LinearEncoder enc{grid[i].first, grid[i].second};
        const LinearDecoder dec = best_response_decoder(game.src, game.ch, enc, game.rx);
        const double d = distortion_distorted_expectation(game.src, game.ch, enc, dec, game.tx, quad);
        report.points.push_back(EncoderGridPoint{enc.k0, enc.k1, d});

        const double margin = d - report.d_star;
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.argmin_index = i;
        }
        if (margin < -1.0e-6) {
            std::ostringstream msg;
            msg << "verify_encoder_optimality: grid point (k0=" << enc.k0 << ", k1=" << enc.k1
                << ") beats the closed form by " << -margin;
            throw verification_error(msg.str());
        }
    }

    const auto& best = report.points[report.argmin_index];
    report.argmin_at_power_corner = best.k0 == 0.0 && best.k1 == max_k1;
    report.pass = report.worst_margin >= -1.0e-8 && report.argmin_at_power_corner;
    return report;
}

DecoderOptimalityReport verify_decoder_optimality(const GameSpec& game, const LinearEncoder& enc,
                                                  const std::vector<std::pair<double, double>>& perturbations,
                                                  const QuadratureSpec& quad) {
    const LinearDecoder best = best_response_decoder(game.src, game.ch, enc, game.rx);
    const double base_closed = distortion_closed(game.src, game.ch, enc, best, game.rx.alpha());
    const double base_quad = distortion_distorted_expectation(game.src, game.ch, enc, best, game.rx, quad);

    DecoderOptimalityReport report;
    report.points.reserve(perturbations.size());
    report.min_excess_nonzero = std::numeric_limits<double>::infinity();
    bool saw_nonzero = false;

    for (const auto& [da, db] : perturbations) {
        if (!std::isfinite(da) || !std::isfinite(db))
            throw std::invalid_argument("verify_decoder_optimality: perturbations must be finite");
        const LinearDecoder dec{best.a + da, best.b + db};
        const double excess_closed = distortion_closed(game.src, game.ch, enc, dec, game.rx.alpha()) - base_closed;
        const double excess_quad =
            distortion_distorted_expectation(game.src, game.ch, enc, dec, game.rx, quad) - base_quad;
        report.points.push_back(DecoderPerturbation{da, db, excess_closed, excess_quad});
        report.max_route_gap = std::max(report.max_route_gap, std::abs(excess_closed - excess_quad));

        if (excess_closed < -1.0e-10) {
            std::ostringstream msg;
            msg << "verify_decoder_optimality: perturbation (da=" << da << ", db=" << db
                << ") lowers the receiver distortion by " << -excess_closed;
            throw verification_error(msg.str());
        }
        if (da != 0.0 || db != 0.0) {
            saw_nonzero = true;
            report.min_excess_nonzero = std::min(report.min_excess_nonzero, excess_closed);
        }
    }

    if (!saw_nonzero) report.min_excess_nonzero = 0.0;
    report.pass = !saw_nonzero || report.min_excess_nonzero > 0.0;
    return report;
}

std::vector<std::pair<double, double>> perturbation_stencil(double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("perturbation_stencil: radius must be positive");
    std::vector<std::pair<double, double>> out;
    out.reserve(9);
    for (const double da : {-radius, 0.0, radius})
        for (const double db : {-radius, 0.0, radius}) out.emplace_back(da, db);
    return out;
}

} // namespace ptgauss
