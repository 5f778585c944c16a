#pragma once

#include <utility>
#include <vector>

namespace ptgauss {

// Probability weighting curve w: [0,1] -> [0,1] with a power-law left tail,
// w(eps) ~ k * eps^alpha as eps -> 0. Only the pair (alpha, k) survives the
// continuous limit; the curve shape matters for discrete prospects.
class WeightFunction {
  public:
    enum class Kind { karmarkar_power, power_tail };

    // w(p) = p^a / (p^a + (1-p)^a); tail constant k = 1.
    static WeightFunction karmarkar_power(double alpha);

    // w(p) = min(1, k * p^a).
    static WeightFunction power_tail(double alpha, double k);

    double operator()(double p) const;

    Kind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double tail_constant() const { return k_; }

  private:
    WeightFunction(Kind kind, double alpha, double k) : kind_(kind), alpha_(alpha), k_(k) {}

    Kind kind_;
    double alpha_;
    double k_;
};

struct TailFit {
    double alpha_hat;
    double k_hat;
};

// Log-log least squares of w(eps) against eps over the given grid.
// Grid must hold >= 3 points, sorted decreasing, all in (0, 0.1].
TailFit tail_exponent(const WeightFunction& w, const std::vector<double>& eps_grid);

} // namespace ptgauss
