#include "ptgauss/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ptgauss/errors.hpp"

namespace ptgauss {

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

QuadRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: need n >= 1, got " + std::to_string(n));

    const double pim4 = 0.7511255444649425; // pi^(-1/4)
    const int max_iter = 64;
    const double eps = 1.0e-14;

    QuadRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);

    // Roots come in +/- pairs; locate the upper half by Newton iteration on the
    // recurrence-normalized polynomial, standard initial guesses.
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        } else if (i == 1) {
            z -= 1.14 * std::pow(n, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * rule.x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * rule.x[1];
        } else {
            z = 2.0 * z - rule.x[i - 2];
        }

        double pp = 0.0;
        int iter = 0;
        for (; iter < max_iter; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        if (iter == max_iter)
            throw numerical_error("gauss_hermite: Newton iteration failed to converge at n=" + std::to_string(n));

        rule.x[i] = z;
        rule.x[n - 1 - i] = -z;
        rule.w[i] = 2.0 / (pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }

    // Descending order from the largest root; midpoint is exactly 0 for odd n.
    if (n % 2 == 1) rule.x[m - 1] = 0.0;
    return rule;
}

QuadRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1, got " + std::to_string(n));
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    const int max_iter = 64;
    const double eps = 1.0e-14;

    QuadRule rule;
    rule.x.assign(n, 0.0);
    rule.w.assign(n, 0.0);

    const int m = (n + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);

    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        int iter = 0;
        for (; iter < max_iter; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= eps) break;
        }
        if (iter == max_iter)
            throw numerical_error("gauss_legendre: Newton iteration failed to converge at n=" + std::to_string(n));

        rule.x[i] = xm - xl * z;
        rule.x[n - 1 - i] = xm + xl * z;
        rule.w[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return rule;
}

double gauss_hermite_expectation(double mean, double variance,
                                 const std::function<double(double)>& f, int n) {
    if (!(variance > 0.0)) throw std::domain_error("gauss_hermite_expectation: variance must be positive");
    const QuadRule rule = gauss_hermite(n);
    const double scale = std::sqrt(2.0 * variance);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += rule.w[i] * f(mean + scale * rule.x[i]);
    return acc / std::sqrt(kPi);
}

double adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_doublings) {
    if (!(a < b)) throw std::invalid_argument("adaptive_trapezoid: need a < b");

    double h = b - a;
    double sum = 0.5 * (f(a) + f(b)) * h;
    long long intervals = 1;

    for (int level = 0; level < max_doublings; ++level) {
        double inner = 0.0;
        const double step = h / static_cast<double>(intervals);
        for (long long k = 0; k < intervals; ++k) inner += f(a + (k + 0.5) * step);
        const double next = 0.5 * sum + 0.5 * step * inner;
        const double change = std::abs(next - sum);
        sum = next;
        intervals *= 2;
        if (level >= 3 && change <= rel_tol * std::max(1.0, std::abs(sum))) return sum;
    }
    throw numerical_error("adaptive_trapezoid: no convergence to rel_tol=" + std::to_string(rel_tol) +
                          " after " + std::to_string(max_doublings) + " doublings");
}

} // namespace ptgauss
