#pragma once

#include <functional>
#include <vector>

namespace ptgauss {

struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Hermite rule for weight exp(-x^2) on (-inf, inf).
QuadRule gauss_hermite(int n);

// Gauss-Legendre rule on [a, b].
QuadRule gauss_legendre(int n, double a, double b);

// E[f(X)] for X ~ N(mean, variance) using an n-node Hermite rule.
double gauss_hermite_expectation(double mean, double variance,
                                 const std::function<double(double)>& f, int n);

// Composite trapezoid with interval doubling until |I_2k - I_k| <= tol*max(1,|I_2k|).
// Throws numerical_error if the cap is reached without convergence.
double adaptive_trapezoid(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_doublings = 22);

} // namespace ptgauss
