#pragma once

#include <functional>
#include <span>
#include <vector>

namespace wpn {

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

QuadratureRule gauss_legendre(int n);

// Integral of f over consecutive panels [breaks[i], breaks[i+1]] with the
// given rule applied per panel.
double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> breaks,
                        const QuadratureRule& rule);

// ln of the integral of exp(log_f) over the panels, computed with a
// max-shift so that extremely small densities do not underflow.
double log_integrate_panels(const std::function<double(double)>& log_f,
                            std::span<const double> breaks,
                            const QuadratureRule& rule);

// Composite trapezoid over one period of a periodic function; spectrally
// accurate for smooth periodic integrands.
double trapezoid_periodic(const std::function<double(double)>& f,
                          double a, double b, int n);

}  // namespace wpn
