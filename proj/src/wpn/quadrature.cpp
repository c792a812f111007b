#include "wpn/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wpn {

QuadratureRule gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: need n >= 1");
    QuadratureRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);

    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev initial guess.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
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
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

double integrate_panels(const std::function<double(double)>& f,
                        std::span<const double> breaks,
                        const QuadratureRule& rule)
{
    double total = 0.0;
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        if (!(b > a))
            continue;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        double acc = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * acc;
    }
    return total;
}

double log_integrate_panels(const std::function<double(double)>& log_f,
                            std::span<const double> breaks,
                            const QuadratureRule& rule)
{
    std::vector<double> terms;
    terms.reserve((breaks.size() - 1) * rule.nodes.size());
    for (size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double a = breaks[p];
        const double b = breaks[p + 1];
        if (!(b > a))
            continue;
        const double half = 0.5 * (b - a);
        const double mid = 0.5 * (a + b);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            terms.push_back(std::log(half * rule.weights[i]) + log_f(mid + half * rule.nodes[i]));
    }
    if (terms.empty())
        return -std::numeric_limits<double>::infinity();
    double m = -std::numeric_limits<double>::infinity();
    for (double t : terms)
        m = std::max(m, t);
    if (m == -std::numeric_limits<double>::infinity())
        return m;
    double acc = 0.0;
    for (double t : terms)
        acc += std::exp(t - m);
    return m + std::log(acc);
}

double trapezoid_periodic(const std::function<double(double)>& f,
                          double a, double b, int n)
{
    if (n < 2)
        throw std::invalid_argument("trapezoid_periodic: need n >= 2");
    const double h = (b - a) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += f(a + i * h);  // periodic: endpoint pair collapses to one sample
    return acc * h;
}

}  // namespace wpn
