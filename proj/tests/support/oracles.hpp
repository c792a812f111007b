#pragma once

// Test-side reference implementations, kept independent of the library code
// paths they are used to check.

#include <functional>
#include <vector>

#include "wpn/channel.hpp"

namespace oracles {

// 20-term extended-precision series for ln I0: plain power series up to the
// crossover, scaled asymptotic series above it.
long double reference_log_i0(long double a);

// Adaptive Simpson integration to the given absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

// ln Q_V(v) by direct numerical integration of the defining mixture over the
// amplitude-squared law, with a max-shift in the log domain. Squeezes the
// quadrature around the conditional-Gaussian peak so it stays accurate at
// high SNR.
double log_marginal_v_by_quadrature(double v, const wpn::ChannelParams& params);

// Regularized upper incomplete gamma Q(s, x) (series / continued fraction).
double gamma_q(double s, double x);

// p-value of a chi-square statistic with the given degrees of freedom.
double chi_square_pvalue(double statistic, int dof);

// Chi-square uniformity statistic of wrapped angles over equal bins.
double chi_square_uniform_statistic(const std::vector<double>& wrapped_angles,
                                    int bins);

// Discretized toy channel (L = 2, three amplitude levels, V quantized to 64
// bins), everything by exhaustive enumeration: the auxiliary-channel
// functional evaluated with the true conditional (equals the mutual
// information of the quantized channel) and with the mismatched Gaussian
// kernel of the amplitude decoder.
struct ToyBoundResult {
    double info_true = 0.0;   // aux functional with the true conditional
    double info_gauss = 0.0;  // aux functional with the Gaussian kernel
};
ToyBoundResult toy_auxiliary_bound();

}  // namespace oracles
