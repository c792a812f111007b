#pragma once

#include <complex>
#include <random>
#include <span>

#include "wpn/channel.hpp"

namespace wpn {

// Channel input in polar form. Under the shifted-exponential law the squared
// amplitude never falls below P/2.
struct InputSymbol {
    double amplitude = 0.0;  // X_A = |X| >= 0
    double phase = 0.0;      // in [-pi, pi)

    double amp_sq() const { return amplitude * amplitude; }
    std::complex<double> value() const { return std::polar(amplitude, phase); }
};

// |X|^2 = P/2 + E with E ~ Exponential(mean P/2) via inverse CDF, phase
// uniform on [-pi, pi) and independent of the amplitude.
InputSymbol sample_input(const ChannelParams& params, std::mt19937_64& rng);

// Density of |X|^2: (2/P) exp(1 - 2a/P) for a >= P/2, zero otherwise.
double amp_sq_density(double a, double power);

// Empirical mean power (1/n) sum |X_m|^2; a diagnostic, not an enforcement.
double validate_power(std::span<const InputSymbol> symbols);

}  // namespace wpn
