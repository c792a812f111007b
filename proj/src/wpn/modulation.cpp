#include "wpn/modulation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpn {

InputSymbol sample_input(const ChannelParams& params, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);

    // Inverse-CDF exponential keeps the coupling to the underlying uniform
    // monotone, which makes replays with a fixed stream exactly reproducible.
    const double u = unit(rng);
    const double amp_sq = 0.5 * params.power - 0.5 * params.power * std::log1p(-u);

    InputSymbol symbol;
    symbol.amplitude = std::sqrt(amp_sq);
    symbol.phase = angle(rng);
    return symbol;
}

double amp_sq_density(double a, double power)
{
    if (!(power > 0.0))
        throw std::invalid_argument("amp_sq_density: power must be > 0");
    if (a < 0.5 * power)
        return 0.0;
    return (2.0 / power) * std::exp(1.0 - 2.0 * a / power);
}

double validate_power(std::span<const InputSymbol> symbols)
{
    if (symbols.empty())
        throw std::invalid_argument("validate_power: empty symbol sequence");
    double acc = 0.0;
    for (const InputSymbol& s : symbols)
        acc += s.amp_sq();
    return acc / static_cast<double>(symbols.size());
}

}  // namespace wpn
