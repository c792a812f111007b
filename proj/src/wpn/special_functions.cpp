#include "wpn/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wpn {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSeriesSeam = 15.0;
}  // namespace

double log_bessel_i0(double x)
{
    if (std::isnan(x) || x < 0.0)
        throw std::domain_error("log_bessel_i0: argument must be >= 0");

    if (x < kSeriesSeam) {
        // I0(x) = sum_k (x^2/4)^k / (k!)^2. All terms are positive, so the
        // sum carries no cancellation; I0(15) ~ 3.4e5 is far from overflow.
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 80; ++k) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
            if (term < sum * 1e-18)
                break;
        }
        return std::log(sum);
    }

    // I0(x) = e^x / sqrt(2 pi x) * S(x), S = 1 + sum_k ((2k-1)!!)^2 / (k! 8^k x^k).
    // The series is asymptotic; truncating at the smallest term leaves an
    // error of order e^{-2x}, i.e. below 1e-12 for x >= 15.
    double term = 1.0;
    double sum = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 30; ++k) {
        const double odd = static_cast<double>(2 * k - 1);
        term *= odd * odd / (8.0 * static_cast<double>(k) * x);
        if (term >= prev)
            break;
        sum += term;
        prev = term;
        if (term < sum * 1e-18)
            break;
    }
    return x - 0.5 * std::log(2.0 * kPi * x) + std::log(sum);
}

double erfcx(double x)
{
    if (x < 0.0)
        throw std::domain_error("erfcx: argument must be >= 0");
    if (x < 6.0)
        return std::exp(x * x) * std::erfc(x);

    // Laplace continued fraction erfcx(x) = 1/(sqrt(pi) (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))))
    double cf = 0.0;
    for (int k = 40; k >= 1; --k)
        cf = (0.5 * k) / (x + cf);
    return 1.0 / (std::sqrt(kPi) * (x + cf));
}

double log_erfc(double x)
{
    if (x <= 0.0)
        return std::log(std::erfc(x));  // erfc(x) in [1, 2]
    return std::log(erfcx(x)) - x * x;
}

double log_sum_exp(double a, double b)
{
    if (a == -std::numeric_limits<double>::infinity())
        return b;
    if (b == -std::numeric_limits<double>::infinity())
        return a;
    const double m = a > b ? a : b;
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace wpn
