#include "wpn/selfcheck.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "wpn/amp_rate.hpp"
#include "wpn/modulation.hpp"
#include "wpn/phase_rate.hpp"
#include "wpn/quadrature.hpp"
#include "wpn/special_functions.hpp"

namespace wpn {

namespace {

constexpr double kPi = std::numbers::pi;

// Independent 20-term reference for ln I0 in extended precision: plain power
// series up to the crossover, scaled asymptotic series above it.
long double reference_log_i0(long double a)
{
    if (a <= 10.5L) {
        long double term = 1.0L;
        long double sum = 1.0L;
        const long double q = 0.25L * a * a;
        for (int k = 1; k <= 20; ++k) {
            term *= q / (static_cast<long double>(k) * static_cast<long double>(k));
            sum += term;
        }
        return std::log(sum);
    }
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k <= 20; ++k) {
        const long double odd = static_cast<long double>(2 * k - 1);
        term *= odd * odd / (8.0L * static_cast<long double>(k) * a);
        sum += term;
    }
    return a - 0.5L * std::log(2.0L * std::numbers::pi_v<long double> * a) + std::log(sum);
}

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

Check check_bessel_reference()
{
    Check c{"log_bessel_i0 vs 20-term extended-precision reference", true, ""};
    double worst = 0.0;
    for (double a : {0.1, 1.0, 10.0, 100.0, 500.0, 5000.0}) {
        const double ref = static_cast<double>(reference_log_i0(a));
        const double rel = std::abs(log_bessel_i0(a) - ref) / std::abs(ref);
        worst = std::max(worst, rel);
    }
    c.pass = worst <= 1e-10;
    std::ostringstream os;
    os << "max rel err " << worst;
    c.detail = os.str();
    return c;
}

Check check_bessel_upper_bound()
{
    Check c{"ln I0(z) <= z - (1/2) ln z", true, ""};
    double worst_slack = 1e300;
    for (int i = 0; i <= 100; ++i) {
        const double z = 0.1 * std::pow(1e5, i / 100.0);  // log grid 0.1 .. 1e4
        const double slack = (z - 0.5 * std::log(z)) - log_bessel_i0(z);
        worst_slack = std::min(worst_slack, slack);
        if (slack < 0.0)
            c.pass = false;
    }
    std::ostringstream os;
    os << "min slack " << worst_slack;
    c.detail = os.str();
    return c;
}

Check check_tikhonov_normalization()
{
    Check c{"tikhonov pdf integrates to 1", true, ""};
    double worst = 0.0;
    for (double alpha : {0.1, 1.0, 10.0, 100.0}) {
        const double integral = trapezoid_periodic(
            [&](double phi) { return std::exp(tikhonov_logpdf(phi, 0.3, alpha)); },
            -kPi, kPi, 4096);
        worst = std::max(worst, std::abs(integral - 1.0));
    }
    c.pass = worst <= 1e-9;
    std::ostringstream os;
    os << "max |I-1| " << worst;
    c.detail = os.str();
    return c;
}

Check check_tikhonov_shift()
{
    Check c{"tikhonov log-density drop at pi equals -2 alpha", true, ""};
    double worst = 0.0;
    for (double alpha : {1.0, 10.0, 250.0}) {
        const double diff = tikhonov_logpdf(kPi, 0.0, alpha) - tikhonov_logpdf(0.0, 0.0, alpha);
        worst = std::max(worst, std::abs(diff + 2.0 * alpha) / (1.0 + 2.0 * alpha));
    }
    c.pass = worst <= 1e-12;
    std::ostringstream os;
    os << "max rel dev " << worst;
    c.detail = os.str();
    return c;
}

Check check_amp_density_normalization()
{
    Check c{"amplitude-squared density integrates to 1", true, ""};
    const double power = 10.0;
    const auto rule = gauss_legendre(64);
    std::vector<double> breaks;
    for (int i = 0; i <= 50; ++i)
        breaks.push_back(0.5 * power + power * i);
    const double integral = integrate_panels(
        [&](double a) { return amp_sq_density(a, power); }, breaks, rule);
    c.pass = std::abs(integral - 1.0) <= 1e-10;
    std::ostringstream os;
    os << "|I-1| " << std::abs(integral - 1.0);
    c.detail = os.str();
    return c;
}

Check check_aux_normalization()
{
    Check c{"auxiliary V-channel density integrates to 1", true, ""};
    const ChannelParams params = make_params(1.0, 20.0);
    const double x_a = std::sqrt(params.power);
    const double mean = x_a * x_a * params.delta + params.sigma_n_sq;
    const double sd = std::sqrt(2.0 * x_a * x_a * params.delta * params.delta);
    const auto rule = gauss_legendre(48);
    std::vector<double> breaks;
    for (int i = -12; i <= 12; i += 2)
        breaks.push_back(mean + sd * i);
    const double integral = integrate_panels(
        [&](double v) { return std::exp(log_aux_v(v, x_a, params)); }, breaks, rule);
    c.pass = std::abs(integral - 1.0) <= 1e-10;
    std::ostringstream os;
    os << "|I-1| " << std::abs(integral - 1.0);
    c.detail = os.str();
    return c;
}

double marginal_normalization(const ChannelParams& params)
{
    const double s2 = params.sigma_n_sq;
    const double edge = s2 + 0.5 * params.power * params.delta;  // v at a = P/2
    const double kernel = std::sqrt(params.power) * params.delta * std::sqrt(s2);
    const double scale = 0.5 * params.power * params.delta;  // exponential tail scale in v

    std::vector<double> breaks;
    for (int i = -9; i <= 3; ++i)
        breaks.push_back(edge + 5.0 * kernel * i);
    for (double w = 0.25; w <= 64.0; w *= 2.0)
        breaks.push_back(edge + 15.0 * kernel + scale * w);

    const auto rule = gauss_legendre(32);
    return integrate_panels(
        [&](double v) { return std::exp(log_marginal_v(v, params)); }, breaks, rule);
}

Check check_marginal_normalization()
{
    Check c{"mixture marginal Q_V integrates to 1", true, ""};
    double worst = 0.0;
    for (double snr_db : {40.0, 60.0}) {
        const ChannelParams params = make_params(1.0, snr_db);
        worst = std::max(worst, std::abs(marginal_normalization(params) - 1.0));
    }
    c.pass = worst <= 1e-6;
    std::ostringstream os;
    os << "max |I-1| " << worst;
    c.detail = os.str();
    return c;
}

Check check_bound_concavity()
{
    // Concavity holds in alpha itself (second differences on uniform alpha
    // grids); together with the monotone log reparametrization this is what
    // makes the golden-section search valid.
    Check c{"phase_rate_bound concave in alpha", true, ""};
    const double ecos = 0.995;
    const std::pair<double, double> windows[] = {
        {1e-3, 1.0}, {1.0, 100.0}, {100.0, 1e4}};
    double worst = -1e300;
    for (const auto& [lo, hi] : windows) {
        const double h = (hi - lo) / 120.0;
        double prev2 = 0.0, prev1 = 0.0;
        for (int i = 0; i <= 120; ++i) {
            const double f = phase_rate_bound(lo + h * i, ecos);
            if (i >= 2) {
                const double tol = 1e-9 * std::max(1.0, std::abs(f));
                const double second_diff = f - 2.0 * prev1 + prev2;
                worst = std::max(worst, second_diff);
                if (second_diff > tol)
                    c.pass = false;
            }
            prev2 = prev1;
            prev1 = f;
        }
    }
    std::ostringstream os;
    os << "max second difference " << worst;
    c.detail = os.str();
    return c;
}

Check check_bound_chain_at_unit_ecos()
{
    Check c{"alpha - ln I0(alpha) >= (1/2) ln alpha", true, ""};
    double worst = 1e300;
    for (int i = 0; i <= 100; ++i) {
        const double alpha = 0.1 * std::pow(1e5, i / 100.0);
        const double slack = phase_rate_bound(alpha, 1.0) - 0.5 * std::log(alpha);
        worst = std::min(worst, slack);
        if (slack < 0.0)
            c.pass = false;
    }
    std::ostringstream os;
    os << "min slack " << worst;
    c.detail = os.str();
    return c;
}

}  // namespace

int selfcheck(const ReportFn& report)
{
    const Check checks[] = {
        check_bessel_reference(),
        check_bessel_upper_bound(),
        check_tikhonov_normalization(),
        check_tikhonov_shift(),
        check_amp_density_normalization(),
        check_aux_normalization(),
        check_marginal_normalization(),
        check_bound_concavity(),
        check_bound_chain_at_unit_ecos(),
    };
    int failures = 0;
    for (const auto& c : checks) {
        if (!c.pass)
            ++failures;
        if (report)
            report(std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name +
                   " (" + c.detail + ")");
    }
    return failures;
}

}  // namespace wpn
