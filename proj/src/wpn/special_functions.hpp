#pragma once

namespace wpn {

// ln I0(x) for x >= 0, where I0 is the zeroth-order modified Bessel function
// of the first kind. Power series below the seam at x = 15, scaled asymptotic
// series above it; relative error stays below ~1e-12 on both sides of the
// seam. Throws std::domain_error for negative x.
double log_bessel_i0(double x);

// Scaled complementary error function exp(x^2) * erfc(x), for x >= 0 only.
double erfcx(double x);

// ln erfc(x) for any real x; avoids the erfc underflow at large positive x.
double log_erfc(double x);

// log(exp(a) + exp(b)) without overflow; tolerates -inf inputs.
double log_sum_exp(double a, double b);

}  // namespace wpn
