#ifndef BEMCOND_SPECFUN_HPP
#define BEMCOND_SPECFUN_HPP

#include <complex>

namespace bemcond::specfun {

/// Bessel functions of the first and second kind for real positive argument.
/// Small arguments use ascending power series in extended precision; beyond the
/// crossover the Hankel asymptotic expansions are used. Both branches agree at
/// the seam to better than 1e-11 relative.
double bessel_j0(double x);
double bessel_j1(double x);
double bessel_y0(double x); // x > 0
double bessel_y1(double x); // x > 0

/// J_n for nonnegative integer order (Miller downward recurrence where needed).
double bessel_j(int n, double x);
/// Y_n by upward recurrence from Y0, Y1. x > 0.
double bessel_y(int n, double x);

/// Hankel function H_n^{(1)}(x) = J_n(x) + i Y_n(x) for n in {0,1}, x > 0.
/// Throws std::domain_error for x <= 0 (logarithmic singularity).
std::complex<double> hankel1(int n, double x);

/// Regular (analytic) parts of Y0, Y1 after removing the logarithm:
///   y0_reg(x) = Y0(x) - (2/pi) log(x) J0(x)
///   y1_reg(x) = Y1(x) - (2/pi) log(x) J1(x) + 2/(pi x)
/// Evaluated without cancellation; y0_reg(0) = (2/pi)(gamma - log 2), y1_reg(0) = 0.
double bessel_y0_reg(double x);
double bessel_y1_reg(double x);

/// Euler-Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

namespace detail {
// Exposed for the seam-agreement tests.
double j0_series(double x);
double j0_asymptotic(double x);
double y0_series(double x);
double y0_asymptotic(double x);
double j1_series(double x);
double j1_asymptotic(double x);
double y1_series(double x);
double y1_asymptotic(double x);
} // namespace detail

} // namespace bemcond::specfun

#endif
