#include "bemcond/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bemcond::specfun {

namespace {

constexpr long double PI_L = 3.14159265358979323846264338327950288L;
constexpr long double GAMMA_L = 0.57721566490153286060651209008240243L;
constexpr double SEAM = 16.0; // series below, asymptotics above

// Ascending series, long double to absorb the cancellation up to x = SEAM.
long double j0_series_l(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1, sum = 1;
    for (int m = 1; m < 200; ++m) {
        term *= -t / (static_cast<long double>(m) * m);
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-35L) break;
    }
    return sum;
}

long double j1_series_l(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 0.5L * x, sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= -t / (static_cast<long double>(m) * (m + 1));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-35L) break;
    }
    return sum;
}

// y0_reg = Y0 - (2/pi) log(x) J0 = (2/pi)(gamma - log 2) J0(x)
//          + (2/pi) sum_{m>=1} (-1)^{m+1} H_m t^m / (m!)^2,  t = x^2/4
long double y0_reg_series_l(long double x) {
    const long double t = 0.25L * x * x;
    long double term = 1, hm = 0, sum = 0;
    for (int m = 1; m < 200; ++m) {
        term *= t / (static_cast<long double>(m) * m);
        hm += 1.0L / m;
        const long double contrib = (m % 2 == 1 ? 1.0L : -1.0L) * hm * term;
        sum += contrib;
        if (std::fabs(contrib) < 1e-22L * (std::fabs(sum) + 1) + 1e-35L) break;
    }
    return (2.0L / PI_L) * ((GAMMA_L - std::log(2.0L)) * j0_series_l(x) + sum);
}

// y1_reg = Y1 - (2/pi) log(x) J1 + 2/(pi x)
//        = (2/pi)(gamma - log 2) J1(x)
//          - (1/pi) sum_{m>=0} (-1)^m (H_m + H_{m+1}) (x/2)^{2m+1} / (m! (m+1)!)
long double y1_reg_series_l(long double x) {
    const long double t = 0.25L * x * x;
    long double pw = 0.5L * x; // (x/2)^{2m+1}/(m!(m+1)!) at m=0
    long double hm = 0, hm1 = 1, sum = 0;
    for (int m = 0; m < 200; ++m) {
        const long double contrib = (m % 2 == 0 ? 1.0L : -1.0L) * (hm + hm1) * pw;
        sum += contrib;
        if (std::fabs(contrib) < 1e-22L * (std::fabs(sum) + 1) + 1e-35L) break;
        pw *= t / (static_cast<long double>(m + 1) * (m + 2));
        hm += 1.0L / (m + 1);
        hm1 += 1.0L / (m + 2);
    }
    return (2.0L / PI_L) * (GAMMA_L - std::log(2.0L)) * j1_series_l(x) - sum / PI_L;
}

// Hankel asymptotic modulus/phase series P_n, Q_n (n = 0, 1), optimally truncated.
void pq_asymptotic_l(int n, long double x, long double& P, long double& Q) {
    const long double mu = 4.0L * n * n;
    long double a = 1; // a_m, term of the asymptotic series
    P = 1;
    Q = 0;
    long double prev = 1e30L;
    for (int m = 1; m < 40; ++m) {
        a *= (mu - (2 * m - 1) * (2 * m - 1)) / (8.0L * m * x);
        if (std::fabs(a) >= prev) break; // optimal truncation
        prev = std::fabs(a);
        const int r = m % 4;
        if (r == 1) Q += a;
        else if (r == 2) P -= a;
        else if (r == 3) Q -= a;
        else P += a;
    }
}

void bessel_asymptotic_l(int n, long double x, long double& j, long double& y) {
    long double P, Q;
    pq_asymptotic_l(n, x, P, Q);
    const long double chi = x - (2 * n + 1) * PI_L / 4.0L;
    const long double amp = std::sqrt(2.0L / (PI_L * x));
    const long double c = std::cos(chi), s = std::sin(chi);
    j = amp * (P * c - Q * s);
    y = amp * (P * s + Q * c);
}

} // namespace

namespace detail {
double j0_series(double x) { return static_cast<double>(j0_series_l(x)); }
double j1_series(double x) { return static_cast<double>(j1_series_l(x)); }
double y0_series(double x) {
    return static_cast<double>((2.0L / PI_L) * std::log(static_cast<long double>(x)) * j0_series_l(x) +
                               y0_reg_series_l(x));
}
double y1_series(double x) {
    const long double xl = x;
    return static_cast<double>((2.0L / PI_L) * std::log(xl) * j1_series_l(xl) - 2.0L / (PI_L * xl) +
                               y1_reg_series_l(xl));
}
double j0_asymptotic(double x) {
    long double j, y;
    bessel_asymptotic_l(0, x, j, y);
    return static_cast<double>(j);
}
double y0_asymptotic(double x) {
    long double j, y;
    bessel_asymptotic_l(0, x, j, y);
    return static_cast<double>(y);
}
double j1_asymptotic(double x) {
    long double j, y;
    bessel_asymptotic_l(1, x, j, y);
    return static_cast<double>(j);
}
double y1_asymptotic(double x) {
    long double j, y;
    bessel_asymptotic_l(1, x, j, y);
    return static_cast<double>(y);
}
} // namespace detail

double bessel_j0(double x) {
    x = std::fabs(x);
    return x <= SEAM ? detail::j0_series(x) : detail::j0_asymptotic(x);
}

double bessel_j1(double x) {
    const double ax = std::fabs(x);
    const double v = ax <= SEAM ? detail::j1_series(ax) : detail::j1_asymptotic(ax);
    return x < 0 ? -v : v;
}

double bessel_y0(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_y0: argument must be positive");
    return x <= SEAM ? detail::y0_series(x) : detail::y0_asymptotic(x);
}

double bessel_y1(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_y1: argument must be positive");
    return x <= SEAM ? detail::y1_series(x) : detail::y1_asymptotic(x);
}

double bessel_y0_reg(double x) {
    if (!(x >= 0)) throw std::domain_error("bessel_y0_reg: argument must be >= 0");
    if (x <= SEAM) return static_cast<double>(y0_reg_series_l(x));
    return bessel_y0(x) - (2.0 / M_PI) * std::log(x) * bessel_j0(x);
}

double bessel_y1_reg(double x) {
    if (!(x >= 0)) throw std::domain_error("bessel_y1_reg: argument must be >= 0");
    if (x <= SEAM) return static_cast<double>(y1_reg_series_l(x));
    return bessel_y1(x) - (2.0 / M_PI) * std::log(x) * bessel_j1(x) + 2.0 / (M_PI * x);
}

double bessel_j(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    if (n > 400) throw std::invalid_argument("bessel_j: order beyond supported range");
    if (x < 0) throw std::domain_error("bessel_j: argument must be >= 0");
    if (x == 0) return n == 0 ? 1.0 : 0.0;
    if (n == 0) return bessel_j0(x);
    if (n == 1) return bessel_j1(x);
    if (x > std::max(SEAM, 1.2 * n)) {
        // upward recurrence is stable for n < x
        double jm1 = bessel_j0(x), j = bessel_j1(x);
        for (int m = 1; m < n; ++m) {
            const double jp = (2.0 * m / x) * j - jm1;
            jm1 = j;
            j = jp;
        }
        return j;
    }
    // Miller downward recurrence with even-sum normalization
    const int m0 = std::max(n, static_cast<int>(std::ceil(x)));
    int M = m0 + 24 + static_cast<int>(std::ceil(8.0 * std::sqrt(static_cast<double>(m0 + 1))));
    if (M % 2) ++M;
    long double jp1 = 0, j = 1e-32L, sum = 0, target = 0;
    const long double xl = x;
    for (int m = M; m >= 1; --m) {
        const long double jm1 = (2.0L * m / xl) * j - jp1;
        jp1 = j;
        j = jm1;
        if (m - 1 == n) target = j;
        if ((m - 1) % 2 == 0) sum += (m - 1 == 0) ? j : 2.0L * j;
        if (std::fabs(j) > 1e250L) { // rescale
            j *= 1e-250L;
            jp1 *= 1e-250L;
            sum *= 1e-250L;
            target *= 1e-250L;
        }
    }
    return static_cast<double>(target / sum);
}

double bessel_y(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_y: order must be >= 0");
    if (!(x > 0)) throw std::domain_error("bessel_y: argument must be positive");
    if (n == 0) return bessel_y0(x);
    if (n == 1) return bessel_y1(x);
    double ym1 = bessel_y0(x), y = bessel_y1(x);
    for (int m = 1; m < n; ++m) {
        const double yp = (2.0 * m / x) * y - ym1;
        ym1 = y;
        y = yp;
        if (std::isinf(y)) break;
    }
    return y;
}

std::complex<double> hankel1(int n, double x) {
    if (n != 0 && n != 1) throw std::invalid_argument("hankel1: order must be 0 or 1");
    if (!(x > 0)) throw std::domain_error("hankel1: argument must be positive");
    if (n == 0) return {bessel_j0(x), bessel_y0(x)};
    return {bessel_j1(x), bessel_y1(x)};
}

} // namespace bemcond::specfun
