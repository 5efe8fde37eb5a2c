#include "bemcond/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace bemcond {

namespace {

// Gauss-Legendre by Newton iteration on P_n, in long double.
QuadRule make_gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        long double z = std::cos(pi * (i + 0.75L) / (n + 0.5L));
        long double pp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                long double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
            }
            pp = n * (z * p0 - p1) / (z * z - 1);
            long double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-19L) break;
        }
        long double w = 2.0L / ((1 - z * z) * pp * pp);
        // map to [0,1]
        rule.x[i] = static_cast<double>(0.5L * (1 - z));
        rule.x[n - 1 - i] = static_cast<double>(0.5L * (1 + z));
        rule.w[i] = rule.w[n - 1 - i] = static_cast<double>(0.5L * w);
    }
    return rule;
}

// Gauss rule for weight -log(x) on (0,1): Stieltjes recurrence coefficients from a
// dyadically graded composite Gauss discretization, then Golub-Welsch.
QuadRule make_gauss_log(int n) {
    if (n < 1) throw std::invalid_argument("gauss_log: order must be >= 1");
    const QuadRule& base = gauss_legendre(48);
    const int levels = 90;
    std::vector<long double> xs, ws;
    xs.reserve(static_cast<size_t>(levels) * base.size());
    ws.reserve(static_cast<size_t>(levels) * base.size());
    for (int j = 0; j < levels; ++j) {
        long double b = std::pow(2.0L, static_cast<long double>(-j));
        long double a = 0.5L * b;
        for (int i = 0; i < base.size(); ++i) {
            long double x = a + (b - a) * static_cast<long double>(base.x[i]);
            xs.push_back(x);
            ws.push_back((b - a) * static_cast<long double>(base.w[i]) * (-std::log(x)));
        }
    }
    const int m = static_cast<int>(xs.size());
    std::vector<long double> alpha(n), beta(n);
    std::vector<long double> p_prev(m, 0.0L), p(m, 1.0L);
    long double prev_norm = 0;
    for (int k = 0; k < n; ++k) {
        long double sp = 0, sxpp = 0;
        for (int i = 0; i < m; ++i) {
            long double pp = p[i] * p[i];
            sp += ws[i] * pp;
            sxpp += ws[i] * xs[i] * pp;
        }
        alpha[k] = sxpp / sp;
        beta[k] = (k == 0) ? sp : sp / prev_norm;
        prev_norm = sp;
        for (int i = 0; i < m; ++i) {
            long double pn = (xs[i] - alpha[k]) * p[i] - (k > 0 ? beta[k] : 0.0L) * p_prev[i];
            p_prev[i] = p[i];
            p[i] = pn;
        }
    }
    Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
    for (int k = 0; k < n; ++k) diag[k] = static_cast<double>(alpha[k]);
    for (int k = 1; k < n; ++k) sub[k - 1] = static_cast<double>(std::sqrt(beta[k]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    QuadRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const double mu0 = static_cast<double>(beta[0]);
    for (int i = 0; i < n; ++i) {
        rule.x[i] = es.eigenvalues()[i];
        const double z0 = es.eigenvectors()(0, i);
        rule.w[i] = mu0 * z0 * z0;
    }
    return rule;
}

} // namespace

const QuadRule& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, QuadRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

const QuadRule& gauss_log(int n) {
    static std::mutex mtx;
    static std::map<int, QuadRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_log(n)).first;
    return it->second;
}

} // namespace bemcond
