#ifndef BEMCOND_QUADRATURE_HPP
#define BEMCOND_QUADRATURE_HPP

#include <vector>

namespace bemcond {

/// Quadrature rule on the reference interval [0,1].
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
    int size() const { return static_cast<int>(x.size()); }
};

/// n-point Gauss-Legendre rule on [0,1]. Cached per order.
const QuadRule& gauss_legendre(int n);

/// n-point Gauss rule for the weight -log(x) on (0,1), so that
/// sum_i w_i f(x_i) approximates \int_0^1 -log(x) f(x) dx.
/// Cached per order. Moments: \int_0^1 -log(x) x^k dx = 1/(k+1)^2.
const QuadRule& gauss_log(int n);

} // namespace bemcond

#endif
