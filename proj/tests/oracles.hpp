#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <array>
#include <cmath>
#include <functional>

#include "r11/moebius.hpp"

namespace r11::testing {

/// Five-point central difference.
inline double diff5(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

/// |density(g x) |J| - density(x)| / density(x) on the disk; the map is
/// holomorphic so |J| = |f'(z)|^2.
inline double disk_measure_residual(const SU11& ginv, Complex z, double h = 1e-3) {
    const auto re = [&](double s) { return act_by_inverse(ginv, z + s).real(); };
    const auto im = [&](double s) { return act_by_inverse(ginv, z + s).imag(); };
    const Complex deriv{diff5(re, 0.0, h), diff5(im, 0.0, h)};
    const double lhs = invariant_density(act_by_inverse(ginv, z)) * std::norm(deriv);
    const double rhs = invariant_density(z);
    return std::abs(lhs - rhs) / rhs;
}

/// Same identity for the hyperbolic disk with a full 2x2 Jacobian.
inline double tilde_measure_residual(const Cl11Matrix& ginv, const TildePoint& p, double h = 3e-4) {
    std::array<std::array<double, 2>, 2> jac{};
    for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
            const auto f = [&](double s) {
                TildePoint q = p;
                (j == 0 ? q.u.u1 : q.u.u2) += s;
                const Vector11 img = act_by_inverse(ginv, q).u;
                return i == 0 ? img.u1 : img.u2;
            };
            jac[i][j] = diff5(f, 0.0, h);
        }
    }
    const double det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
    const double lhs = invariant_density(act_by_inverse(ginv, p).u) * std::abs(det);
    const double rhs = invariant_density(p.u);
    return std::abs(lhs - rhs) / rhs;
}

}  // namespace r11::testing
