#pragma once

// Quadrature helpers built on Boost.Math.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

namespace r11::quad {

/// Composite 20-point Gauss-Legendre rule on `panels` equal panels.
template <class T, class F>
T gauss_panels(F&& f, double a, double b, std::size_t panels) {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    const double h = (b - a) / double(panels);
    T acc{};
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + (double(p) + 0.5) * h;
        const double half = 0.5 * h;
        // Boost stores the non-negative half of a symmetric rule.
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0.0) {
                acc += w[k] * half * f(mid);
            } else {
                acc += w[k] * half * (f(mid + half * x[k]) + f(mid - half * x[k]));
            }
        }
    }
    return acc;
}

/// Trapezoid rule over a full period: sum_j f(2 pi j / n) * 2 pi / n.
template <class T, class F>
T periodic_trapezoid(F&& f, std::size_t n) {
    const double h = 2.0 * std::numbers::pi / double(n);
    T acc{};
    for (std::size_t j = 0; j < n; ++j) acc += f(h * double(j));
    return acc * h;
}

/// Integral over the disk |w| < radius in polar coordinates: radial
/// composite Gauss-Legendre, angular trapezoid.
template <class T, class F>
T disk_integral(F&& f, double radius, std::size_t radial_panels, std::size_t n_phi) {
    return gauss_panels<T>(
        [&](double r) {
            return r * periodic_trapezoid<T>([&](double phi) { return f(std::polar(r, phi)); }, n_phi);
        },
        0.0, radius, radial_panels);
}

/// Adaptive Gauss-Kronrod on a finite or semi-infinite interval.
template <class F>
double adaptive(F&& f, double a, double b, double tol, double* error = nullptr, unsigned depth = 15) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, depth, tol, error);
}

}  // namespace r11::quad
