#include "r11/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "r11/errors.hpp"
#include "r11/quadrature.hpp"

namespace r11 {

namespace {

/// sum_j c_j e^{-tau k j} (1 - e^{-tau k}) / tau over the intervals [jk, (j+1)k).
double integer_part_laplace(double a, double k, double tau, const TaylorSpec& q, std::size_t* intervals) {
    const double r = std::max(std::abs(a), 1.0) * std::exp(-tau * k);
    if (!(tau > 0.0) || !(r < 1.0)) throw ConvergenceError("integer-part Laplace integral diverges");
    const double width = -std::expm1(-tau * k) / tau;
    const double decay = std::exp(-tau * k);
    // d = c_j e^{-tau k j}; c_j alone overflows for |a| > 1.
    double d = 0.0;
    double sum = 0.0;
    std::size_t j = 0;
    for (; j < q.max_intervals; ++j) {
        const double term = d * width;
        sum += term;
        // |c_i| <= i max(|a|, 1)^i, so the remaining terms are bounded by this.
        const double rest = double(j + 2) * std::pow(r, double(j + 1)) * width / ((1.0 - r) * (1.0 - r));
        if (j > 1 && rest <= q.tail * std::abs(sum)) break;
        d = decay * (a * d + std::exp(-tau * k * double(j)));
    }
    if (j == q.max_intervals) throw ConvergenceError("too many intervals");
    if (intervals) *intervals = j + 1;
    return sum;
}

/// sum_j x^j with |x| < 1, term by term.
double geometric(double x, const TaylorSpec& q) {
    if (!(std::abs(x) < 1.0)) throw ConvergenceError("geometric ratio >= 1");
    double term = 1.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < q.max_intervals; ++j) {
        sum += term;
        if (std::abs(term) <= q.tail * (1.0 - std::abs(x)) * std::abs(sum)) return sum;
        term *= x;
    }
    throw ConvergenceError("too many intervals");
}

/// tau int_0^inf (a^{[p]} - 1)/(a - 1) e^{-tau p} dp = 1/(e^tau - a).
double component_expand(double a, double tau, const TaylorSpec& q) {
    if (std::abs(a - 1.0) <= 1e-15) throw NonInvertible("component of e1 u equals 1");
    if (!(std::abs(a) * std::exp(-tau) < 1.0)) throw ConvergenceError("component outside the convergence region");
    if (tau > 0.0) return tau * integer_part_laplace(a, 1.0, tau, q, nullptr);
    // The constant part -1/(a-1) has Laplace integral 1/tau, continued to tau < 0.
    return (-std::expm1(-tau) * geometric(a * std::exp(-tau), q) - 1.0) / (a - 1.0);
}

}  // namespace

Complex classical_multiplier(Complex a, int n) {
    return std::sqrt(1.0 - std::norm(a)) * std::pow(std::conj(a), n - 1);
}

ClassicalExpansion classical_expand(Complex a, double phi, int N) {
    if (!(std::norm(a) < 1.0)) throw OutOfDomain("|a| must be < 1");
    ClassicalExpansion r;
    Complex sum{};
    Complex term = std::sqrt(1.0 - std::norm(a));
    const Complex step = std::conj(a) * std::polar(1.0, phi);
    for (int n = 1; n <= N; ++n) {
        sum += term;
        r.partial_sums.push_back(sum);
        term *= step;
    }
    r.reference = coherent_state(a)(phi);
    return r;
}

Complex classical_coefficient(const CircleFn& f, int n, std::size_t points) {
    return quad::periodic_trapezoid<Complex>([&](double phi) { return f(phi) * std::polar(1.0, -(n - 1) * phi); },
                                             points);
}

LaplaceCheck laplace_table_check(double a, double k, double t, const TaylorSpec& q) {
    if (!(k > 0.0)) throw DomainError("k must be positive");
    if (!(t > 0.0) || !(std::abs(a) < std::exp(k * t))) throw ConvergenceError("needs t > 0 and |a| < e^{kt}");
    LaplaceCheck r;
    r.lhs = 1.0 / (t * (std::exp(k * t) - a));
    r.rhs = integer_part_laplace(a, k, t, q, &r.intervals);
    r.error = std::abs(r.lhs - r.rhs);
    return r;
}

EvenNumber e1u_components(const Vector11& u) { return {u.u2 - u.u1, -u.u1 - u.u2}; }

EvenNumber hyperbolic_expand(const TildePoint& u, double t, const TaylorSpec& q) {
    if (std::abs(t) < 1e-12) throw ConvergenceError("t = 0: log z vanishes");
    const EvenNumber a = e1u_components(u.u);
    return {component_expand(a.a1, t, q), component_expand(a.a2, -t, q)};
}

GeometricExpansion geometric_expand(const TildePoint& u, double t, int J) {
    const EvenNumber a = e1u_components(u.u);
    if (!(std::abs(a.a1) * std::exp(-t) < 1.0) || !(std::abs(a.a2) * std::exp(t) < 1.0)) {
        throw ConvergenceError("geometric series outside its convergence region");
    }
    GeometricExpansion r;
    EvenNumber term{std::exp(-t), std::exp(t)};
    const EvenNumber step{a.a1 * std::exp(-t), a.a2 * std::exp(t)};
    EvenNumber sum{0.0};
    double last = 0.0;
    double previous = 0.0;
    for (int j = 0; j <= J; ++j) {
        sum += term;
        r.partial_sums.push_back(sum);
        previous = last;
        last = std::max(std::abs(term.a1), std::abs(term.a2));
        term *= step;
    }
    r.ratio = J >= 1 && previous > 0.0 ? last / previous : 0.0;
    return r;
}

MellinResult mellin_coefficient(const BoundaryFunction& f, double p) {
    if (f.domain != BoundaryDomain::hyperbolic) throw DomainError("hyperbolic samples expected");
    MellinResult r;
    const double h = f.spacing();
    const bool simpson = f.n % 2 == 1;
    double peak = 0.0;
    double edge = 0.0;
    for (int b = 0; b < 4; ++b) {
        EvenNumber acc{0.0};
        for (std::size_t j = 0; j < f.n; ++j) {
            const std::size_t i = std::size_t(b) * f.n + j;
            const double t = f.coordinate(i);
            const double e = (1.0 - p) * t;
            const EvenNumber v = EvenNumber{t * std::exp(e), t * std::exp(-e)} * f.even_values[i];
            const double mag = std::max(std::abs(v.a1), std::abs(v.a2));
            peak = std::max(peak, mag);
            if (j == 0 || j + 1 == f.n) edge = std::max(edge, mag);
            double w = 1.0;
            if (j == 0 || j + 1 == f.n) {
                w = simpson ? 1.0 / 3.0 : 0.5;
            } else if (simpson) {
                w = j % 2 == 1 ? 4.0 / 3.0 : 2.0 / 3.0;
            }
            acc += EvenNumber{w * h} * v;
        }
        r.value += acc;
    }
    if (edge > 1e-10 * peak && edge > 0.0) r.flags.emplace_back("truncated_tail");
    return r;
}

TaylorCoefficients classical_coefficients(const CircleFn& f, int N, std::size_t points) {
    TaylorCoefficients c;
    c.mode = TaylorCoefficients::Mode::discrete;
    for (int n = 1; n <= N; ++n) {
        c.index.push_back(n);
        c.values.push_back(classical_coefficient(f, n, points));
    }
    return c;
}

TaylorCoefficients mellin_coefficients(const BoundaryFunction& f, const std::vector<double>& p_grid) {
    TaylorCoefficients c;
    c.mode = TaylorCoefficients::Mode::continuous;
    for (const double p : p_grid) {
        c.index.push_back(p);
        c.even_values.push_back(mellin_coefficient(f, p).value);
    }
    return c;
}

std::string to_csv(const TaylorCoefficients& c) {
    const bool discrete = c.mode == TaylorCoefficients::Mode::discrete;
    std::string out = discrete ? "n,re,im\n" : "p,a1,a2\n";
    char line[128];
    for (std::size_t i = 0; i < c.index.size(); ++i) {
        const double x = discrete ? c.values[i].real() : c.even_values[i].a1;
        const double y = discrete ? c.values[i].imag() : c.even_values[i].a2;
        if (discrete) {
            std::snprintf(line, sizeof line, "%d,%.17g,%.17g\n", int(c.index[i]), x, y);
        } else {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", c.index[i], x, y);
        }
        out += line;
    }
    return out;
}

}  // namespace r11
