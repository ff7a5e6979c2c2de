#include "r11/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "r11/errors.hpp"
#include "r11/quadrature.hpp"

namespace r11 {

namespace {

constexpr double kPi = std::numbers::pi;

double component(const EvenNumber& x, int c) { return c == 1 ? x.a1 : x.a2; }

void require_in_unit_disk(Complex a) {
    if (!(std::norm(a) < 1.0)) throw OutOfDomain("|a| must be < 1");
}

Complex disk_integrand(Complex a, double phi) {
    return std::sqrt(1.0 - std::norm(a)) / (1.0 - a * std::polar(1.0, -phi));
}

}  // namespace

std::vector<double> QuadratureSpec::default_pv_epsilons() {
    std::vector<double> eps;
    for (int k = 0; k <= 6; ++k) eps.push_back(0.1 * std::ldexp(1.0, -k));
    return eps;
}

void QuadratureSpec::validate() const {
    if (n < 16) throw DomainError("quadrature needs N >= 16");
    if (pv_epsilons.empty()) throw DomainError("empty excision sequence");
    for (std::size_t k = 0; k < pv_epsilons.size(); ++k) {
        if (!(pv_epsilons[k] > 0.0)) throw DomainError("excision radii must be positive");
        if (k > 0 && !(pv_epsilons[k] < pv_epsilons[k - 1])) throw DomainError("excision radii must decrease");
    }
    if (!(t_max > 0.0)) throw DomainError("t_max must be positive");
}

// --- circle and disk -----------------------------------------------------

TransformResult cauchy_disk(const CircleFn& f, Complex a, const QuadratureSpec& q) {
    q.validate();
    require_in_unit_disk(a);
    const auto integrand = [&](double phi) { return f(phi) * disk_integrand(a, phi); };
    TransformResult r;
    r.value = quad::periodic_trapezoid<Complex>(integrand, q.n);
    const Complex coarse = quad::periodic_trapezoid<Complex>(integrand, q.n / 2);
    r.error_estimate = std::abs(r.value - coarse);
    r.normalized = r.value / (2.0 * kPi * std::sqrt(1.0 - std::norm(a)));
    return r;
}

TransformResult cauchy_disk(const BoundaryFunction& f, Complex a) {
    if (f.domain != BoundaryDomain::circle) throw DomainError("circle samples expected");
    require_in_unit_disk(a);
    TransformResult r;
    const double h = f.spacing();
    Complex fine{};
    Complex coarse{};
    for (std::size_t j = 0; j < f.n; ++j) {
        const Complex term = f.values[j] * disk_integrand(a, f.coordinate(j));
        fine += term;
        if (j % 2 == 0) coarse += term;
    }
    r.value = fine * h;
    r.error_estimate = std::abs(r.value - coarse * (2 * h));
    r.normalized = r.value / (2.0 * kPi * std::sqrt(1.0 - std::norm(a)));
    return r;
}

double bergman_normalization(int m, Complex a) {
    return std::pow(1.0 - std::norm(a), 0.5 * m) * std::pow(4.0, 1 - m) * kPi / (m - 1);
}

TransformResult bergman(int m, const DiskFn& f, Complex a, const QuadratureSpec& q) {
    if (m < 2) throw DomainError("Bergman transform needs m >= 2");
    require_in_unit_disk(a);
    const auto integrand = [&](Complex w) {
        return f(w) * std::pow(1.0 - a * std::conj(w), -m) * std::pow(1.0 - std::norm(w), m - 2);
    };
    const std::size_t panels = std::max<std::size_t>(1, q.n_radial / 20);
    const double pre = std::pow(1.0 - std::norm(a), 0.5 * m) * std::pow(4.0, 1 - m);
    TransformResult r;
    r.value = pre * quad::disk_integral<Complex>(integrand, 1.0, panels, q.n_angular);
    const Complex coarse =
        pre * quad::disk_integral<Complex>(integrand, 1.0, std::max<std::size_t>(1, panels / 2), q.n_angular / 2);
    r.error_estimate = std::abs(r.value - coarse);
    r.normalized = r.value / bergman_normalization(m, a);
    return r;
}

// --- hyperbolic ------------------------------------------------------------

EvenNumber kernel_tilde(const TildePoint& u, const BranchCoord& v, double sigma) {
    const double s = branch_sign(v.branch);
    const EvenNumber z = exp_bivector(v.t);
    const Vector11 e1{1.0, 0.0};
    const EvenNumber den = z - EvenNumber{s} * (e1 * u.u);
    const double scale = 1.0 + std::abs(u.u.u1) + std::abs(u.u.u2);
    if (std::abs(den.a1) <= 1e-15 * (z.a1 + scale) || std::abs(den.a2) <= 1e-15 * (z.a2 + scale)) {
        throw LightConeSingularity("boundary point lies on the light cone through u");
    }
    EvenNumber k = pow(den, -1.0 - sigma);
    if (sigma != 0.0) {
        const EvenNumber num = EvenNumber{1.0} - EvenNumber{s} * (u.u * e1) * z;
        k = pow(num, sigma) * k;
    }
    return k;
}

EvenNumber sio_integrand(const TildePoint& u, const BranchCoord& v, double sigma) {
    return kernel_tilde(u, v, sigma) * exp_bivector((1.0 + sigma) * v.t);
}

namespace {

struct ComponentPV {
    std::vector<double> partials;  // A_k for each excision radius
    double quad_error = 0.0;
};

/// PV integral of one idempotent component on one branch.
ComponentPV component_pv(const std::function<double(double)>& g, double t0, bool singular, const QuadratureSpec& q) {
    ComponentPV out;
    const double lo = -q.t_max;
    const double hi = q.t_max;
    const double tol = q.tolerance;
    const auto piece = [&](double a, double b) {
        if (!(b > a)) return 0.0;
        double err = 0.0;
        const double v = quad::adaptive(g, a, b, tol, &err);
        out.quad_error += err;
        return v;
    };
    if (!singular) {
        out.partials.assign(q.pv_epsilons.size(), piece(lo, hi));
        return out;
    }
    const double delta = q.pv_epsilons.front();
    double acc = piece(lo, t0 - delta) + piece(t0 + delta, hi);
    // Paired integrand: the odd 1/(t - t0) parts cancel.
    const auto paired = [&](double s) { return g(t0 + s) + g(t0 - s); };
    out.partials.push_back(acc);
    // The paired integrand is smooth but carries cancellation noise of order
    // eps_machine / s, which defeats relative adaptive tolerances; a fixed
    // Gauss rule compared against its half-refinement is used instead.
    for (std::size_t k = 1; k < q.pv_epsilons.size(); ++k) {
        const double a = q.pv_epsilons[k];
        const double b = q.pv_epsilons[k - 1];
        const double fine = quad::gauss_panels<double>(paired, a, b, 2);
        const double coarse = quad::gauss_panels<double>(paired, a, b, 1);
        acc += fine;
        out.quad_error += std::abs(fine - coarse);
        out.partials.push_back(acc);
    }
    return out;
}

}  // namespace

TransformResult cauchy_tilde_pv(double sigma, const TildeFn& f, const TildePoint& u, const QuadratureSpec& q) {
    q.validate();
    if (!in_disk(u)) throw OutOfDomain("u must lie in the open hyperbolic disk");
    const std::size_t levels = q.pv_epsilons.size();
    std::array<std::vector<double>, 2> sums{std::vector<double>(levels, 0.0), std::vector<double>(levels, 0.0)};
    const auto roots = singular_points(u);
    TransformResult r;
    double quad_error = 0.0;
    bool any_singular = false;
    if (std::abs(u.u.u1 - u.u.u2) < 1e-3 || std::abs(u.u.u1 + u.u.u2) < 1e-3) {
        r.flags.emplace_back("near_light_cone_locus");
    }
    for (int b = 0; b < 4; ++b) {
        for (int c = 1; c <= 2; ++c) {
            double t0 = 0.0;
            bool singular = false;
            for (const auto& sp : roots) {
                if (sp.coord.branch == b && sp.component == c && std::abs(sp.coord.t) < q.t_max) {
                    t0 = sp.coord.t;
                    singular = true;
                    if (q.t_max - std::abs(t0) < q.pv_epsilons.front()) r.flags.emplace_back("root_near_truncation");
                }
            }
            any_singular = any_singular || singular;
            const auto g = [&, b, c](double t) {
                const BranchCoord v{b, t};
                return component(sio_integrand(u, v, sigma), c) * component(f(v), c);
            };
            const ComponentPV pv = component_pv(g, t0, singular, q);
            quad_error += pv.quad_error;
            for (std::size_t k = 0; k < levels; ++k) sums[c - 1][k] += pv.partials[k];
        }
    }

    const double pre = std::sqrt(std::abs(1.0 + u.u.square()));
    // Richardson in odd powers of epsilon (ratio 2 between radii).
    const std::size_t order = std::min<std::size_t>(2, levels - 1);
    std::array<double, 2> value{};
    std::array<double, 2> rich_err{};
    for (int c = 0; c < 2; ++c) {
        std::vector<std::vector<double>> tab(levels);
        for (std::size_t k = 0; k < levels; ++k) {
            tab[k].push_back(sums[c][k]);
            for (std::size_t j = 1; j <= std::min(k, order); ++j) {
                const double factor = std::ldexp(1.0, int(2 * j - 1)) - 1.0;
                tab[k].push_back(tab[k][j - 1] + (tab[k][j - 1] - tab[k - 1][j - 1]) / factor);
            }
        }
        const std::size_t last = levels - 1;
        value[c] = tab[last][order];
        rich_err[c] = last >= 1 && order <= last - 1 ? std::abs(tab[last][order] - tab[last - 1][order]) : 0.0;
    }
    if (any_singular) {
        for (std::size_t k = 1; k < levels; ++k) {
            r.pv_error_sequence.push_back(
                pre * std::max(std::abs(sums[0][k] - sums[0][k - 1]), std::abs(sums[1][k] - sums[1][k - 1])));
        }
        r.pv_epsilon = q.pv_epsilons.back();
        const auto& e = r.pv_error_sequence;
        const std::size_t n = e.size();
        const double magnitude = pre * (std::abs(value[0]) + std::abs(value[1]));
        if (n >= 3 && e[n - 1] > 0.9 * e[n - 2] && e[n - 2] > 0.9 * e[n - 3] && e[n - 1] > 1e-9 * (1.0 + magnitude)) {
            throw PVDivergence("excised partial integrals do not settle");
        }
    }
    r.even = EvenNumber{pre * value[0], pre * value[1]};
    r.value = Complex{r.even.scalar(), r.even.bivector()};
    r.normalized = r.value / pre;
    r.error_estimate = pre * (std::max(rich_err[0], rich_err[1]) + quad_error);

    if (q.estimate_truncation) {
        QuadratureSpec wide = q;
        wide.t_max = 2.0 * q.t_max;
        wide.estimate_truncation = false;
        const TransformResult w = cauchy_tilde_pv(sigma, f, u, wide);
        r.error_estimate += (w.even - r.even).max_abs();
    }
    return r;
}

TransformResult cauchy_tilde_pv(double sigma, const BoundaryFunction& f, const TildePoint& u, const QuadratureSpec& q) {
    if (f.domain != BoundaryDomain::hyperbolic) throw DomainError("hyperbolic-circle samples expected");
    return cauchy_tilde_pv(sigma, as_tilde_fn(f), u, q);
}

double hardy_norm(const TildeFn& f, double lambda, double t_max) {
    if (!(lambda >= -1.0 && lambda < 0.0)) throw BadRadius("lambda must lie in [-1, 0)");
    const double lam = std::abs(lambda);
    double total = 0.0;
    const auto panels = std::size_t(std::ceil(8.0 * t_max));
    for (int b = 0; b < 4; ++b) {
        const double radius = branch_sheet(b) == Sheet::plus ? lam : 1.0 / lam;
        total += radius * quad::gauss_panels<double>(
                              [&](double t) {
                                  const EvenNumber v = f({b, t});
                                  return 0.5 * (v.a1 * v.a1 + v.a2 * v.a2);
                              },
                              -t_max, t_max, panels);
    }
    return total / (lam * lam);
}

// --- intertwining ----------------------------------------------------------

std::pair<Complex, SU11> omega_action(const SU11& g, Complex a) {
    const SU11 x = g.inverse() * section_disk(a);
    return {section_inverse(x), project(x)};
}

std::pair<TildePoint, Cl11Matrix> omega_action(const Cl11Matrix& g, const TildePoint& u) {
    const Cl11Matrix gi = g.inverse();
    const Cl11Matrix x = gi * section_tilde(u.u);
    return {act_by_inverse(gi, u), project(x)};
}

IntertwiningResult intertwining_residual(const SU11& g, const CircleFn& f, const std::vector<Complex>& points,
                                         std::size_t n) {
    QuadratureSpec q;
    q.n = n;
    const CircleFn moved = pi1(g, f);
    IntertwiningResult out;
    for (const Complex a : points) {
        const TransformResult lhs = cauchy_disk(moved, a, q);
        const auto [a2, h] = omega_action(g, a);
        const TransformResult base = cauchy_disk(f, a2, q);
        const Complex rhs = std::conj(vacuum_character(h)) * base.value;
        out.residual = std::max(out.residual, std::abs(lhs.value - rhs));
        out.error_estimate = std::max({out.error_estimate, lhs.error_estimate, base.error_estimate});
    }
    return out;
}

IntertwiningResult intertwining_residual(double sigma, const Cl11Matrix& g, const TildeFn& f,
                                         const std::vector<TildePoint>& points, const QuadratureSpec& q) {
    const TildeFn moved = pisigma(sigma, g, f);
    IntertwiningResult out;
    for (const TildePoint& u : points) {
        const TransformResult lhs = cauchy_tilde_pv(sigma, moved, u, q);
        const auto [u2, h] = omega_action(g, u);
        const TransformResult base = cauchy_tilde_pv(sigma, f, u2, q);
        const EvenNumber rhs = vacuum_character(sigma, h).conj() * base.even;
        out.residual = std::max(out.residual, (lhs.even - rhs).max_abs());
        out.error_estimate = std::max({out.error_estimate, lhs.error_estimate, base.error_estimate});
    }
    return out;
}

}  // namespace r11
