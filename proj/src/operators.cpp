#include "r11/operators.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numbers>

#include "r11/errors.hpp"

namespace r11 {

namespace {

bool is_tilde(FieldDomain d) { return d == FieldDomain::tilde_halfplane || d == FieldDomain::tilde_disk; }

Vector11 shifted(const Vector11& p, int j, double h) { return j == 0 ? Vector11{p.u1 + h, p.u2} : Vector11{p.u1, p.u2 + h}; }

template <class V>
V central(const FieldSample<V>& f, const Vector11& p, int j, double h) {
    return (f.evaluator(shifted(p, j, h)) - f.evaluator(shifted(p, j, -h))) * (0.5 / h);
}

template <class V>
V second(const FieldSample<V>& f, const Vector11& p, int j, double h) {
    return (f.evaluator(shifted(p, j, h)) - 2.0 * f.evaluator(p) + f.evaluator(shifted(p, j, -h))) * (1.0 / (h * h));
}

double epsilon(int j) {
    const Cliff11 e = j == 0 ? Cliff11::e1() : Cliff11::e2();
    return (e * e).c0;
}

}  // namespace

ScalarField complex_field(FieldDomain domain, std::function<Complex(Complex)> f, double h) {
    ScalarField out;
    out.domain = domain;
    out.h = h;
    out.evaluator = [f = std::move(f)](const Vector11& p) { return f(Complex{p.u1, p.u2}); };
    return out;
}

LieElement generator(Generator x) {
    switch (x) {
        case Generator::A: return -2.0 * LieElement::A();
        case Generator::B: return 2.0 * LieElement::B();
        case Generator::Z: return LieElement::Z();
    }
    return {};
}

bool admitted(FieldDomain domain, Generator x) {
    switch (domain) {
        case FieldDomain::halfplane: return x != Generator::Z;
        case FieldDomain::tilde_halfplane: return x != Generator::B;
        default: return false;
    }
}

double height(FieldDomain domain, const Vector11& p) {
    double y = 0.0;
    switch (domain) {
        case FieldDomain::halfplane: y = p.u2; break;
        case FieldDomain::tilde_halfplane: y = p.u1; break;
        default: throw DomainError("generators act on the half planes only");
    }
    if (!(y > 0.0)) throw OutOfDomain("half-plane point needs y > 0");
    return y;
}

Vector11 right_action(FieldDomain domain, const SL2R& g, const Vector11& p) {
    const double y = height(domain, p);
    const double x = domain == FieldDomain::halfplane ? p.u1 : p.u2;
    const double r = std::sqrt(y);
    const SL2R m = SL2R{r, x / r, 0.0, 1.0 / r} * g;
    if (domain == FieldDomain::halfplane) {
        const Complex z = act_by_inverse(m, Complex{0.0, 1.0});
        return {z.real(), z.imag()};
    }
    return act_tilde_halfplane_by_inverse(m, Vector11{1.0, 0.0});
}

Vector11 flow(FieldDomain domain, const LieElement& x, const Vector11& p, double t) {
    return right_action(domain, one_param(x, t), p);
}

template <class V>
std::array<V, 2> partials(const FieldSample<V>& f, const Vector11& p) {
    if (f.gradient) return f.gradient(p);
    std::array<V, 2> out;
    for (int j = 0; j < 2; ++j) {
        const V coarse = central(f, p, j, f.h);
        const V fine = central(f, p, j, 0.5 * f.h);
        out[j] = (4.0 * fine - coarse) * (1.0 / 3.0);
    }
    return out;
}

template <class V>
V flow_derivative(const LieElement& x, const FieldSample<V>& f, const Vector11& p, double h) {
    const V plus = f.evaluator(flow(f.domain, x, p, h));
    const V minus = f.evaluator(flow(f.domain, x, p, -h));
    return (plus - minus) * (0.5 / h);
}

template <class V>
V rho_generator(Generator x, const FieldSample<V>& f, const Vector11& p, Method method, double h) {
    if (!admitted(f.domain, x)) throw DomainError("generator not admitted on this domain");
    const double y = height(f.domain, p);
    if (method == Method::finite_difference) return flow_derivative(generator(x), f, p, h > 0.0 ? h : f.h);
    const auto d = partials(f, p);
    // Index of the y coordinate: Im z on H, the e1 component on the tilde half plane.
    const int iy = f.domain == FieldDomain::halfplane ? 1 : 0;
    return (2.0 * y) * (x == Generator::A ? d[iy] : d[1 - iy]);
}

template std::array<Complex, 2> partials(const ScalarField&, const Vector11&);
template std::array<Cliff11, 2> partials(const CliffordField&, const Vector11&);
template Complex flow_derivative(const LieElement&, const ScalarField&, const Vector11&, double);
template Cliff11 flow_derivative(const LieElement&, const CliffordField&, const Vector11&, double);
template Complex rho_generator(Generator, const ScalarField&, const Vector11&, Method, double);
template Cliff11 rho_generator(Generator, const CliffordField&, const Vector11&, Method, double);

Complex dirac(const ScalarField& f, const Vector11& p) {
    if (is_tilde(f.domain)) throw DomainError("scalar Dirac operator needs the disk or H");
    const auto d = partials(f, p);
    const Complex dbar = 0.5 * (d[0] + Complex{0.0, 1.0} * d[1]);
    if (f.domain == FieldDomain::disk) return dbar;
    return 2.0 * height(f.domain, p) * dbar;
}

Cliff11 dirac(const CliffordField& f, const Vector11& p, Side side) {
    if (!is_tilde(f.domain)) throw DomainError("Clifford Dirac operator needs a tilde domain");
    const auto d = partials(f, p);
    const Cliff11 e1 = Cliff11::e1();
    const Cliff11 e2 = Cliff11::e2();
    const Cliff11 v = side == Side::left ? e1 * d[0] + e2 * d[1] : d[0] * e1 + d[1] * e2;
    if (f.domain == FieldDomain::tilde_disk) return v;
    return 2.0 * height(f.domain, p) * v;
}

Complex laplacian(const ScalarField& f, const Vector11& p) {
    if (is_tilde(f.domain)) throw DomainError("scalar Laplacian needs the disk or H");
    const Complex ddbar = 0.25 * (second(f, p, 0, f.h) + second(f, p, 1, f.h));
    if (f.domain == FieldDomain::disk) {
        const double w = 1.0 - p.u1 * p.u1 - p.u2 * p.u2;
        if (!(w > 0.0)) throw OutOfDomain("|a| must be < 1");
        return w * w * ddbar;
    }
    const double y = height(f.domain, p);
    return 4.0 * y * y * ddbar;
}

Cliff11 wave(const CliffordField& f, const Vector11& p) {
    return epsilon(0) * second(f, p, 0, f.h) + epsilon(1) * second(f, p, 1, f.h);
}

Cliff11 laplacian(const CliffordField& f, const Vector11& p) {
    if (!is_tilde(f.domain)) throw DomainError("Clifford Laplacian needs a tilde domain");
    const Cliff11 w = wave(f, p);
    if (f.domain == FieldDomain::tilde_disk) {
        const double s = 1.0 + p.square();
        return s * s * w;
    }
    const double y = height(f.domain, p);
    return 4.0 * y * y * w;
}

double max_abs(const Cliff11& x) {
    return std::max({std::abs(x.c0), std::abs(x.c1), std::abs(x.c2), std::abs(x.c12)});
}

BracketExperiment bracket_experiment(Generator x, Generator y, const ScalarField& f, const Vector11& p) {
    if (f.domain != FieldDomain::halfplane) throw DomainError("bracket experiment runs on H");
    const double h = std::max(f.h, 1e-3);  // nested differences
    const auto along = [&](Generator g, const ScalarField& inner) {
        ScalarField out = inner;
        out.gradient = nullptr;
        out.evaluator = [g, inner, h](const Vector11& q) { return flow_derivative(generator(g), inner, q, h); };
        return out;
    };
    BracketExperiment r;
    r.commutator = along(x, along(y, f)).evaluator(p) - along(y, along(x, f)).evaluator(p);
    r.bracket_image = flow_derivative(bracket(generator(x), generator(y)), f, p, h);
    return r;
}

namespace {

template <class Eval>
double disk_residual(const Eval& F, const Vector11& p, double h) {
    const Complex dx = (F(Complex{p.u1 + h, p.u2}) - F(Complex{p.u1 - h, p.u2})) / (2.0 * h);
    const Complex dy = (F(Complex{p.u1, p.u2 + h}) - F(Complex{p.u1, p.u2 - h})) / (2.0 * h);
    return std::abs(0.5 * (dx + Complex{0.0, 1.0} * dy));
}

double slope(double coarse, double fine) {
    return coarse > 0.0 && fine > 0.0 ? std::log2(coarse / fine) : 0.0;
}

}  // namespace

AnnihilationReport annihilation_residual(const CircleFn& f, const std::vector<Vector11>& grid, const QuadratureSpec& q,
                                         double h) {
    AnnihilationReport r;
    r.grid = grid;
    double coarse_max = 0.0;
    const auto F = [&](Complex a) {
        const TransformResult t = cauchy_disk(f, a, q);
        r.error_estimate = std::max(r.error_estimate, t.error_estimate / (2.0 * std::numbers::pi));
        return t.normalized;
    };
    for (const Vector11& p : grid) {
        const double res = disk_residual(F, p, h);
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
        coarse_max = std::max(coarse_max, disk_residual(F, p, 2.0 * h));
    }
    r.slope_estimate = slope(coarse_max, r.max_residual);
    r.error_estimate *= 2.0 / h;
    return r;
}

AnnihilationReport annihilation_residual(const TildeFn& f, const std::vector<TildePoint>& grid, const QuadratureSpec& q,
                                         double h) {
    AnnihilationReport r;
    double coarse_max = 0.0;
    for (const TildePoint& u : grid) {
        r.grid.push_back(u.u);
        CliffordField F;
        F.domain = FieldDomain::tilde_disk;
        F.evaluator = [&](const Vector11& v) {
            const TransformResult t = cauchy_tilde_pv(0.0, f, TildePoint{u.sheet, v}, q);
            const double pre = std::sqrt(std::abs(1.0 + v.square()));
            r.error_estimate = std::max(r.error_estimate, t.error_estimate / pre);
            return t.even.cliff() * (1.0 / pre);
        };
        const Cliff11 e1 = Cliff11::e1();
        const Cliff11 e2 = Cliff11::e2();
        const auto residual = [&](double step) {
            return max_abs(central(F, u.u, 0, step) * e1 + central(F, u.u, 1, step) * e2);
        };
        const double res = residual(h);
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
        coarse_max = std::max(coarse_max, residual(2.0 * h));
    }
    r.slope_estimate = slope(coarse_max, r.max_residual);
    r.error_estimate *= 2.0 / h;
    return r;
}

std::string to_json(const AnnihilationReport& report) {
    nlohmann::json grid = nlohmann::json::array();
    for (const Vector11& p : report.grid) grid.push_back({p.u1, p.u2});
    const nlohmann::json j{{"grid", grid},
                           {"max_residual", report.max_residual},
                           {"slope_estimate", report.slope_estimate}};
    return j.dump();
}

}  // namespace r11
