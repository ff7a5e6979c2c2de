#include "r11/representations.hpp"

#include <cmath>
#include <numbers>

#include "r11/errors.hpp"

namespace r11 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Lagrange weights for nodes -1, 0, 1, 2 at offset s in [0, 1).
std::array<double, 4> cubic_weights(double s) {
    return {-s * (s - 1) * (s - 2) / 6, (s + 1) * (s - 1) * (s - 2) / 2, -(s + 1) * s * (s - 2) / 2,
            (s + 1) * s * (s - 1) / 6};
}

template <class T, class Get>
T interpolate_open(std::size_t n, double x0, double h, double x, Get get) {
    const double pos = (x - x0) / h;
    if (!(pos >= 0.0 && pos <= double(n - 1))) return T{};
    const double fl = std::floor(pos);
    const auto i = static_cast<long>(fl);
    const auto w = cubic_weights(pos - fl);
    T acc{};
    for (int k = 0; k < 4; ++k) {
        const long j = i - 1 + k;
        if (j >= 0 && j < long(n)) acc += w[k] * get(std::size_t(j));
    }
    return acc;
}

EvenNumber scaled(double s, const EvenNumber& a) { return {s * a.a1, s * a.a2}; }

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }

Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }

LieElement operator+(const LieElement& x, const LieElement& y) {
    return {x.xA + y.xA, x.xB + y.xB, x.xZ + y.xZ};
}

LieElement operator*(double s, const LieElement& x) { return {s * x.xA, s * x.xB, s * x.xZ}; }

Mat2 matrix(const LieElement& x) {
    return {-0.5 * x.xA, 0.5 * x.xB + x.xZ, 0.5 * x.xB - x.xZ, 0.5 * x.xA};
}

LieElement from_matrix(const Mat2& m) {
    const double tr = m.a + m.d;
    if (std::abs(tr) > 1e-12 * (1.0 + std::abs(m.a) + std::abs(m.d))) {
        throw DomainError("matrix is not traceless");
    }
    return {m.d - m.a, m.b + m.c, 0.5 * (m.b - m.c)};
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    return from_matrix(commutator(matrix(x), matrix(y)));
}

SL2R one_param(const LieElement& x, double t) {
    // X^2 = -det(X) I for traceless X.
    const Mat2 m = matrix(x);
    const double q = -(m.a * m.d - m.b * m.c);
    double c = 1.0;
    double s = t;
    if (q > 0.0) {
        const double r = std::sqrt(q);
        c = std::cosh(r * t);
        s = std::sinh(r * t) / r;
    } else if (q < 0.0) {
        const double r = std::sqrt(-q);
        c = std::cos(r * t);
        s = std::sin(r * t) / r;
    }
    return {c + s * m.a, s * m.b, s * m.c, c + s * m.d};
}

RepParam RepParam::discrete(int m) {
    if (m < 2) throw DomainError("discrete series needs m >= 2");
    return {Series::discrete, m, 0.0, 0.0};
}

// --- sampled functions ---------------------------------------------------

std::size_t BoundaryFunction::size() const { return domain == BoundaryDomain::hyperbolic ? 4 * n : n; }

double BoundaryFunction::spacing() const {
    if (domain == BoundaryDomain::circle) return kTwoPi / double(n);
    return 2.0 * extent / double(n - 1);
}

double BoundaryFunction::coordinate(std::size_t i) const {
    if (domain == BoundaryDomain::circle) return spacing() * double(i);
    return -extent + spacing() * double(i % n);
}

int BoundaryFunction::branch(std::size_t i) const {
    return domain == BoundaryDomain::hyperbolic ? int(i / n) : 0;
}

BoundaryFunction sample_circle(std::size_t n, const CircleFn& f) {
    BoundaryFunction out{BoundaryDomain::circle, n, 0.0, {}, {}, {}};
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = f(out.coordinate(i));
    return out;
}

BoundaryFunction sample_tilde(std::size_t n, double t_max, const TildeFn& f) {
    if (n < 2) throw DomainError("need at least two points per branch");
    BoundaryFunction out{BoundaryDomain::hyperbolic, n, t_max, {}, {}, {}};
    out.even_values.resize(4 * n);
    for (std::size_t i = 0; i < 4 * n; ++i) out.even_values[i] = f({out.branch(i), out.coordinate(i)});
    return out;
}

BoundaryFunction sample_line(std::size_t n, double extent, const LineFn& f) {
    if (n < 2) throw DomainError("need at least two points");
    BoundaryFunction out{BoundaryDomain::line, n, extent, {}, {}, {}};
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = f(out.coordinate(i));
    return out;
}

Complex interpolate(const BoundaryFunction& f, double x) {
    if (f.domain == BoundaryDomain::hyperbolic) throw DomainError("use the branch overload");
    if (f.domain == BoundaryDomain::line) {
        return interpolate_open<Complex>(f.n, -f.extent, f.spacing(), x, [&](std::size_t j) { return f.values[j]; });
    }
    const double h = f.spacing();
    const double pos = std::fmod(x, kTwoPi) / h;
    const double p = pos < 0.0 ? pos + double(f.n) : pos;
    const double fl = std::floor(p);
    const auto w = cubic_weights(p - fl);
    const long n = long(f.n);
    Complex acc{};
    for (int k = 0; k < 4; ++k) {
        const long j = ((long(fl) - 1 + k) % n + n) % n;
        acc += w[k] * f.values[std::size_t(j)];
    }
    return acc;
}

EvenNumber interpolate(const BoundaryFunction& f, const BranchCoord& v) {
    if (f.domain != BoundaryDomain::hyperbolic) throw DomainError("not a hyperbolic-circle function");
    const std::size_t base = std::size_t(v.branch) * f.n;
    return interpolate_open<EvenNumber>(f.n, -f.extent, f.spacing(), v.t,
                                        [&](std::size_t j) { return f.even_values[base + j]; });
}

CircleFn as_circle_fn(const BoundaryFunction& f) {
    return [f](double phi) { return interpolate(f, phi); };
}

TildeFn as_tilde_fn(const BoundaryFunction& f) {
    return [f](const BranchCoord& v) { return interpolate(f, v); };
}

LineFn as_line_fn(const BoundaryFunction& f) {
    return [f](double x) { return interpolate(f, x); };
}

// --- representations -----------------------------------------------------

CircleFn pi1(const SU11& g, CircleFn f) {
    const SU11 gi = g.inverse();
    return [gi, f = std::move(f)](double phi) {
        const Complex z = std::polar(1.0, phi);
        const Complex den = std::conj(gi.beta) * z + std::conj(gi.alpha);
        return f(std::arg(act_by_inverse(gi, z))) / den;
    };
}

DiskFn pim(int m, const SU11& g, DiskFn f) {
    if (m < 2) throw DomainError("discrete series needs m >= 2");
    const SU11 gi = g.inverse();
    return [m, gi, f = std::move(f)](Complex w) {
        const Complex den = std::conj(gi.beta) * w + std::conj(gi.alpha);
        return f(act_by_inverse(gi, w)) * std::pow(den, -m);
    };
}

SigmaPullback pisigma_pullback(double sigma, const Cl11Matrix& g, const BranchCoord& v) {
    const Cl11Matrix gi = g.inverse();
    const TildePoint p = boundary_point(v);
    const TildePoint image = act_by_inverse(gi, p);
    const EvenNumber left = gi.a.conj() - p.u * gi.b;
    const EvenNumber right = gi.a - gi.b * p.u;
    EvenNumber factor = pow(right, -1.0 - sigma);
    if (sigma != 0.0) factor = pow(left, sigma) * factor;
    return {factor, branch_coord_of(image)};
}

TildeFn pisigma(double sigma, const Cl11Matrix& g, TildeFn f) {
    return [sigma, g, f = std::move(f)](const BranchCoord& v) {
        const SigmaPullback pb = pisigma_pullback(sigma, g, v);
        return pb.factor * f(pb.image);
    };
}

LineFn principal(double s, const SL2R& g, LineFn f) {
    const SL2R gi = g.inverse();
    return [s, gi, f = std::move(f)](double x) {
        const double den = gi.c * x + gi.d;
        if (den == 0.0) throw SingularDenominator("c x + d = 0");
        const Complex mult = std::pow(Complex{std::abs(den)}, Complex{-1.0, -s});
        return mult * f((gi.a * x + gi.b) / den);
    };
}

SU11 as_su11(const GroupElement& g) {
    if (const auto* x = std::get_if<SU11>(&g)) return *x;
    if (const auto* x = std::get_if<SL2R>(&g)) return to_su11(*x);
    throw DomainError("Clifford realization where SU(1,1) is expected");
}

Cl11Matrix as_cl11(const GroupElement& g) {
    if (const auto* x = std::get_if<Cl11Matrix>(&g)) return *x;
    if (const auto* x = std::get_if<SL2R>(&g)) return cayley(*x);
    throw DomainError("SU(1,1) realization where the Clifford one is expected");
}

SL2R as_real(const GroupElement& g) {
    if (const auto* x = std::get_if<SL2R>(&g)) return *x;
    throw DomainError("real realization expected");
}

namespace {

template <class Eval>
BoundaryFunction resample(const BoundaryFunction& f, Eval eval) {
    BoundaryFunction out = f;
    out.flagged.clear();
    for (std::size_t i = 0; i < f.size(); ++i) {
        try {
            eval(out, i);
        } catch (const SingularDenominator&) {
            out.flagged.push_back(i);
        } catch (const NonInvertible&) {
            out.flagged.push_back(i);
        }
    }
    for (const std::size_t i : out.flagged) {
        if (out.domain == BoundaryDomain::hyperbolic) {
            out.even_values[i] = EvenNumber{};
        } else {
            out.values[i] = Complex{};
        }
    }
    return out;
}

}  // namespace

BoundaryFunction apply_pi1(const GroupElement& g, const BoundaryFunction& f) {
    if (f.domain != BoundaryDomain::circle) throw DomainError("pi_1 acts on circle functions");
    const CircleFn out_fn = pi1(as_su11(g), as_circle_fn(f));
    return resample(f, [&](BoundaryFunction& out, std::size_t i) { out.values[i] = out_fn(f.coordinate(i)); });
}

BoundaryFunction apply_pisigma(double sigma, const GroupElement& g, const BoundaryFunction& f) {
    if (f.domain != BoundaryDomain::hyperbolic) throw DomainError("pi_sigma acts on hyperbolic-circle functions");
    const TildeFn out_fn = pisigma(sigma, as_cl11(g), as_tilde_fn(f));
    return resample(f, [&](BoundaryFunction& out, std::size_t i) {
        out.even_values[i] = out_fn({f.branch(i), f.coordinate(i)});
    });
}

BoundaryFunction apply_principal(double s, const GroupElement& g, const BoundaryFunction& f) {
    if (f.domain != BoundaryDomain::line) throw DomainError("principal series acts on line functions");
    const LineFn out_fn = principal(s, as_real(g), as_line_fn(f));
    return resample(f, [&](BoundaryFunction& out, std::size_t i) { out.values[i] = out_fn(f.coordinate(i)); });
}

DiskFn apply_pim(int m, const GroupElement& g, const DiskFn& f) { return pim(m, as_su11(g), f); }

Complex vacuum_character(const SU11& h) { return 1.0 / std::conj(h.inverse().alpha); }

EvenNumber vacuum_character(double sigma, const Cl11Matrix& h) {
    const Cl11Matrix hi = h.inverse();
    return pow(hi.a.conj(), sigma) * pow(hi.a, -1.0 - sigma);
}

// --- coherent states -----------------------------------------------------

CircleFn coherent_state(Complex a) {
    const SU11 s = section_disk(a);
    return pi1(s, [](double) { return Complex{1.0}; });
}

DiskFn coherent_state(int m, Complex a) {
    const SU11 s = section_disk(a);
    return pim(m, s, [](Complex) { return Complex{1.0}; });
}

TildeFn coherent_state(double sigma, const TildePoint& u) {
    const double q = 1.0 + u.u.square();
    if (q == 0.0) throw OutOfDomain("1 + u^2 = 0");
    const double pre = (q > 0.0 ? 1.0 : -1.0) * std::sqrt(std::abs(q));
    const Vector11 uu = u.u;
    // s(u)^{-1} = sign |1+u^2|^{-1/2} [[1, -u], [u, 1]]; the scalar prefactors of
    // both factors combine into sign |1+u^2|^{1/2}, which avoids fractional
    // powers of a negative scalar.
    return [sigma, pre, uu](const BranchCoord& v) {
        const Vector11 p = boundary_point(v).u;
        const EvenNumber left = p * uu + EvenNumber{1.0};
        const EvenNumber right = uu * p + EvenNumber{1.0};
        EvenNumber val = pow(right, -1.0 - sigma);
        if (sigma != 0.0) val = pow(left, sigma) * val;
        return scaled(pre, val);
    };
}

}  // namespace r11
