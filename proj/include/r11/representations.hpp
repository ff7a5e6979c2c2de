#pragma once

// sl(2,R), one-parameter subgroups and the concrete representations on the
// circle, the disk, the hyperbolic unit circle and the real line.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "r11/clifford.hpp"
#include "r11/moebius.hpp"

namespace r11 {

/// Real 2x2 matrix, not necessarily unimodular.
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;
};
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 commutator(const Mat2& x, const Mat2& y);

/// x_A A + x_B B + x_Z Z with A = diag(-1, 1)/2, B = [[0, 1], [1, 0]]/2,
/// Z = [[0, 1], [-1, 0]].
struct LieElement {
    double xA = 0, xB = 0, xZ = 0;

    static LieElement A() { return {1, 0, 0}; }
    static LieElement B() { return {0, 1, 0}; }
    static LieElement Z() { return {0, 0, 1}; }
};
LieElement operator+(const LieElement& x, const LieElement& y);
LieElement operator*(double s, const LieElement& x);

Mat2 matrix(const LieElement& x);
/// Decomposes a traceless matrix; throws DomainError otherwise.
LieElement from_matrix(const Mat2& m);
LieElement bracket(const LieElement& x, const LieElement& y);

/// exp(t X).
SL2R one_param(const LieElement& x, double t);

/// Representation family.
struct RepParam {
    enum class Series { mock, discrete, hyperbolic, principal };
    Series series = Series::mock;
    int m = 2;           // discrete
    double sigma = 0.0;  // hyperbolic
    double s = 0.0;      // principal

    static RepParam mock() { return {}; }
    static RepParam discrete(int m);
    static RepParam hyperbolic(double sigma) { return {Series::hyperbolic, 2, sigma, 0.0}; }
    static RepParam principal(double s) { return {Series::principal, 2, 0.0, s}; }
};

// --- pointwise function spaces ------------------------------------------

/// Function of the angle on the unit circle.
using CircleFn = std::function<Complex(double phi)>;
/// Function on the unit disk (or the half plane).
using DiskFn = std::function<Complex(Complex w)>;
/// Clifford-valued function on the hyperbolic unit circle.
using TildeFn = std::function<EvenNumber(const BranchCoord& v)>;
/// Function on the real line.
using LineFn = std::function<Complex(double x)>;

// --- sampled boundary functions -----------------------------------------

enum class BoundaryDomain { circle, hyperbolic, line };

/// Values on a uniform grid.
///  circle:     phi_j = 2 pi j / n, j < n
///  hyperbolic: t_j = -extent + 2 extent j / (n - 1) on each of the four
///              branches, index = branch * n + j
///  line:       x_j = -extent + 2 extent j / (n - 1)
/// Grid points where an action was undefined are listed in `flagged` and
/// hold zero.
struct BoundaryFunction {
    BoundaryDomain domain = BoundaryDomain::circle;
    std::size_t n = 0;
    double extent = 0.0;
    std::vector<Complex> values;
    std::vector<EvenNumber> even_values;
    std::vector<std::size_t> flagged;

    [[nodiscard]] std::size_t size() const;
    /// Angle, t or x of grid point i.
    [[nodiscard]] double coordinate(std::size_t i) const;
    /// Branch tag (hyperbolic only).
    [[nodiscard]] int branch(std::size_t i) const;
    [[nodiscard]] double spacing() const;
};

BoundaryFunction sample_circle(std::size_t n, const CircleFn& f);
BoundaryFunction sample_tilde(std::size_t n, double t_max, const TildeFn& f);
BoundaryFunction sample_line(std::size_t n, double extent, const LineFn& f);

/// Four-point cubic interpolation: periodic on the circle, zero beyond the
/// truncation on branches and the line.
Complex interpolate(const BoundaryFunction& f, double coordinate);
EvenNumber interpolate(const BoundaryFunction& f, const BranchCoord& v);

CircleFn as_circle_fn(const BoundaryFunction& f);
TildeFn as_tilde_fn(const BoundaryFunction& f);
LineFn as_line_fn(const BoundaryFunction& f);

// --- representations ------------------------------------------------------
// Each takes g and uses the entries of g^{-1} in the displayed formula.

/// [pi_1(g) f](e^{i phi}) = (conj(beta) e^{i phi} + conj(alpha))^{-1} f(g^{-1} e^{i phi}).
CircleFn pi1(const SU11& g, CircleFn f);
/// [pi_m(g) f](w) = (conj(beta) w + conj(alpha))^{-m} f(g^{-1} w).
DiskFn pim(int m, const SU11& g, DiskFn f);
/// [pi_sigma(g) f](v) = (-v b + conj(a))^sigma (-b v + a)^{-1-sigma} f(g^{-1} v).
TildeFn pisigma(double sigma, const Cl11Matrix& g, TildeFn f);
/// [pi(g) f](x) = |c x + d|^{-1-is} f((a x + b)/(c x + d)).
LineFn principal(double s, const SL2R& g, LineFn f);

/// Multiplier and argument of pi_sigma at one point; throws
/// SingularDenominator or DomainError.
struct SigmaPullback {
    EvenNumber factor;
    BranchCoord image;
};
SigmaPullback pisigma_pullback(double sigma, const Cl11Matrix& g, const BranchCoord& v);

/// Sampled versions: resample on the grid of f; undefined points are flagged.
BoundaryFunction apply_pi1(const GroupElement& g, const BoundaryFunction& f);
BoundaryFunction apply_pisigma(double sigma, const GroupElement& g, const BoundaryFunction& f);
BoundaryFunction apply_principal(double s, const GroupElement& g, const BoundaryFunction& f);
/// Disk functions are kept as evaluators.
DiskFn apply_pim(int m, const GroupElement& g, const DiskFn& f);

/// Converts Real to SU11; throws DomainError for Cl11 input.
SU11 as_su11(const GroupElement& g);
/// Converts Real to Cl11; throws DomainError for SU11 input.
Cl11Matrix as_cl11(const GroupElement& g);
SL2R as_real(const GroupElement& g);

/// Eigenvalue of pi(h) on the vacuum for a subgroup element h = diag(e^{i psi}, e^{-i psi})
/// of SU(1,1): conj(alpha of h^{-1})^{-1} = e^{-i psi}.
Complex vacuum_character(const SU11& h);
/// Same for pi_sigma and h = diag(w, w): w^{1+2 sigma}.
EvenNumber vacuum_character(double sigma, const Cl11Matrix& h);

// --- coherent states ------------------------------------------------------

/// pi_1(s(a)) f0 = sqrt(1 - |a|^2) / (1 - conj(a) e^{i phi}).
CircleFn coherent_state(Complex a);
/// pi_m(s(a)) f0 = (1 - |a|^2)^{m/2} (1 - conj(a) w)^{-m}.
DiskFn coherent_state(int m, Complex a);
/// pi_sigma(s(u)) f0 = sign(1 + u^2) |1 + u^2|^{1/2} (v u + 1)^sigma (u v + 1)^{-1-sigma}.
TildeFn coherent_state(double sigma, const TildePoint& u);

}  // namespace r11
