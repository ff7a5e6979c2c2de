#pragma once

// Right-action generators, Dirac operators and invariant Laplacians on the
// upper half plane H, the "left" half plane of R^{1,1} and the two disks.
//
// Points are always Vector11 pairs:
//   halfplane, disk:  (Re z, Im z)
//   tilde domains:    (u1, u2) for u = u1 e1 + u2 e2; on the half plane
//                     u = e1 y + e2 x, so y = u1.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "r11/clifford.hpp"
#include "r11/moebius.hpp"
#include "r11/representations.hpp"
#include "r11/transforms.hpp"

namespace r11 {

enum class FieldDomain { halfplane, tilde_halfplane, disk, tilde_disk };
enum class Generator { A, B, Z };
enum class Side { left, right };
enum class Method { closed_form, finite_difference };

template <class Value>
struct FieldSample {
    FieldDomain domain = FieldDomain::halfplane;
    std::function<Value(const Vector11&)> evaluator;
    double h = 1e-4;
    /// Optional analytic (d/dx1, d/dx2); finite differences otherwise.
    std::function<std::array<Value, 2>(const Vector11&)> gradient;
};
using ScalarField = FieldSample<Complex>;
using CliffordField = FieldSample<Cliff11>;

/// Wraps z -> f(z) as a field on (Re z, Im z).
ScalarField complex_field(FieldDomain domain, std::function<Complex(Complex)> f, double h = 1e-4);

/// Generators normalized as diag(1, -1), [[0, 1], [1, 0]], [[0, 1], [-1, 0]].
LieElement generator(Generator x);
/// A and B on the half plane H, A and Z on the tilde half plane.  The other
/// generator fixes the base point and its flow is the identity.
bool admitted(FieldDomain domain, Generator x);

/// y coordinate of a half-plane point; throws OutOfDomain unless y > 0 (and
/// DomainError for the disks).
double height(FieldDomain domain, const Vector11& p);

/// s^{-1}(s(p) g): s(z) = [[y^{1/2}, x y^{-1/2}], [0, y^{-1/2}]] and
/// s^{-1}(g) = g i on H, (a e1 + b e2)(c e2 e1 + d)^{-1} on the tilde half plane.
Vector11 right_action(FieldDomain domain, const SL2R& g, const Vector11& p);
Vector11 flow(FieldDomain domain, const LieElement& x, const Vector11& p, double t);

/// Partial derivatives of f at p: analytic gradient if present, otherwise
/// Richardson-refined central differences with step f.h.
template <class V>
std::array<V, 2> partials(const FieldSample<V>& f, const Vector11& p);

/// [rho(X) f](p).  closed_form: 2y d/dy for A, 2y d/dx for B (H) and Z (tilde
/// half plane); finite_difference: central difference of f along the flow with
/// step h (f.h when h <= 0).  Throws DomainError for a generator not admitted.
template <class V>
V rho_generator(Generator x, const FieldSample<V>& f, const Vector11& p, Method method = Method::closed_form,
                double h = 0.0);

/// Central-difference derivative of f along the flow of an arbitrary Lie element.
template <class V>
V flow_derivative(const LieElement& x, const FieldSample<V>& f, const Vector11& p, double h);

/// H: 2y df/dz̄; disk: df/dā.
Complex dirac(const ScalarField& f, const Vector11& p);
/// Tilde half plane: left 2y (e1 d1 f + e2 d2 f), right 2y ((d1 f) e1 + (d2 f) e2),
/// d_j the derivative in the e_j component.  Tilde disk: the same without 2y.
Cliff11 dirac(const CliffordField& f, const Vector11& p, Side side = Side::right);

/// H: 4y^2 d^2 f/dz dz̄; disk: (1-|a|^2)^2 d^2 f/da dā.  Second central differences.
Complex laplacian(const ScalarField& f, const Vector11& p);
/// Tilde half plane: 4y^2 sum_j eps_j d_j^2 f; tilde disk: (1+u^2)^2 sum_j eps_j d_j^2 f,
/// with eps_j = e_j^2 taken from the algebra.
Cliff11 laplacian(const CliffordField& f, const Vector11& p);
/// sum_j eps_j d_j^2 f by second central differences.
Cliff11 wave(const CliffordField& f, const Vector11& p);

/// Largest |component| of a Clifford number.
double max_abs(const Cliff11& x);

struct BracketExperiment {
    Complex commutator{};     // rho(X) rho(Y) f - rho(Y) rho(X) f, nested differences
    Complex bracket_image{};  // rho([X, Y]) f along the flow of the bracket
};
/// Compares the commutator of two generator flows with the flow of their Lie
/// bracket on H.
BracketExperiment bracket_experiment(Generator x, Generator y, const ScalarField& f, const Vector11& p);

struct AnnihilationReport {
    std::vector<Vector11> grid;
    std::vector<double> residuals;
    double max_residual = 0.0;
    double slope_estimate = 0.0;  // log2 of max residuals at steps 2h and h
    /// Residual bound implied by the transform error estimates E through the
    /// central differences: 2 max(E) / h.
    double error_estimate = 0.0;
};

/// Evaluates the normalized Cauchy transform of f on the grid and applies the
/// Dirac operator to it by central differences with step h.  Disk: d/dā of
/// cauchy_disk(...).normalized.  Tilde: right Dirac operator in u of
/// cauchy_tilde_pv(0, ...) divided by |1+u^2|^{1/2}.
AnnihilationReport annihilation_residual(const CircleFn& f, const std::vector<Vector11>& grid,
                                         const QuadratureSpec& q = {}, double h = 1e-4);
AnnihilationReport annihilation_residual(const TildeFn& f, const std::vector<TildePoint>& grid,
                                         const QuadratureSpec& q = {}, double h = 1e-3);

std::string to_json(const AnnihilationReport& report);

}  // namespace r11
