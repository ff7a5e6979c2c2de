#pragma once

// Taylor-type expansions: the classical expansion of the disk coherent state,
// the continuous decomposition of the hyperbolic Cauchy kernel through the
// integer-part Laplace identity, its geometric-series form and the
// Mellin-type coefficient functional.

#include <string>
#include <vector>

#include "r11/clifford.hpp"
#include "r11/moebius.hpp"
#include "r11/representations.hpp"

namespace r11 {

struct TaylorSpec {
    double tail = 1e-17;                   // stop once the remaining terms fall below tail * |sum|
    std::size_t max_intervals = 1000000;   // integer-part intervals before giving up
};

// --- classical ---------------------------------------------------------------

/// V_n(a) = sqrt(1-|a|^2) conj(a)^{n-1}.
Complex classical_multiplier(Complex a, int n);

struct ClassicalExpansion {
    std::vector<Complex> partial_sums;  // S_1 .. S_N
    Complex reference{};                // coherent_state(a)(phi)
};
/// Partial sums of sum_n V_n(a) e^{i(n-1) phi}.  Throws OutOfDomain unless |a| < 1.
ClassicalExpansion classical_expand(Complex a, double phi, int N);

/// f_n = int f(phi) conj(psi_n(phi)) dphi, psi_n = e^{i(n-1) phi}, by the
/// periodic trapezoid rule.
Complex classical_coefficient(const CircleFn& f, int n, std::size_t points = 1024);

// --- Laplace identity -----------------------------------------------------------

struct LaplaceCheck {
    double lhs = 0.0;  // 1 / (t (e^{kt} - a))
    double rhs = 0.0;  // int_0^inf (a^{[p/k]} - 1)/(a - 1) e^{-tp} dp
    double error = 0.0;
    std::size_t intervals = 0;
};
/// The right side is summed exactly over the intervals [jk, (j+1)k), on which
/// the integrand is c_j e^{-tp} with c_0 = 0, c_{j+1} = a c_j + 1 (so a = 1 gives
/// c_j = j).  Throws ConvergenceError unless |a| < e^{kt} and t > 0.
LaplaceCheck laplace_table_check(double a, double k, double t, const TaylorSpec& q = {});

// --- hyperbolic ---------------------------------------------------------------

/// Idempotent components (a1, a2) of e1 u: a1 = u2 - u1, a2 = -u1 - u2.
EvenNumber e1u_components(const Vector11& u);

/// (z - e1 u)^{-1} from int_0^inf ((e1u)^{[p]} - 1)/(e1u - 1) log(z) z^{-p} dp with
/// z = e^{e12 t}, log z = e12 t.  Component c has the exponent tau_c = +-t; the
/// component with tau_c < 0 splits the integrand into its a^{[p]} part (summed
/// over intervals) and the constant part, whose Laplace integral is continued
/// from tau > 0.  Throws ConvergenceError unless |a1| < e^t and |a2| < e^{-t},
/// t != 0, and NonInvertible when a component of e1 u equals 1.
EvenNumber hyperbolic_expand(const TildePoint& u, double t, const TaylorSpec& q = {});

struct GeometricExpansion {
    std::vector<EvenNumber> partial_sums;  // J + 1 sums
    double ratio = 0.0;                    // |last term| / |previous term|
};
/// sum_{j <= J} (e1 u)^j z^{-j-1}.  Throws ConvergenceError unless |a1| e^{-t} < 1
/// and |a2| e^{t} < 1.
GeometricExpansion geometric_expand(const TildePoint& u, double t, int J);

struct MellinResult {
    EvenNumber value{};
    std::vector<std::string> flags;  // "truncated_tail" when f z^{1-p} is not small at +-t_max
};
/// f_p = sum_branches int log(z) z^{-p} dz f, dz = e12 z dt, i.e.
/// int t z^{1-p} f(t) dt per branch (log(z) e12 = t), composite Simpson on the samples.
MellinResult mellin_coefficient(const BoundaryFunction& f, double p);

// --- coefficient tables -----------------------------------------------------------

struct TaylorCoefficients {
    enum class Mode { discrete, continuous };
    Mode mode = Mode::discrete;
    std::vector<double> index;  // n or p
    std::vector<Complex> values;
    std::vector<EvenNumber> even_values;
};
TaylorCoefficients classical_coefficients(const CircleFn& f, int N, std::size_t points = 1024);
TaylorCoefficients mellin_coefficients(const BoundaryFunction& f, const std::vector<double>& p_grid);

/// "n,re,im" or "p,a1,a2" rows with 17 significant digits.
std::string to_csv(const TaylorCoefficients& c);

}  // namespace r11
